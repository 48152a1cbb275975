#pragma once

// Quadratic spaces (O^n, q) given by a symmetric Gram matrix B over the
// coordinate ring O, with q(v) = 1/2 v^T B v so that
// B(u, v) = q(u + v) - q(u) - q(v).

#include <optional>
#include <string>
#include <vector>

#include "genuslab/coord_ring.hpp"
#include "genuslab/group_rep.hpp"

namespace genuslab {

using RingMatrix = Matrix<RingElement>;

class GramForm {
 public:
  /// Throws DomainError for non-square or non-symmetric input.
  GramForm(const CoordRing& ring, RingMatrix gram);
  static GramForm from_constants(const CoordRing& ring, const FieldMatrix& gram);

  const CoordRing& ring() const { return ring_; }
  const RingMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const RingElement& det() const { return *det_; }
  /// det is a unit of O, i.e. a nonzero constant.
  bool regular() const { return is_unit(*det_); }
  bool is_constant() const;
  /// The Gram matrix over F_q; throws DomainError unless is_constant().
  FieldMatrix constant_gram() const;

  RingElement bilinear(const std::vector<RingElement>& u, const std::vector<RingElement>& v) const;
  /// 1/2 v^T B v
  RingElement value(const std::vector<RingElement>& v) const;
  std::string to_string() const;

 private:
  CoordRing ring_;
  RingMatrix gram_;
  std::optional<RingElement> det_;
};

RingElement determinant(const RingMatrix& m);

struct Isotropy {
  Verdict verdict = Verdict::NoWitnessWithinBound;  // over O
  std::optional<std::vector<RingElement>> witness;
  Verdict fiber = Verdict::NoWitnessWithinBound;    // over F_q
  Verdict generic = Verdict::NoWitnessWithinBound;  // over the function field K
  std::uint64_t searched = 0;
  std::string note;
};

/// Constant forms: exhaustive search of F_q^n; the lexicographically least
/// isotropic vector is returned. A constant witness lifts to O. Without one,
/// the form is anisotropic over F_q, so of rank <= 2, and since F_q is
/// algebraically closed in K it stays anisotropic over K and over O.
/// Non-constant forms: only constant vectors are tried (no No answer).
/// Throws DomainError on irregular forms, BudgetExceeded when q^n > budget.
Isotropy is_isotropic(const GramForm& f, std::uint64_t budget = 10'000'000);

struct DiscriminantModule {
  RingElement det;
  bool square_class = false;  // det in (F_q^x)^2
  std::string module;         // descriptor of the rank-1 module (free here)
  std::string to_string() const;
};

/// det B modulo squares of units. Throws DomainError on irregular forms.
DiscriminantModule discriminant(const GramForm& f);

/// rho(g)^T B rho(g) = B for every generator. Throws DomainError on a
/// dimension or field mismatch.
bool is_gamma_form(const GramForm& f, const GroupRep& rep);

struct IsometryResult {
  Verdict verdict = Verdict::No;
  std::optional<FieldMatrix> witness;  // lexicographically least, column-major
  std::uint64_t searched = 0;
  std::string note;
};

/// Exhaustive search for A in GL_n(F_q) with A^T B1 A = B2, built column by
/// column: column j solves the linear conditions a_i^T B1 a_j = B2_ij (i < j)
/// and is then tested against the diagonal entry. Identical Gram matrices get
/// the identity as witness. Requires constant forms of equal rank; throws
/// BudgetExceeded when q^(n(n+1)/2) exceeds the budget.
IsometryResult fiber_isometry(const GramForm& f1, const GramForm& f2, std::uint64_t budget = 10'000'000,
                              unsigned workers = 1);

/// All isometries found by the same search, in the same order.
std::vector<FieldMatrix> all_fiber_isometries(const GramForm& f1, const GramForm& f2,
                                              std::uint64_t budget = 10'000'000);

struct GammaIsometryResult {
  Verdict verdict = Verdict::No;
  std::optional<FieldMatrix> witness;  // least by matrix_less
  std::vector<FieldMatrix> witnesses;  // all of them, sorted
  std::size_t centralizer_dimension = 0;
  std::string note;
};

/// Searches the centralizer of rep for A with A^T B1 A = B2. Throws
/// DomainError unless both forms are constant Gamma-forms.
GammaIsometryResult fiber_gamma_isometry(const GramForm& f1, const GramForm& f2, const GroupRep& rep,
                                         std::uint64_t budget = 10'000'000, unsigned workers = 1);

}  // namespace genuslab
