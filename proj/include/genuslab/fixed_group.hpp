#pragma once

// Gamma-fixed points of the orthogonal group of a constant form at the
// F_q fiber, found by enumerating the centralizer of rho.

#include <cstdint>
#include <string>
#include <vector>

#include "genuslab/quad_form.hpp"

namespace genuslab {

struct FixedGroupReport {
  std::string field;
  std::size_t dimension_d = 0;
  std::uint64_t budget_used = 0;  // q^d
  std::uint64_t full_order = 0;
  std::uint64_t det1_order = 0;
  bool closure_certified = false;  // product, inverse and identity checked on the whole set
  bool commutes_with_closure = false;
  bool abelian = false;
  std::vector<FieldMatrix> elements;  // sorted by matrix_less
  double elapsed_ms = 0;
};

/// Throws DomainError for non-constant forms or mismatched rep, and
/// BudgetExceeded (carrying q^d) when the centralizer is too large.
FixedGroupReport fixed_orthogonal_order(const GramForm& f, const GroupRep& rep,
                                        std::uint64_t budget = 10'000'000, unsigned workers = 1);

/// Order of the closure of the generators.
std::uint64_t generated_group_order(const GroupRep& rep, std::uint64_t budget = 10'000'000);

/// |O(V)(F_q)| for a nondegenerate form of rank n <= 3 with determinant det:
/// 2 for n = 1, 2(q - e) for n = 2 with e = +1 iff -det is a square, and
/// 2q(q^2 - 1) for n = 3. Throws DomainError otherwise.
std::uint64_t classical_orthogonal_order(const FieldSpec& field, std::size_t n, const FieldElement& det);

/// Every M in M_n(F_q) with M^T B M = B by running through all q^(n^2)
/// matrices. Throws BudgetExceeded when q^(n^2) > budget.
std::uint64_t brute_force_orthogonal_order(const FieldMatrix& b, std::uint64_t budget = 10'000'000);

/// Order 2(q - 1) of G_m(F_q) x {+-1}, the det-1 fixed group predicted when
/// Gamma = S_{n-2} acts by permutations on the last n - 2 coordinates of 1_n.
std::uint64_t gm_shape_det1_prediction(const FieldSpec& field);

}  // namespace genuslab
