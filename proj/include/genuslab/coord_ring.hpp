#pragma once

// The coordinate ring O = F_q[x, y]/(y^2 - f(x)) of an affine elliptic curve,
// its ideals, and bounded-degree membership / principality / square tests.
//
// Degrees are pole orders at infinity: deg x = 2, deg y = 3, so the F_q-span of
// elements of degree <= B has the monomial basis 1, x, y, x^2, xy, ... and
// dimension B (B >= 1). Degree bounds on cofactors refer to this degree.
//
// The product of ideals L * L stands in for L (x) L throughout; for invertible
// ideals of a Dedekind domain the two are canonically isomorphic.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/curve.hpp"
#include "genuslab/polynomial.hpp"

namespace genuslab {

class RingElement;

class CoordRing {
 public:
  explicit CoordRing(const CurveData& curve);

  const CurveData& curve() const { return data_->curve; }
  const FieldSpec& field() const { return data_->curve.field; }
  /// x^3 + a x + b as a polynomial.
  const Polynomial& f() const { return data_->f; }

  RingElement zero() const;
  RingElement one() const;
  RingElement constant(const FieldElement& c) const;
  RingElement constant(std::int64_t c) const;
  RingElement x() const;
  RingElement y() const;
  /// a(x) + b(x) y
  RingElement element(const Polynomial& a, const Polynomial& b) const;
  /// Basis monomial of the given pole order: 1, x^k (even), x^k y (odd >= 3).
  RingElement monomial(int pole_order) const;

  bool operator==(const CoordRing& o) const { return data_ == o.data_ || curve() == o.curve(); }

 private:
  struct Data {
    CurveData curve;
    Polynomial f;
  };
  std::shared_ptr<const Data> data_;
};

/// a(x) + b(x) y in canonical form (no y^2 occurs).
class RingElement {
 public:
  RingElement(const CoordRing& ring, Polynomial a, Polynomial b);

  const CoordRing& ring() const { return ring_; }
  const Polynomial& a() const { return a_; }
  const Polynomial& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return b_.is_zero() && a_.is_constant(); }
  /// Pole order at infinity; -1 for zero.
  int degree() const;
  /// Coefficient of the monomial of top degree.
  FieldElement leading() const;
  /// Scaled so leading() is 1; zero stays zero.
  RingElement monic() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled(const FieldElement& c) const;

  /// a - b y
  RingElement conjugate() const;
  /// a^2 - b^2 f, the norm down to F_q[x].
  Polynomial norm() const;
  /// Value at an affine point of the curve.
  FieldElement eval(const CurvePoint& p) const;
  /// Coordinates in the monomial basis, indexed by pole order 0..max_degree.
  std::vector<FieldElement> coords(int max_degree) const;

  bool operator==(const RingElement& o) const { return a_ == o.a_ && b_ == o.b_ && ring_ == o.ring_; }
  /// Degree first, then coordinates from the top.
  bool operator<(const RingElement& o) const;

  std::string to_string() const;

 private:
  CoordRing ring_;
  Polynomial a_;
  Polynomial b_;
};

/// Nonzero constant norm <=> unit; units are exactly F_q^x.
bool is_unit(const RingElement& g);
/// h / g when g divides h in O, via h * conj(g) / N(g).
std::optional<RingElement> exact_divide(const RingElement& h, const RingElement& g);

struct UnitGroupReport {
  std::uint64_t order = 0;                // |F_q^x|
  std::uint64_t square_class_count = 0;   // |O^x / (O^x)^2|
  std::string description;
};

/// O^x = F_q^x: a unit has constant norm, and deg a^2 (even) never cancels
/// deg b^2 f (odd), which forces b = 0 and a constant.
UnitGroupReport units(const CoordRing& ring);

enum class Verdict { Yes, No, NoWitnessWithinBound };
std::string to_string(Verdict v);

/// An ideal of O given by generators, normalised (monic, deduplicated, sorted).
class Ideal {
 public:
  /// Throws DomainError if no generator is nonzero.
  explicit Ideal(std::vector<RingElement> generators);
  static Ideal unit(const CoordRing& ring) { return Ideal({ring.one()}); }
  /// <x - x0, y - y0> for an affine point; <1> for infinity.
  static Ideal of_point(const CoordRing& ring, const CurvePoint& p);

  const CoordRing& ring() const { return gens_.front().ring(); }
  const std::vector<RingElement>& generators() const { return gens_; }
  int max_degree() const;

  bool operator==(const Ideal& o) const { return gens_ == o.gens_; }
  std::string to_string() const;

 private:
  std::vector<RingElement> gens_;
};

Ideal ideal_product(const Ideal& l1, const Ideal& l2);
Ideal ideal_power(const Ideal& l, int m);

struct Membership {
  Verdict verdict = Verdict::NoWitnessWithinBound;
  std::vector<RingElement> cofactors;  // g = sum cofactors[i] * generators[i]
  std::string note;
};

/// Searches cofactors of degree <= degree_bound by exact linear algebra.
/// Never answers No: a failed bounded search is NoWitnessWithinBound.
Membership ideal_membership(const RingElement& g, const Ideal& l, int degree_bound);

struct IdealComparison {
  Verdict verdict = Verdict::NoWitnessWithinBound;
  std::string note;
};

/// Yes needs both containments within the bound; No is certified when the
/// orders of vanishing at some rational point differ.
IdealComparison ideal_equal(const Ideal& l1, const Ideal& l2, int degree_bound);

/// Order of vanishing of g at an affine rational point (exact: it never
/// exceeds deg g for g != 0). Throws DomainError for g = 0.
int order_at(const RingElement& g, const CurvePoint& p);

struct IdealClass {
  bool determined = false;
  CurvePoint point;  // the class in Pic(O) = C(F_q) when determined
  std::vector<std::pair<CurvePoint, int>> divisor;  // rational support with multiplicities
  std::string note;
};

/// Class of L under Pic(O) = C(F_q), determined when L equals the product of
/// the rational point ideals in its support (verified within the bound).
IdealClass ideal_class(const Ideal& l, int degree_bound);

struct Principality {
  Verdict verdict = Verdict::NoWitnessWithinBound;
  std::optional<RingElement> generator;
  IdealClass ideal_class;
  std::string route;  // "point-correspondence" or "direct-search"
  std::string note;
};

/// Point route first: the class is trivial iff L is principal; a generator is
/// the unique (up to scalars) function in L(d inf) with the divisor of L.
/// Yes always carries a verified two-sided containment witness.
Principality is_principal(const Ideal& l, int degree_bound);

struct SquareRoot {
  Verdict verdict = Verdict::No;
  std::optional<RingElement> root;
  std::string note;
};

/// Exact: (c + d y)^2 = g is solved through the norm, N(g) = (c^2 - d^2 f)^2,
/// which reduces everything to square roots of polynomials.
SquareRoot is_square_in_ring(const RingElement& g);

}  // namespace genuslab
