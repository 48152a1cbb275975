#pragma once

// Kummer pairs (L, g) with L^m = <g>, the algebra O + L for m = 2, and
// triviality of the corresponding mu_2-torsor over O.

#include <optional>
#include <string>

#include "genuslab/coord_ring.hpp"
#include "genuslab/error.hpp"

namespace genuslab {

/// h : O -> L^m is recorded as the generator g = h(1).
struct KummerPair {
  int m = 2;
  Ideal l;
  RingElement g;
  Ideal power;       // L^m as computed by ideal_power
  bool leading_square = false;  // class of the leading coefficient of g in F_q^x / squares
  std::string to_string() const;
};

/// Finds g through is_principal(L^m). Throws DomainError when L^m is not
/// certified principal within the bound (the verdict is in the message).
KummerPair make_kummer_pair(const Ideal& l, int m, int degree_bound = 8);
/// Checks a given generator: L^m = <g> must be certified within the bound.
KummerPair make_kummer_pair(const Ideal& l, int m, const RingElement& g, int degree_bound = 8);

/// r + l with r in O and l in L.
struct AlgebraElement {
  RingElement r;
  RingElement l;
  bool operator==(const AlgebraElement& o) const { return r == o.r && l == o.l; }
  std::string to_string() const { return "(" + r.to_string() + ", " + l.to_string() + ")"; }
};

/// O + L with (0, l1)(0, l2) = (l1 l2 / g, 0).
class TorsorAlgebra {
 public:
  /// Needs m = 2.
  explicit TorsorAlgebra(KummerPair pair);
  const KummerPair& pair() const { return pair_; }
  AlgebraElement one() const;
  /// Checks l in L within the bound; throws DomainError otherwise.
  AlgebraElement element(const RingElement& r, const RingElement& l, int degree_bound = 8) const;
  /// (r1 r2 + l1 l2 / g, r1 l2 + r2 l1). Throws DomainError ("malformed pair")
  /// when g does not divide l1 l2.
  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;

 private:
  KummerPair pair_;
};

enum class Triviality { Trivial, Nontrivial, Undetermined };
std::string to_string(Triviality t);

struct TorsorTriviality {
  Triviality verdict = Triviality::Undetermined;
  Verdict principal = Verdict::NoWitnessWithinBound;
  std::optional<RingElement> root;  // sqrt(g) when it lies in O
  std::string splitting;             // extension that trivialises the torsor
  std::string note;
};

/// m = 2 only. Trivial iff L = <t> and g is a square in O (then g = u t^2
/// with u a square unit). A non-principal L, or a non-square g, gives a
/// nontrivial torsor, split by adjoining sqrt(g).
TorsorTriviality torsor_trivial_over_ring(const KummerPair& pair, int degree_bound = 8);

}  // namespace genuslab
