#include "genuslab/kummer.hpp"

#include "genuslab/error.hpp"

namespace genuslab {

std::string KummerPair::to_string() const {
  return "(L = " + l.to_string() + ", m = " + std::to_string(m) + ", g = " + g.to_string() + ")";
}

namespace {

KummerPair finish(const Ideal& l, int m, const RingElement& g, Ideal power) {
  return KummerPair{m, l, g, std::move(power), is_square(g.leading()).square};
}

}  // namespace

KummerPair make_kummer_pair(const Ideal& l, int m, int degree_bound) {
  if (m < 1) throw DomainError("Kummer degree must be positive");
  auto power = ideal_power(l, m);
  const auto pr = is_principal(power, degree_bound);
  if (pr.verdict != Verdict::Yes)
    throw DomainError("L^" + std::to_string(m) + " = " + power.to_string() + " is not principal (" +
                      genuslab::to_string(pr.verdict) + (pr.note.empty() ? "" : ": " + pr.note) + ")");
  return finish(l, m, *pr.generator, std::move(power));
}

KummerPair make_kummer_pair(const Ideal& l, int m, const RingElement& g, int degree_bound) {
  if (m < 1) throw DomainError("Kummer degree must be positive");
  if (g.is_zero()) throw DomainError("generator must be nonzero");
  auto power = ideal_power(l, m);
  const auto cmp = ideal_equal(power, Ideal({g}), degree_bound);
  if (cmp.verdict != Verdict::Yes)
    throw DomainError("L^" + std::to_string(m) + " = <" + g.to_string() + "> not certified (" +
                      genuslab::to_string(cmp.verdict) + (cmp.note.empty() ? "" : ": " + cmp.note) + ")");
  return finish(l, m, g, std::move(power));
}

TorsorAlgebra::TorsorAlgebra(KummerPair pair) : pair_(std::move(pair)) {
  if (pair_.m != 2) throw DomainError("the algebra O + L needs m = 2");
}

AlgebraElement TorsorAlgebra::one() const {
  const auto& ring = pair_.g.ring();
  return {ring.one(), ring.zero()};
}

AlgebraElement TorsorAlgebra::element(const RingElement& r, const RingElement& l, int degree_bound) const {
  if (!l.is_zero() && ideal_membership(l, pair_.l, degree_bound).verdict != Verdict::Yes)
    throw DomainError(l.to_string() + " not shown to lie in " + pair_.l.to_string());
  return {r, l};
}

AlgebraElement TorsorAlgebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
  const auto q = exact_divide(u.l * v.l, pair_.g);
  if (!q) throw DomainError("malformed pair: " + pair_.g.to_string() + " does not divide " + (u.l * v.l).to_string());
  return {u.r * v.r + *q, u.r * v.l + v.r * u.l};
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::Trivial:
      return "trivial";
    case Triviality::Nontrivial:
      return "nontrivial";
    case Triviality::Undetermined:
      return "undetermined";
  }
  return "?";
}

TorsorTriviality torsor_trivial_over_ring(const KummerPair& pair, int degree_bound) {
  if (pair.m != 2) throw DomainError("torsor triviality is decided for m = 2 only");
  TorsorTriviality t;
  const auto pr = is_principal(pair.l, degree_bound);
  t.principal = pr.verdict;
  const auto sq = is_square_in_ring(pair.g);
  if (sq.verdict == Verdict::Yes) t.root = sq.root;
  t.splitting = "O[sqrt(" + pair.g.to_string() + ")]";
  if (pr.verdict == Verdict::No) {
    t.verdict = Triviality::Nontrivial;
    t.note = "L has order 2 in Pic; the torsor splits only over " + t.splitting;
  } else if (pr.verdict == Verdict::NoWitnessWithinBound) {
    t.note = "principality of L not decided within the bound";
  } else if (sq.verdict == Verdict::Yes) {
    t.verdict = Triviality::Trivial;
    t.splitting = "O";
    t.note = "g = (" + sq.root->to_string() + ")^2";
  } else {
    t.verdict = Triviality::Nontrivial;
    t.note = "L is principal but g is not a square in O; split by " + t.splitting;
  }
  return t;
}

}  // namespace genuslab
