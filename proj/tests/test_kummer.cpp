#include <gtest/gtest.h>

#include <random>
#include <set>

#include "genuslab/kummer.hpp"

using namespace genuslab;

namespace {

struct Ring11 : ::testing::Test {
  FieldSpec f = make_field(11, 1);
  CoordRing ring{make_curve(f, 1, 0)};
  RingElement x = ring.x();
  RingElement y = ring.y();
  Ideal l{{x, y}};
};

RingElement random_poly_element(const CoordRing& ring, std::mt19937& rng, int max_deg) {
  const auto& f = ring.field();
  std::uniform_int_distribution<std::int64_t> coeff(0, f.q() - 1);
  std::uniform_int_distribution<int> deg(-1, max_deg);
  auto poly = [&] {
    std::vector<FieldElement> c;
    for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(FieldElement::from_index(f, coeff(rng)));
    return Polynomial(f, c);
  };
  return ring.element(poly(), poly());
}

}  // namespace

TEST_F(Ring11, PairForMaximalIdeal) {
  const auto p = make_kummer_pair(l, 2);
  EXPECT_EQ(p.g, x);
  EXPECT_EQ(p.power.to_string(), "<x^2, x*y, x^3 + x>");
  // round trip: L^2 = <g> both ways
  EXPECT_EQ(ideal_membership(p.g, p.power, 8).verdict, Verdict::Yes);
  for (const auto& h : p.power.generators()) EXPECT_EQ(ideal_membership(h, Ideal({p.g}), 8).verdict, Verdict::Yes);
}

TEST_F(Ring11, PairForUnitIdeal) {
  const auto p = make_kummer_pair(Ideal::unit(ring), 2);
  EXPECT_EQ(p.g, ring.one());
}

TEST_F(Ring11, CubeIsNotPrincipal) {
  EXPECT_THROW(make_kummer_pair(l, 3), DomainError);
  // The class of (0,0) has order 2: L^4 is principal again.
  EXPECT_EQ(make_kummer_pair(l, 4).g, x * x);
}

TEST_F(Ring11, GivenGeneratorIsChecked) {
  EXPECT_EQ(make_kummer_pair(l, 2, x.scaled(FieldElement(f, 3))).g, x.scaled(FieldElement(f, 3)));
  EXPECT_THROW(make_kummer_pair(l, 2, y), DomainError);
  EXPECT_EQ(make_kummer_pair(Ideal::unit(ring), 2, ring.constant(4)).g, ring.constant(4));
}

TEST_F(Ring11, AlgebraExamples) {
  const TorsorAlgebra alg(make_kummer_pair(l, 2));
  const auto one = alg.one();
  const auto u = alg.element(x + ring.constant(3), x * y);
  EXPECT_EQ(alg.multiply(one, u), u);
  const auto yy = alg.multiply(alg.element(ring.zero(), y), alg.element(ring.zero(), y));
  EXPECT_EQ(yy.r, x * x + ring.one());
  EXPECT_TRUE(yy.l.is_zero());
  const auto xx = alg.multiply(alg.element(ring.zero(), x), alg.element(ring.zero(), x));
  EXPECT_EQ(xx.r, x);
  EXPECT_TRUE(xx.l.is_zero());
}

TEST_F(Ring11, AlgebraRejectsMalformedInput) {
  const TorsorAlgebra alg(make_kummer_pair(l, 2));
  EXPECT_THROW(alg.element(ring.zero(), ring.one()), DomainError);
  // Bypassing the membership check, 1 * 1 is not divisible by x.
  EXPECT_THROW(alg.multiply({ring.zero(), ring.one()}, {ring.zero(), ring.one()}), DomainError);
  EXPECT_THROW(TorsorAlgebra(make_kummer_pair(Ideal::unit(ring), 3)), DomainError);
}

TEST_F(Ring11, AlgebraIsCommutativeAndAssociative) {
  const TorsorAlgebra alg(make_kummer_pair(l, 2));
  std::mt19937 rng(31337);
  auto sample = [&] {
    // l = a x + b y lies in L.
    const auto a = random_poly_element(ring, rng, 2), b = random_poly_element(ring, rng, 2);
    return AlgebraElement{random_poly_element(ring, rng, 2), a * x + b * y};
  };
  for (int i = 0; i < 1000; ++i) {
    const auto u = sample(), v = sample(), w = sample();
    EXPECT_EQ(alg.multiply(u, v), alg.multiply(v, u));
    EXPECT_EQ(alg.multiply(alg.multiply(u, v), w), alg.multiply(u, alg.multiply(v, w)));
  }
}

TEST_F(Ring11, TorsorTriviality) {
  const auto t1 = torsor_trivial_over_ring(make_kummer_pair(Ideal::unit(ring), 2));
  EXPECT_EQ(t1.verdict, Triviality::Trivial);

  const auto tl = torsor_trivial_over_ring(make_kummer_pair(l, 2));
  EXPECT_EQ(tl.verdict, Triviality::Nontrivial);
  EXPECT_EQ(tl.principal, Verdict::No);
  EXPECT_EQ(is_square_in_ring(x).verdict, Verdict::No);
  EXPECT_EQ(tl.splitting, "O[sqrt(x)]");
  EXPECT_FALSE(tl.root);

  const auto t4 = torsor_trivial_over_ring(make_kummer_pair(Ideal::unit(ring), 2, ring.constant(4)));
  EXPECT_EQ(t4.verdict, Triviality::Trivial);
  ASSERT_TRUE(t4.root);
  EXPECT_EQ(*t4.root * *t4.root, ring.constant(4));
}

TEST_F(Ring11, UnitIdealTorsorsFollowTheSquareClassOfG) {
  // 20 unit generators; squares mod 11 are listed by hand from k^2.
  const std::set<std::int64_t> squares{1, 3, 4, 5, 9};
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::int64_t> c(1, 10);
  for (int i = 0; i < 20; ++i) {
    const auto u = c(rng);
    const auto t = torsor_trivial_over_ring(make_kummer_pair(Ideal::unit(ring), 2, ring.constant(u)));
    EXPECT_EQ(t.verdict == Triviality::Trivial, squares.contains(u)) << u;
  }
}

TEST_F(Ring11, PrincipalIdealWithSquareGenerator) {
  // L = <x + 1>, L^2 = <(x + 1)^2>, trivial; with 2 (x + 1)^2 it is not.
  const Ideal lp({x + ring.one()});
  const auto g = (x + ring.one()) * (x + ring.one());
  EXPECT_EQ(torsor_trivial_over_ring(make_kummer_pair(lp, 2, g)).verdict, Triviality::Trivial);
  const auto t = torsor_trivial_over_ring(make_kummer_pair(lp, 2, g.scaled(FieldElement(f, 2))));
  EXPECT_EQ(t.verdict, Triviality::Nontrivial);
  EXPECT_EQ(t.principal, Verdict::Yes);
}
