#include <gtest/gtest.h>

#include <set>

#include "genuslab/error.hpp"
#include "genuslab/field.hpp"

using namespace genuslab;

TEST(MakeField, PrimeField) {
  const auto f = make_field(11, 1);
  EXPECT_EQ(f.q(), 11);
  EXPECT_EQ(f.name(), "GF(11)");
  EXPECT_EQ(field_elements(f).size(), 11u);
}

TEST(MakeField, QuadraticExtensionAdjoinsI) {
  const auto f = make_field(11, 2);
  EXPECT_EQ(f.q(), 121);
  EXPECT_EQ(f.d, 10);  // -1
  EXPECT_TRUE(f.generator_is_i());
  EXPECT_EQ(f.name(), "GF(11^2)");
}

TEST(MakeField, PicksSmallestNonResidueWhenMinusOneIsSquare) {
  const auto f = make_field(13, 2);
  EXPECT_EQ(f.d, 2);  // 1, 4 are squares; 2 is not (13 = 5 mod 8)
  EXPECT_FALSE(is_square(FieldElement(make_field(13, 1), f.d)).square);
}

TEST(MakeField, RejectsBadCharacteristic) {
  EXPECT_THROW(make_field(4, 1), DomainError);
  EXPECT_THROW(make_field(2, 1), DomainError);
  EXPECT_THROW(make_field(15, 1), DomainError);
  EXPECT_THROW(make_field(1, 1), DomainError);
  EXPECT_THROW(make_field(7, 3), DomainError);
}

TEST(Arith, SquareOfFivePlusEightI) {
  // Independent expansion: (a + b i)^2 = (a^2 - b^2) + 2ab i.
  const long a = 5, b = 8, p = 11;
  const long re = ((a * a - b * b) % p + p) % p, im = (2 * a * b) % p;
  ASSERT_EQ(re, 5);
  ASSERT_EQ(im, 3);
  const auto f = make_field(11, 2);
  const FieldElement z(f, 5, 8);
  EXPECT_EQ(z * z, FieldElement(f, re, im));
  EXPECT_EQ((z * z).to_string(), "5+3i");
}

TEST(Arith, InverseExhaustiveSmallFields) {
  for (long p : {3, 5, 7, 11, 13}) {
    for (int deg : {1, 2}) {
      const auto f = make_field(p, deg);
      for (const auto& x : field_elements(f)) {
        EXPECT_EQ(x + (-x), FieldElement::zero(f));
        if (x.is_zero()) continue;
        EXPECT_TRUE((x.inv() * x).is_one()) << f.name() << " " << x.to_string();
      }
    }
  }
}

TEST(Arith, InverseOfZeroAndMixedFieldsThrow) {
  const auto f = make_field(11, 1);
  const auto g = make_field(13, 1);
  EXPECT_THROW(FieldElement::zero(f).inv(), DomainError);
  EXPECT_THROW(FieldElement(f, 1) + FieldElement(g, 1), DomainError);
  EXPECT_THROW(FieldElement(f, 1) * FieldElement(make_field(11, 2), 1), DomainError);
}

TEST(IsSquare, MinusOne) {
  const auto f11 = make_field(11, 1);
  EXPECT_FALSE(is_square(FieldElement(f11, -1)).square);
  const auto f13 = make_field(13, 1);
  const auto r = is_square(FieldElement(f13, -1));
  ASSERT_TRUE(r.square);
  EXPECT_EQ(r.root->a(), 5);
  // Every element of F_121 is a square of something in F_121 when it lies in F_11.
  const auto f121 = make_field(11, 2);
  EXPECT_TRUE(is_square(FieldElement(f121, -1)).square);
}

TEST(IsSquare, OneHasWitnessOne) {
  for (long p : {3, 7, 13}) {
    const auto r = is_square(FieldElement::one(make_field(p, 2)));
    ASSERT_TRUE(r.square);
    EXPECT_TRUE(r.root->is_one());
  }
}

TEST(IsSquare, ExactlyHalfOfUnitsAreSquaresAndWitnessesVerify) {
  for (long p : {3, 5, 7, 11, 13}) {
    for (int deg : {1, 2}) {
      const auto f = make_field(p, deg);
      std::set<std::int64_t> squares;
      for (const auto& x : field_elements(f))
        if (!x.is_zero()) squares.insert((x * x).index());
      EXPECT_EQ(static_cast<std::int64_t>(squares.size()), (f.q() - 1) / 2);
      for (const auto& x : field_elements(f)) {
        const auto r = is_square(x);
        EXPECT_EQ(r.square, x.is_zero() || squares.contains(x.index()));
        if (r.square) EXPECT_EQ(*r.root * *r.root, x);
      }
    }
  }
}

TEST(IsSquare, MultiplicativeCharacter) {
  for (long p : {5, 7, 11}) {
    const auto f = make_field(p, 2);
    const auto elems = field_elements(f);
    for (const auto& x : elems) {
      if (x.is_zero()) continue;
      for (const auto& y : elems) {
        if (y.is_zero()) continue;
        EXPECT_EQ(is_square(x * y).square, is_square(x).square == is_square(y).square);
      }
    }
  }
}

TEST(Frobenius, AutomorphismFixingPrimeField) {
  for (long p : {3, 5, 7, 11, 13}) {
    const auto f = make_field(p, 2);
    const auto elems = field_elements(f);
    std::set<std::int64_t> images;
    for (const auto& x : elems) {
      const auto fx = x.frobenius();
      EXPECT_EQ(fx, x.pow(static_cast<std::uint64_t>(p)));
      EXPECT_EQ(fx == x, x.in_prime_field());
      images.insert(fx.index());
      for (const auto& y : {elems[3], elems[static_cast<std::size_t>(p + 1)], elems.back()}) {
        EXPECT_EQ((x * y).frobenius(), fx * y.frobenius());
        EXPECT_EQ((x + y).frobenius(), fx + y.frobenius());
      }
    }
    EXPECT_EQ(static_cast<std::int64_t>(images.size()), f.q());
  }
}

TEST(FieldTables, AgreeWithElementArithmetic) {
  const auto f = make_field(5, 2);
  const FieldTables t(f);
  const auto elems = field_elements(f);
  for (std::uint16_t i = 0; i < t.q(); ++i) {
    if (i != 0) EXPECT_EQ(elems[t.inv(i)], elems[i].inv());
    for (std::uint16_t j = 0; j < t.q(); ++j) {
      EXPECT_EQ(elems[t.add(i, j)], elems[i] + elems[j]);
      EXPECT_EQ(elems[t.mul(i, j)], elems[i] * elems[j]);
    }
  }
}
