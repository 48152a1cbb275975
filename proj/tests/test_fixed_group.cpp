#include <gtest/gtest.h>

#include "genuslab/fixed_group.hpp"

using namespace genuslab;

namespace {

CoordRing ring_over(std::int64_t p) { return CoordRing(make_curve(make_field(p, 1), 1, 0)); }

GramForm identity_form(const CoordRing& ring, std::size_t n) {
  return GramForm::from_constants(ring, identity_matrix(ring.field(), n));
}

// Flattened basis matrices, stacked as rows.
std::size_t span_rank(const std::vector<FieldMatrix>& ms) {
  const auto& f = ms.front()(0, 0).spec();
  const std::size_t nn = ms.front().data().size();
  FieldMatrix m(ms.size(), nn, FieldElement::zero(f));
  for (std::size_t r = 0; r < ms.size(); ++r)
    for (std::size_t e = 0; e < nn; ++e) m(r, e) = ms[r].data()[e];
  return rank(m);
}

}  // namespace

TEST(Centralizer, TrivialGroupGivesAllMatrices) {
  const auto f = make_field(7, 1);
  const auto cb = centralizer_basis(trivial_rep(f, 2));
  EXPECT_EQ(cb.dimension(), 4u);
}

TEST(Centralizer, SwapOnPlane) {
  const auto f = make_field(11, 1);
  const auto rep = symmetric_block_rep(f, 2, 2);
  const auto cb = centralizer_basis(rep);
  ASSERT_EQ(cb.dimension(), 2u);
  // span{basis} = span{I, swap}
  auto all = cb.basis;
  all.push_back(identity_matrix(f, 2));
  all.push_back(matrix_from_ints(f, {{0, 1}, {1, 0}}));
  EXPECT_EQ(span_rank(all), 2u);
  ASSERT_TRUE(cb.character_dimension);
  EXPECT_EQ(*cb.character_dimension, 2u);
}

TEST(Centralizer, S3RankTwoIsScalars) {
  const auto rep = s3_rank2_f11();
  const auto cb = centralizer_basis(rep);
  ASSERT_EQ(cb.dimension(), 1u);
  EXPECT_EQ(span_rank({cb.basis[0], identity_matrix(rep.field, 2)}), 1u);
  ASSERT_TRUE(cb.character_dimension);
  EXPECT_EQ(*cb.character_dimension, 1u);
}

TEST(Centralizer, BasisCommutesAndIsIndependent) {
  const auto f = make_field(13, 1);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto rep = symmetric_block_rep(f, n, k);
      const auto cb = centralizer_basis(rep);
      EXPECT_EQ(span_rank(cb.basis), cb.dimension());
      for (const auto& m : cb.basis)
        for (const auto& g : rep.generators) EXPECT_EQ(g * m, m * g);
      // S_k on the last k coordinates: trivial isotypic part of dimension
      // n - k + 1 and one standard summand (k >= 2), so d = (n-k+1)^2 + 1.
      const std::size_t expect = k >= 2 ? (n - k + 1) * (n - k + 1) + 1 : n * n;
      EXPECT_EQ(cb.dimension(), expect) << "n=" << n << " k=" << k;
      if (cb.character_dimension) EXPECT_EQ(*cb.character_dimension, cb.dimension());
    }
}

TEST(GeneratedGroup, S3RankTwo) {
  const auto rep = s3_rank2_f11();
  const auto& tau = rep.generators[0];
  const auto& sigma = rep.generators[1];
  const auto id = identity_matrix(rep.field, 2);
  EXPECT_EQ(sigma * sigma * sigma, id);
  EXPECT_EQ(tau * sigma * tau, *inverse(sigma));
  EXPECT_EQ(tau * tau, id);
  const auto g = generated_group(rep);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.faithful);
  EXPECT_EQ(generated_group_order(rep), 6u);
}

TEST(GeneratedGroup, TrivialAndBlockReps) {
  const auto f = make_field(11, 1);
  EXPECT_EQ(generated_group_order(trivial_rep(f, 3)), 1u);
  const auto b5 = generated_group(symmetric_block_rep(f, 5, 3));
  EXPECT_EQ(b5.order(), 6u);
  EXPECT_TRUE(b5.faithful);
  EXPECT_EQ(generated_group_order(symmetric_block_rep(f, 6, 4)), 24u);
  EXPECT_THROW(generated_group(symmetric_block_rep(f, 6, 4), 10), BudgetExceeded);
}

TEST(GeneratedGroup, GenericS3RepNeedsThreeSquare) {
  // 3 is a square mod 11 (5^2 = 3) and mod 13 (4^2 = 3), not mod 5 or 7.
  EXPECT_EQ(generated_group_order(s3_rank2(make_field(13, 1))), 6u);
  EXPECT_THROW(s3_rank2(make_field(7, 1)), DomainError);
}

TEST(FixedGroup, S3RepOnIdentityPlane) {
  const auto ring = ring_over(11);
  const auto r = fixed_orthogonal_order(identity_form(ring, 2), s3_rank2_f11());
  EXPECT_EQ(r.dimension_d, 1u);
  EXPECT_EQ(r.budget_used, 11u);
  EXPECT_EQ(r.full_order, 2u);
  EXPECT_EQ(r.det1_order, 2u);
  EXPECT_TRUE(r.closure_certified);
  EXPECT_TRUE(r.abelian);
  EXPECT_TRUE(r.commutes_with_closure);
}

TEST(FixedGroup, TrivialGroupOnIdentityPlaneOverF11) {
  const auto ring = ring_over(11);
  const auto f = identity_form(ring, 2);
  const auto r = fixed_orthogonal_order(f, trivial_rep(ring.field(), 2));
  EXPECT_EQ(r.full_order, brute_force_orthogonal_order(f.constant_gram()));
  EXPECT_EQ(r.full_order, 24u);
  EXPECT_EQ(r.det1_order, 12u);
  EXPECT_FALSE(r.abelian);
  EXPECT_TRUE(r.closure_certified);
}

TEST(FixedGroup, TrivialGroupMatchesClassicalOrders) {
  for (std::int64_t p : {3, 5, 7, 11}) {
    const auto ring = ring_over(p);
    const auto& fs = ring.field();
    const std::vector<FieldMatrix> grams{
        matrix_from_ints(fs, {{1}}), matrix_from_ints(fs, {{2}}),
        matrix_from_ints(fs, {{1, 0}, {0, 1}}), matrix_from_ints(fs, {{1, 0}, {0, 2}}),
        matrix_from_ints(fs, {{2, 1}, {1, 1}}), matrix_from_ints(fs, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
        matrix_from_ints(fs, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})};
    for (const auto& b : grams) {
      if (determinant(b).is_zero()) continue;
      const std::size_t n = b.rows();
      if (n == 3 && p > 5) continue;
      const auto f = GramForm::from_constants(ring, b);
      const auto r = fixed_orthogonal_order(f, trivial_rep(fs, n));
      EXPECT_EQ(r.full_order, classical_orthogonal_order(fs, n, determinant(b))) << matrix_to_string(b);
      EXPECT_EQ(r.full_order, brute_force_orthogonal_order(b)) << matrix_to_string(b);
      EXPECT_EQ(2 * r.det1_order, r.full_order);
      EXPECT_TRUE(r.closure_certified);
    }
  }
}

// The S_2 block on 1_4 splits F_5^4 into span(e1, e2, e3 + e4) with Gram
// diag(1, 1, 2) and span(e3 - e4) with Gram (2); the fixed group is the
// product of the two orthogonal groups, which are counted here directly.
TEST(FixedGroup, BlockRepOnIdentityOverF5) {
  const auto ring = ring_over(5);
  const auto& fs = ring.field();
  const auto rep = symmetric_block_rep(fs, 4, 2);
  const auto r = fixed_orthogonal_order(identity_form(ring, 4), rep);
  const auto o3 = brute_force_orthogonal_order(matrix_from_ints(fs, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  const auto o1 = brute_force_orthogonal_order(matrix_from_ints(fs, {{2}}));
  EXPECT_EQ(r.dimension_d, 10u);
  EXPECT_EQ(r.budget_used, 9'765'625u);
  EXPECT_EQ(r.full_order, o3 * o1);
  EXPECT_EQ(r.det1_order * 2, r.full_order);
  EXPECT_TRUE(r.closure_certified);
  EXPECT_TRUE(r.commutes_with_closure);
  EXPECT_FALSE(r.abelian);
  // The G_m x {+-1} shape would give 2(q - 1) elements of determinant 1.
  EXPECT_NE(r.det1_order, gm_shape_det1_prediction(fs));
}

TEST(FixedGroup, WorkerCountDoesNotChangeTheSet) {
  const auto ring = ring_over(7);
  const auto f = identity_form(ring, 3);
  const auto rep = symmetric_block_rep(ring.field(), 3, 2);
  const auto base = fixed_orthogonal_order(f, rep, 10'000'000, 1);
  for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(fixed_orthogonal_order(f, rep, 10'000'000, w).elements, base.elements);
}

TEST(FixedGroup, BudgetReportsRequiredSize) {
  const auto ring = ring_over(13);
  try {
    fixed_orthogonal_order(identity_form(ring, 4), trivial_rep(ring.field(), 4));
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), saturating_pow(13, 16));
    EXPECT_EQ(e.budget(), 10'000'000u);
  }
}

TEST(FixedGroup, Preconditions) {
  const auto ring = ring_over(11);
  const auto f = GramForm::from_constants(ring, matrix_from_ints(ring.field(), {{1, 0}, {0, 2}}));
  EXPECT_THROW(fixed_orthogonal_order(f, symmetric_block_rep(ring.field(), 2, 2)), DomainError);
}
