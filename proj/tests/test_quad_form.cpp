#include <gtest/gtest.h>

#include <random>
#include <set>

#include "genuslab/fixed_group.hpp"
#include "genuslab/quad_form.hpp"

using namespace genuslab;

namespace {

CoordRing ring_over(std::int64_t p) { return CoordRing(make_curve(make_field(p, 1), 1, 0)); }

GramForm diag_form(const CoordRing& ring, const std::vector<long long>& d) {
  std::vector<std::vector<long long>> rows(d.size(), std::vector<long long>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) rows[i][i] = d[i];
  return GramForm::from_constants(ring, matrix_from_ints(ring.field(), rows));
}

// Squares mod p by listing k^2.
bool int_square(long long a, long long p) {
  a = ((a % p) + p) % p;
  for (long long k = 1; k < p; ++k)
    if (k * k % p == a) return true;
  return false;
}

long long smallest_nonsquare(long long p) {
  for (long long a = 2;; ++a)
    if (!int_square(a, p)) return a;
}

// Classification of nondegenerate forms over F_q by (rank, det class).
bool classified_isometric(const FieldMatrix& a, const FieldMatrix& b) {
  const auto p = a(0, 0).spec().p;
  return a.rows() == b.rows() && int_square(determinant(a).a(), p) == int_square(determinant(b).a(), p);
}

std::vector<FieldMatrix> sample_universe(std::int64_t p, std::size_t max_n, int random_per_n) {
  const auto f = make_field(p, 1);
  const long long nu = smallest_nonsquare(p);
  std::vector<FieldMatrix> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
      for (std::size_t i = 0; i < n; ++i) rows[i][i] = (mask >> i) & 1 ? nu : 1;
      out.push_back(matrix_from_ints(f, rows));
    }
    std::mt19937 rng(static_cast<unsigned>(97 * p + n));
    std::uniform_int_distribution<long long> coeff(0, p - 1);
    for (int k = 0; k < random_per_n;) {
      std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rows[i][j] = rows[j][i] = coeff(rng);
      auto m = matrix_from_ints(f, rows);
      if (determinant(m).is_zero()) continue;
      out.push_back(m);
      ++k;
    }
  }
  return out;
}

}  // namespace

TEST(MakeForm, RegularityExamples) {
  const auto ring = ring_over(11);
  EXPECT_TRUE(diag_form(ring, {1, 1}).regular());
  for (std::size_t n = 4; n <= 6; ++n) EXPECT_TRUE(diag_form(ring, std::vector<long long>(n, 1)).regular());

  RingMatrix m(2, 2, ring.zero());
  m(0, 0) = ring.x();
  m(1, 1) = ring.one();
  const GramForm g(ring, m);
  EXPECT_FALSE(g.regular());
  EXPECT_EQ(g.det(), ring.x());
  EXPECT_FALSE(g.is_constant());
}

TEST(MakeForm, RejectsBadShapes) {
  const auto ring = ring_over(11);
  RingMatrix ns(2, 2, ring.zero());
  ns(0, 1) = ring.x();
  EXPECT_THROW(GramForm(ring, ns), DomainError);
  EXPECT_THROW(GramForm(ring, RingMatrix(2, 3, ring.one())), DomainError);
}

TEST(MakeForm, PolarizationIdentity) {
  const auto ring = ring_over(11);
  RingMatrix m(3, 3, ring.zero());
  m(0, 0) = ring.x();
  m(0, 1) = m(1, 0) = ring.y() + ring.constant(2);
  m(1, 1) = ring.constant(3);
  m(2, 2) = ring.one();
  m(1, 2) = m(2, 1) = ring.x() * ring.x();
  const GramForm g(ring, m);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(0, 10);
  auto random_vec = [&] {
    std::vector<RingElement> v;
    for (int i = 0; i < 3; ++i) v.push_back(ring.constant(c(rng)) + ring.x().scaled(FieldElement(ring.field(), c(rng))));
    return v;
  };
  for (int k = 0; k < 50; ++k) {
    const auto u = random_vec(), v = random_vec();
    std::vector<RingElement> s;
    for (int i = 0; i < 3; ++i) s.push_back(u[i] + v[i]);
    EXPECT_EQ(g.value(s) - g.value(u) - g.value(v), g.bilinear(u, v));
  }
}

TEST(Isotropy, IdentityRank3OverF11) {
  const auto ring = ring_over(11);
  const auto f = diag_form(ring, {1, 1, 1});
  const auto r = is_isotropic(f);
  ASSERT_EQ(r.verdict, Verdict::Yes);
  EXPECT_EQ(r.fiber, Verdict::Yes);
  EXPECT_TRUE(f.value(*r.witness).is_zero());
  EXPECT_TRUE(f.value({ring.constant(1), ring.constant(3), ring.constant(1)}).is_zero());
  // Lexicographically least isotropic vector, by nested integer loops.
  std::vector<long long> least;
  for (long long a = 0; a < 11 && least.empty(); ++a)
    for (long long b = 0; b < 11 && least.empty(); ++b)
      for (long long c = 0; c < 11 && least.empty(); ++c)
        if ((a || b || c) && (a * a + b * b + c * c) % 11 == 0) least = {a, b, c};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ((*r.witness)[i], ring.constant(least[i]));
}

TEST(Isotropy, IdentityRank2) {
  const auto r11 = is_isotropic(diag_form(ring_over(11), {1, 1}));
  EXPECT_EQ(r11.verdict, Verdict::No);
  EXPECT_EQ(r11.fiber, Verdict::No);
  EXPECT_EQ(r11.generic, Verdict::No);
  EXPECT_EQ(r11.searched, 120u);

  const auto ring13 = ring_over(13);
  const auto r13 = is_isotropic(diag_form(ring13, {1, 1}));
  ASSERT_EQ(r13.verdict, Verdict::Yes);
  EXPECT_EQ((*r13.witness)[0], ring13.constant(1));
  EXPECT_EQ((*r13.witness)[1], ring13.constant(5));
}

TEST(Isotropy, AgreesWithMinusDetForBinaryForms) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    const auto ring = ring_over(p);
    for (const auto& b : sample_universe(p, 2, 6)) {
      if (b.rows() != 2) continue;
      const auto r = is_isotropic(GramForm::from_constants(ring, b));
      EXPECT_EQ(r.verdict == Verdict::Yes, int_square(-determinant(b).a(), p)) << matrix_to_string(b);
    }
  }
}

TEST(Isotropy, IrregularRejected) {
  const auto ring = ring_over(11);
  EXPECT_THROW(is_isotropic(diag_form(ring, {1, 0})), DomainError);
}

TEST(Discriminant, Examples) {
  const auto ring = ring_over(11);
  const auto d1 = discriminant(diag_form(ring, {1, 1, 1, 1}));
  EXPECT_EQ(d1.det, ring.one());
  EXPECT_TRUE(d1.square_class);
  const auto d6 = discriminant(diag_form(ring, {2, 3}));
  EXPECT_EQ(d6.det, ring.constant(6));
  EXPECT_EQ(d6.square_class, int_square(6, 11));
  EXPECT_FALSE(d6.square_class);
  // Scaling a basis vector by a unit u multiplies det by u^2.
  for (long long u = 1; u < 11; ++u) {
    const auto du = discriminant(diag_form(ring, {2 * u * u, 3}));
    EXPECT_EQ(du.square_class, d6.square_class);
  }
  EXPECT_THROW(discriminant(diag_form(ring, {0, 1})), DomainError);
}

TEST(GammaForm, Examples) {
  const auto ring = ring_over(11);
  EXPECT_TRUE(is_gamma_form(diag_form(ring, {1, 1}), s3_rank2_f11()));
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto rep = symmetric_block_rep(ring.field(), n, n - 2);
    EXPECT_TRUE(is_gamma_form(diag_form(ring, std::vector<long long>(n, 1)), rep));
  }
  const auto swap = symmetric_block_rep(ring.field(), 2, 2);
  EXPECT_FALSE(is_gamma_form(diag_form(ring, {1, 2}), swap));
  EXPECT_THROW(is_gamma_form(diag_form(ring, {1, 1, 1}), swap), DomainError);
}

TEST(GammaForm, InvariantUnderWholeClosure) {
  const auto ring = ring_over(11);
  const auto f = diag_form(ring, {1, 1});
  const auto b = f.constant_gram();
  for (const auto& g : generated_group(s3_rank2_f11()).elements) EXPECT_EQ(g.transpose() * b * g, b);
  const auto f5 = diag_form(ring, {1, 1, 1, 1, 1});
  const auto b5 = f5.constant_gram();
  for (const auto& g : generated_group(symmetric_block_rep(ring.field(), 5, 3)).elements)
    EXPECT_EQ(g.transpose() * b5 * g, b5);
}

TEST(FiberIsometry, Examples) {
  const auto ring = ring_over(11);
  const auto r1 = fiber_isometry(diag_form(ring, {1, 1}), diag_form(ring, {2, 2}));
  ASSERT_EQ(r1.verdict, Verdict::Yes);
  const auto a = *r1.witness;
  EXPECT_EQ(a.transpose() * matrix_from_ints(ring.field(), {{1, 0}, {0, 1}}) * a,
            matrix_from_ints(ring.field(), {{2, 0}, {0, 2}}));
  EXPECT_EQ(fiber_isometry(diag_form(ring, {1, 2}), diag_form(ring, {1, 1})).verdict, Verdict::No);
  const auto self = fiber_isometry(diag_form(ring, {1, 1, 1}), diag_form(ring, {1, 1, 1}));
  ASSERT_EQ(self.verdict, Verdict::Yes);
  EXPECT_EQ(*self.witness, identity_matrix(ring.field(), 3));
}

TEST(FiberIsometry, WitnessIsLeastInColumnMajorOrder) {
  // Brute force over all 5^4 matrices, compared in column-major order.
  const auto ring = ring_over(5);
  const auto f = ring.field();
  for (const auto& [d1, d2] : std::vector<std::pair<std::vector<long long>, std::vector<long long>>>{
           {{1, 2}, {2, 1}}, {{1, 1}, {2, 2}}, {{2, 3}, {1, 1}}}) {
    const auto b1 = diag_form(ring, d1).constant_gram(), b2 = diag_form(ring, d2).constant_gram();
    std::optional<std::vector<long long>> least;
    for (long long a00 = 0; a00 < 5 && !least; ++a00)
      for (long long a10 = 0; a10 < 5 && !least; ++a10)
        for (long long a01 = 0; a01 < 5 && !least; ++a01)
          for (long long a11 = 0; a11 < 5 && !least; ++a11) {
            const auto m = matrix_from_ints(f, {{a00, a01}, {a10, a11}});
            if (m.transpose() * b1 * m == b2) least = std::vector<long long>{a00, a01, a10, a11};
          }
    const auto r = fiber_isometry(diag_form(ring, d1), diag_form(ring, d2));
    ASSERT_EQ(r.verdict == Verdict::Yes, least.has_value());
    if (least) EXPECT_EQ(*r.witness, matrix_from_ints(f, {{(*least)[0], (*least)[1]}, {(*least)[2], (*least)[3]}}));
  }
}

TEST(FiberIsometry, AllIsometriesCountMatchesOrthogonalGroup) {
  const auto ring = ring_over(11);
  const auto f = diag_form(ring, {1, 1});
  EXPECT_EQ(all_fiber_isometries(f, f).size(), brute_force_orthogonal_order(f.constant_gram()));
}

TEST(FiberIsometry, AgreesWithClassificationOnSampledUniverse) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    const auto ring = ring_over(p);
    const auto universe = sample_universe(p, 3, 3);
    for (const auto& a : universe)
      for (const auto& b : universe) {
        if (a.rows() != b.rows()) continue;
        const auto r = fiber_isometry(GramForm::from_constants(ring, a), GramForm::from_constants(ring, b));
        ASSERT_EQ(r.verdict == Verdict::Yes, classified_isometric(a, b))
            << "p=" << p << " " << matrix_to_string(a) << " vs " << matrix_to_string(b);
        if (r.witness) {
          EXPECT_EQ(r.witness->transpose() * a * *r.witness, b);
          // symmetric via the inverse; the discriminant class is preserved
          const auto inv = inverse(*r.witness);
          ASSERT_TRUE(inv);
          EXPECT_EQ(inv->transpose() * b * *inv, a);
          EXPECT_EQ(int_square(determinant(a).a(), p), int_square(determinant(b).a(), p));
        }
      }
  }
}

TEST(FiberIsometry, RankThreeOverF13) {
  const auto ring = ring_over(13);
  const long long nu = smallest_nonsquare(13);
  const auto r = fiber_isometry(diag_form(ring, {1, 1, nu}), diag_form(ring, {nu, nu, nu}));
  EXPECT_EQ(r.verdict, Verdict::Yes);  // det classes nu and nu^3 agree
  EXPECT_EQ(fiber_isometry(diag_form(ring, {1, 1, 1}), diag_form(ring, {1, 1, nu})).verdict, Verdict::No);
}

TEST(FiberIsometry, TransitiveByComposition) {
  const auto ring = ring_over(7);
  const auto a = diag_form(ring, {1, 3, 5}), b = diag_form(ring, {1, 1, 1}), c = diag_form(ring, {5, 1, 3});
  const auto ab = fiber_isometry(a, b), bc = fiber_isometry(b, c);
  ASSERT_EQ(ab.verdict, Verdict::Yes);
  ASSERT_EQ(bc.verdict, Verdict::Yes);
  const auto m = *ab.witness * *bc.witness;
  EXPECT_EQ(m.transpose() * a.constant_gram() * m, c.constant_gram());
}

TEST(FiberIsometry, WorkerCountDoesNotChangeWitness) {
  const auto ring = ring_over(13);
  const auto f1 = diag_form(ring, {1, 2, 3}), f2 = diag_form(ring, {6, 1, 1});
  const auto base = fiber_isometry(f1, f2, 10'000'000, 1);
  for (unsigned w : {2u, 3u, 8u}) {
    const auto r = fiber_isometry(f1, f2, 10'000'000, w);
    EXPECT_EQ(r.verdict, base.verdict);
    EXPECT_EQ(r.witness, base.witness);
    EXPECT_EQ(r.searched, base.searched);
  }
}

TEST(FiberIsometry, Preconditions) {
  const auto ring = ring_over(11);
  EXPECT_THROW(fiber_isometry(diag_form(ring, {1, 1}), diag_form(ring, {1, 1, 1})), DomainError);
  RingMatrix m(2, 2, ring.zero());
  m(0, 0) = ring.x();
  m(1, 1) = ring.one();
  EXPECT_THROW(fiber_isometry(GramForm(ring, m), diag_form(ring, {1, 1})), DomainError);
  EXPECT_THROW(fiber_isometry(diag_form(ring, {1, 1, 1, 1}), diag_form(ring, {1, 1, 1, 1}), 1000), BudgetExceeded);
}

TEST(FiberGammaIsometry, S3RepOverF11) {
  const auto ring = ring_over(11);
  const auto f = diag_form(ring, {1, 1});
  const auto rep = s3_rank2_f11();
  const auto r = fiber_gamma_isometry(f, f, rep);
  ASSERT_EQ(r.verdict, Verdict::Yes);
  const auto fx = fixed_orthogonal_order(f, rep);
  EXPECT_EQ(r.witnesses, fx.elements);
  const auto id = identity_matrix(ring.field(), 2);
  const std::vector<FieldMatrix> pm{id, matrix_from_ints(ring.field(), {{-1, 0}, {0, -1}})};
  std::set<std::string> got, want;
  for (const auto& m : r.witnesses) got.insert(matrix_to_string(m));
  for (const auto& m : pm) want.insert(matrix_to_string(m));
  EXPECT_EQ(got, want);
}

TEST(FiberGammaIsometry, SelfIsometryContainsIdentity) {
  const auto ring = ring_over(7);
  for (const auto& rep : {trivial_rep(ring.field(), 2), symmetric_block_rep(ring.field(), 2, 2)}) {
    const auto f = diag_form(ring, {3, 3});
    const auto r = fiber_gamma_isometry(f, f, rep);
    ASSERT_EQ(r.verdict, Verdict::Yes);
    EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), identity_matrix(ring.field(), 2)),
              r.witnesses.end());
  }
}

TEST(FiberGammaIsometry, WitnessesFormACosetAndImplyIsometry) {
  const auto ring = ring_over(11);
  const auto swap = symmetric_block_rep(ring.field(), 2, 2);
  const std::vector<GramForm> forms{diag_form(ring, {1, 1}), diag_form(ring, {2, 2}), diag_form(ring, {3, 3}),
                                    GramForm::from_constants(ring, matrix_from_ints(ring.field(), {{1, 4}, {4, 1}}))};
  for (const auto& f1 : forms)
    for (const auto& f2 : forms) {
      const auto r = fiber_gamma_isometry(f1, f2, swap);
      if (r.verdict == Verdict::Yes) {
        EXPECT_EQ(fiber_isometry(f1, f2).verdict, Verdict::Yes);
        // W = Fix(f1) * A for any A in W.
        const auto fixed = fixed_orthogonal_order(f1, swap);
        std::vector<FieldMatrix> coset;
        for (const auto& h : fixed.elements) coset.push_back(h * r.witnesses.front());
        std::sort(coset.begin(), coset.end(), matrix_less);
        EXPECT_EQ(coset, r.witnesses);
      }
    }
}

TEST(FiberGammaIsometry, RejectsNonGammaForms) {
  const auto ring = ring_over(11);
  EXPECT_THROW(fiber_gamma_isometry(diag_form(ring, {1, 2}), diag_form(ring, {1, 2}),
                                    symmetric_block_rep(ring.field(), 2, 2)),
               DomainError);
}
