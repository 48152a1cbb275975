#include "genuslab/group_rep.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace genuslab {

GroupRep make_rep(std::string name, std::uint64_t abstract_order, const FieldSpec& field, std::size_t dim,
                  std::vector<FieldMatrix> generators) {
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw DomainError("generator of " + name + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    if (!(g(0, 0).spec() == field)) throw DomainError("generator of " + name + " over another field");
    if (determinant(g).is_zero()) throw DomainError("generator of " + name + " is not invertible");
  }
  return GroupRep{std::move(name), abstract_order, field, dim, std::move(generators)};
}

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

GroupRep trivial_rep(const FieldSpec& field, std::size_t dim) {
  return make_rep("trivial", 1, field, dim, {});
}

GroupRep s3_rank2_f11() {
  const auto f = make_field(11, 1);
  return make_rep("S3-rank2-F11", 6, f, 2,
                  {matrix_from_ints(f, {{0, 1}, {1, 0}}), matrix_from_ints(f, {{5, -8}, {8, 5}})});
}

GroupRep s3_rank2(const FieldSpec& field) {
  // cos = -1/2, sin^2 = 3/4
  const auto half = FieldElement(field, 2).inv();
  const auto sin2 = FieldElement(field, 3) * half * half;
  const auto s = is_square(sin2);
  if (!s.square) throw DomainError("S3-rank2 needs 3 to be a square in " + field.name());
  const auto c = -half;
  FieldMatrix sigma(2, 2, c);
  sigma(0, 1) = -*s.root;
  sigma(1, 0) = *s.root;
  return make_rep("S3-rank2", 6, field, 2, {matrix_from_ints(field, {{0, 1}, {1, 0}}), sigma});
}

GroupRep symmetric_block_rep(const FieldSpec& field, std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("permutation block larger than the space");
  const std::string name = "S" + std::to_string(k) + "-block(" + std::to_string(n) + ")";
  if (k <= 1) return make_rep(name, 1, field, n, {});
  const std::size_t off = n - k;
  auto transposition = identity_matrix(field, n);
  std::swap(transposition(off, off), transposition(off, off + 1));
  std::swap(transposition(off + 1, off + 1), transposition(off + 1, off));
  std::vector<FieldMatrix> gens{transposition};
  if (k > 2) {
    // e_{off+i} -> e_{off+(i+1 mod k)}
    auto cycle = identity_matrix(field, n);
    for (std::size_t i = 0; i < k; ++i) {
      cycle(off + i, off + i) = FieldElement::zero(field);
      cycle(off + (i + 1) % k, off + i) = FieldElement::one(field);
    }
    gens.push_back(cycle);
  }
  return make_rep(name, factorial(k), field, n, std::move(gens));
}

namespace {

std::vector<std::int64_t> key_of(const FieldMatrix& m) {
  std::vector<std::int64_t> k;
  k.reserve(m.data().size());
  for (const auto& e : m.data()) k.push_back(e.index());
  return k;
}

}  // namespace

GeneratedGroup generated_group(const GroupRep& rep, std::uint64_t budget) {
  std::map<std::vector<std::int64_t>, FieldMatrix> seen;
  const auto id = identity_matrix(rep.field, rep.dim);
  std::vector<FieldMatrix> frontier{id};
  seen.emplace(key_of(id), id);
  while (!frontier.empty()) {
    std::vector<FieldMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : rep.generators) {
        auto prod = m * g;
        auto key = key_of(prod);
        if (seen.contains(key)) continue;
        if (seen.size() >= budget) throw BudgetExceeded("closure of " + rep.name, seen.size() + 1, budget);
        seen.emplace(std::move(key), prod);
        next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  GeneratedGroup g;
  for (auto& [k, m] : seen) g.elements.push_back(m);
  std::sort(g.elements.begin(), g.elements.end(), matrix_less);
  g.faithful = g.order() == rep.abstract_order;
  return g;
}

CentralizerBasis centralizer_basis(const GroupRep& rep) {
  const std::size_t n = rep.dim;
  const auto& f = rep.field;
  CentralizerBasis cb{f, n, {}, std::nullopt};
  const std::size_t vars = n * n;
  std::vector<std::vector<FieldElement>> kernel;
  if (rep.generators.empty()) {
    for (std::size_t v = 0; v < vars; ++v) {
      std::vector<FieldElement> e(vars, FieldElement::zero(f));
      e[v] = FieldElement::one(f);
      kernel.push_back(std::move(e));
    }
  } else {
    // Row (g, i, j): sum_k G_ik M_kj - M_ik G_kj, unknown M_ab at column a*n + b.
    FieldMatrix sys(rep.generators.size() * vars, vars, FieldElement::zero(f));
    std::size_t row = 0;
    for (const auto& g : rep.generators) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++row)
          for (std::size_t k = 0; k < n; ++k) {
            sys(row, k * n + j) += g(i, k);
            sys(row, i * n + k) -= g(k, j);
          }
    }
    kernel = nullspace(sys);
  }
  for (const auto& v : kernel) {
    FieldMatrix m(n, n, FieldElement::zero(f));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a * n + b];
    cb.basis.push_back(std::move(m));
  }

  const std::uint64_t order = rep.abstract_order;
  if (order % static_cast<std::uint64_t>(f.p) != 0 && n * n < static_cast<std::size_t>(f.p) &&
      f.degree == 1 && order <= 5040) {
    try {
      const auto grp = generated_group(rep, 5040);
      auto acc = FieldElement::zero(f);
      for (const auto& g : grp.elements) {
        auto tr = FieldElement::zero(f), tr_inv = FieldElement::zero(f);
        const auto ginv = *inverse(g);
        for (std::size_t i = 0; i < n; ++i) {
          tr += g(i, i);
          tr_inv += ginv(i, i);
        }
        acc += tr * tr_inv;
      }
      acc = acc / FieldElement(f, static_cast<std::int64_t>(grp.order() % static_cast<std::uint64_t>(f.p)));
      cb.character_dimension = static_cast<std::uint64_t>(acc.a());
    } catch (const BudgetExceeded&) {
    }
  }
  return cb;
}

std::vector<FieldMatrix> span_isometries(const std::vector<FieldMatrix>& basis, const FieldMatrix& b1,
                                         const FieldMatrix& b2, std::uint64_t budget, unsigned workers) {
  if (!b1.is_square() || !(b1.rows() == b2.rows() && b1.cols() == b2.cols()))
    throw DomainError("Gram matrices of different shapes");
  const std::size_t n = b1.rows();
  const auto& f = b1(0, 0).spec();
  const std::size_t d = basis.size();
  const auto space = saturating_pow(static_cast<std::uint64_t>(f.q()), static_cast<unsigned>(d));
  if (space > budget) throw BudgetExceeded("centralizer span enumeration", space, budget);
  const FieldTables t(f);
  const std::uint32_t q = t.q();
  const std::size_t nn = n * n;

  auto to_idx = [&](const FieldMatrix& m) {
    std::vector<std::uint16_t> v(nn);
    for (std::size_t k = 0; k < nn; ++k) v[k] = static_cast<std::uint16_t>(m.data()[k].index());
    return v;
  };
  const auto g1 = to_idx(b1);
  const auto g2 = to_idx(b2);
  // scaled[k][s] = (element s) * basis[k], entrywise.
  std::vector<std::vector<std::vector<std::uint16_t>>> scaled(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto bk = to_idx(basis[k]);
    scaled[k].resize(q);
    for (std::uint32_t s = 0; s < q; ++s) {
      scaled[k][s].resize(nn);
      for (std::size_t e = 0; e < nn; ++e) scaled[k][s][e] = t.mul(static_cast<std::uint16_t>(s), bk[e]);
    }
  }

  auto isometric = [&](const std::vector<std::uint16_t>& m) {
    // (M^T B1 M)_ij = sum_k M_ki (B1 M)_kj, checked entry by entry with early exit.
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint16_t> col(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        std::uint16_t acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc = t.add(acc, t.mul(g1[k * n + l], m[l * n + j]));
        col[k] = acc;
      }
      for (std::size_t i = 0; i <= j; ++i) {
        std::uint16_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc = t.add(acc, t.mul(m[k * n + i], col[k]));
        if (acc != g2[i * n + j]) return false;
      }
    }
    return true;
  };

  auto run = [&](std::uint32_t first_lo, std::uint32_t first_hi, std::vector<FieldMatrix>& out) {
    if (d == 0) return;
    // partial[k] = sum_{i<=k} c_i basis_i
    std::vector<std::vector<std::uint16_t>> partial(d, std::vector<std::uint16_t>(nn, 0));
    std::vector<std::uint32_t> c(d, 0);
    c[0] = first_lo;
    auto rebuild_from = [&](std::size_t k0) {
      for (std::size_t k = k0; k < d; ++k)
        for (std::size_t e = 0; e < nn; ++e) {
          const std::uint16_t prev = k == 0 ? 0 : partial[k - 1][e];
          partial[k][e] = t.add(prev, scaled[k][c[k]][e]);
        }
    };
    if (first_lo >= first_hi) return;
    rebuild_from(0);
    while (true) {
      const auto& m = partial[d - 1];
      if (isometric(m)) {
        FieldMatrix fm(n, n, FieldElement::zero(f));
        for (std::size_t e = 0; e < nn; ++e) fm(e / n, e % n) = FieldElement::from_index(f, m[e]);
        if (!determinant(fm).is_zero()) out.push_back(std::move(fm));
      }
      // odometer, last coefficient fastest
      std::size_t k = d;
      while (k > 0) {
        --k;
        const std::uint32_t limit = k == 0 ? first_hi : q;
        if (++c[k] < limit) break;
        if (k == 0) return;
        c[k] = 0;
      }
      rebuild_from(k);
    }
  };

  std::vector<FieldMatrix> result;
  if (d == 0) {
    // Only the zero matrix lies in an empty span; it is never invertible.
    return result;
  }
  workers = std::max(1u, std::min<unsigned>(workers, q));
  std::vector<std::vector<FieldMatrix>> parts(workers);
  if (workers == 1) {
    run(0, q, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run, q * w / workers, q * (w + 1) / workers, std::ref(parts[w]));
    for (auto& th : pool) th.join();
  }
  for (auto& p : parts) result.insert(result.end(), p.begin(), p.end());
  std::sort(result.begin(), result.end(), matrix_less);
  return result;
}

}  // namespace genuslab
