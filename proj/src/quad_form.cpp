#include "genuslab/quad_form.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace genuslab {

namespace {

RingElement laplace(const RingMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return m(0, 0).ring().one();
  auto acc = m(0, 0).ring().zero();
  bool negative = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    const auto& entry = m(row, c);
    if (!entry.is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      auto term = entry * laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      acc = negative ? acc - term : acc + term;
    }
    negative = !negative;
  }
  return acc;
}

}  // namespace

RingElement determinant(const RingMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw DomainError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
  return laplace(m, cols, 0);
}

GramForm::GramForm(const CoordRing& ring, RingMatrix gram) : ring_(ring), gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw DomainError("Gram matrix must be square and non-empty");
  for (const auto& e : gram_.data())
    if (!(e.ring() == ring_)) throw DomainError("Gram matrix entries from another ring");
  if (!gram_.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
  det_ = genuslab::determinant(gram_);
}

GramForm GramForm::from_constants(const CoordRing& ring, const FieldMatrix& gram) {
  RingMatrix m(gram.rows(), gram.cols(), ring.zero());
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) m(i, j) = ring.constant(gram(i, j));
  return GramForm(ring, std::move(m));
}

bool GramForm::is_constant() const {
  return std::all_of(gram_.data().begin(), gram_.data().end(),
                     [](const RingElement& e) { return e.is_zero() || e.is_constant(); });
}

FieldMatrix GramForm::constant_gram() const {
  if (!is_constant()) throw DomainError("form has non-constant entries");
  const auto& f = ring_.field();
  FieldMatrix m(rank(), rank(), FieldElement::zero(f));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = gram_(i, j).a().coeff(0);
  return m;
}

RingElement GramForm::bilinear(const std::vector<RingElement>& u, const std::vector<RingElement>& v) const {
  if (u.size() != rank() || v.size() != rank()) throw DomainError("vector length does not match the form rank");
  auto acc = ring_.zero();
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) acc = acc + u[i] * gram_(i, j) * v[j];
  return acc;
}

RingElement GramForm::value(const std::vector<RingElement>& v) const {
  return bilinear(v, v).scaled(FieldElement(ring_.field(), 2).inv());
}

std::string GramForm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rank(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < rank(); ++j) s += (j ? ", " : "") + gram_(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

Isotropy is_isotropic(const GramForm& f, std::uint64_t budget) {
  if (!f.regular()) throw DomainError("isotropy test needs a regular form");
  const auto& field = f.ring().field();
  const std::size_t n = f.rank();
  const auto space = saturating_pow(static_cast<std::uint64_t>(field.q()), static_cast<unsigned>(n));
  if (space > budget) throw BudgetExceeded("isotropic vector search over F_q^n", space, budget);

  Isotropy r;
  const bool constant = f.is_constant();
  // Constant vectors in lexicographic order, first coordinate most significant.
  const FieldTables t(field);
  const std::uint32_t q = t.q();
  std::vector<std::uint16_t> g(n * n);
  if (constant) {
    const auto b = f.constant_gram();
    for (std::size_t k = 0; k < n * n; ++k) g[k] = static_cast<std::uint16_t>(b.data()[k].index());
  }
  std::vector<std::uint16_t> v(n, 0);
  std::optional<std::vector<std::uint16_t>> found;
  for (std::uint64_t it = 1; it < space; ++it) {
    for (std::size_t k = n; k-- > 0;) {
      if (++v[k] < q) break;
      v[k] = 0;
    }
    ++r.searched;
    bool zero;
    if (constant) {
      std::uint16_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!v[i]) continue;
        std::uint16_t row = 0;
        for (std::size_t j = 0; j < n; ++j) row = t.add(row, t.mul(g[i * n + j], v[j]));
        acc = t.add(acc, t.mul(v[i], row));
      }
      zero = acc == 0;
    } else {
      std::vector<RingElement> rv;
      for (auto c : v) rv.push_back(f.ring().constant(FieldElement::from_index(field, c)));
      zero = f.bilinear(rv, rv).is_zero();
    }
    if (zero) {
      found = v;
      break;
    }
  }

  if (found) {
    std::vector<RingElement> w;
    for (auto c : *found) w.push_back(f.ring().constant(FieldElement::from_index(field, c)));
    r.witness = w;
    r.verdict = Verdict::Yes;
    r.generic = Verdict::Yes;
    r.fiber = constant ? Verdict::Yes : Verdict::NoWitnessWithinBound;
    r.note = "constant isotropic vector";
    return r;
  }
  if (constant) {
    r.verdict = r.fiber = r.generic = Verdict::No;
    r.note = "anisotropic over " + field.name() + " (exhaustive); F_q is algebraically closed in K";
  } else {
    r.note = "no constant isotropic vector; non-constant vectors not searched";
  }
  return r;
}

std::string DiscriminantModule::to_string() const {
  return "det " + det.to_string() + " (" + (square_class ? "square" : "non-square") + " class), " + module;
}

DiscriminantModule discriminant(const GramForm& f) {
  if (!f.regular()) throw DomainError("discriminant module needs a regular form");
  const auto c = f.det().a().coeff(0);
  return DiscriminantModule{f.det(), is_square(c).square,
                            "free of rank 1 on e1^...^e" + std::to_string(f.rank())};
}

bool is_gamma_form(const GramForm& f, const GroupRep& rep) {
  if (rep.dim != f.rank())
    throw DomainError("representation of dimension " + std::to_string(rep.dim) + " against a form of rank " +
                      std::to_string(f.rank()));
  if (!(rep.field == f.ring().field())) throw DomainError("representation over another field");
  const auto& ring = f.ring();
  for (const auto& g : rep.generators) {
    RingMatrix rg(g.rows(), g.cols(), ring.zero());
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) rg(i, j) = ring.constant(g(i, j));
    if (!(rg.transpose() * f.gram() * rg == f.gram())) return false;
  }
  return true;
}

namespace {

using Vec = std::vector<FieldElement>;

bool vec_less(const Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].index() != b[k].index()) return a[k].index() < b[k].index();
  return false;
}

FieldElement form_dot(const FieldMatrix& b, const Vec& u, const Vec& v) {
  auto acc = FieldElement::zero(b(0, 0).spec());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) acc += u[i] * b(i, j) * v[j];
  return acc;
}

class ColumnSearch {
 public:
  ColumnSearch(FieldMatrix b1, FieldMatrix b2) : b1_(std::move(b1)), b2_(std::move(b2)), n_(b1_.rows()) {}

  /// Sorted candidates for column `cols.size()` given the earlier columns.
  std::vector<Vec> candidates(const std::vector<Vec>& cols, std::uint64_t& searched) const {
    const auto& f = b1_(0, 0).spec();
    const std::size_t j = cols.size();
    Vec particular(n_, FieldElement::zero(f));
    std::vector<Vec> kernel;
    if (j == 0) {
      for (std::size_t k = 0; k < n_; ++k) {
        Vec e(n_, FieldElement::zero(f));
        e[k] = FieldElement::one(f);
        kernel.push_back(std::move(e));
      }
    } else {
      FieldMatrix sys(j, n_, FieldElement::zero(f));
      Vec rhs(j, FieldElement::zero(f));
      for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t c = 0; c < n_; ++c) {
          auto s = FieldElement::zero(f);
          for (std::size_t k = 0; k < n_; ++k) s += cols[i][k] * b1_(k, c);
          sys(i, c) = s;
        }
        rhs[i] = b2_(i, j);
      }
      auto sol = solve(sys, rhs);
      if (!sol) return {};
      particular = *sol;
      kernel = nullspace(sys);
    }
    std::vector<Vec> out;
    const auto q = static_cast<std::uint32_t>(f.q());
    const auto target = b2_(j, j);
    const auto total = saturating_pow(q, static_cast<unsigned>(kernel.size()));
    for (std::uint64_t it = 0; it < total; ++it) {
      Vec v = particular;
      std::uint64_t rest = it;
      for (std::size_t k = 0; k < kernel.size(); ++k, rest /= q) {
        const auto digit = rest % q;
        if (!digit) continue;
        const auto s = FieldElement::from_index(f, static_cast<std::int64_t>(digit));
        for (std::size_t e = 0; e < n_; ++e) v[e] += s * kernel[k][e];
      }
      ++searched;
      if (form_dot(b1_, v, v) == target) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), vec_less);
    return out;
  }

  /// Depth-first in candidate order; `visit` returns false to stop.
  bool dfs(std::vector<Vec>& cols, std::uint64_t& searched, const std::function<bool(const FieldMatrix&)>& visit) const {
    if (cols.size() == n_) {
      const auto& f = b1_(0, 0).spec();
      FieldMatrix a(n_, n_, FieldElement::zero(f));
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) a(i, j) = cols[j][i];
      if (determinant(a).is_zero()) return true;
      return visit(a);
    }
    for (auto& v : candidates(cols, searched)) {
      cols.push_back(std::move(v));
      const bool go_on = dfs(cols, searched, visit);
      cols.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::size_t n() const { return n_; }

 private:
  FieldMatrix b1_, b2_;
  std::size_t n_;
};

void check_pair(const GramForm& f1, const GramForm& f2, std::uint64_t budget) {
  if (!(f1.ring() == f2.ring())) throw DomainError("forms over different rings");
  if (f1.rank() != f2.rank()) throw DomainError("forms of different rank");
  if (!f1.is_constant() || !f2.is_constant()) throw DomainError("fiber isometry needs constant Gram matrices");
  const auto n = static_cast<unsigned>(f1.rank());
  // Roughly the number of partial isometries at the deepest level.
  const auto cost = saturating_pow(static_cast<std::uint64_t>(f1.ring().field().q()), n * (n + 1) / 2);
  if (cost > budget) throw BudgetExceeded("fiber isometry search", cost, budget);
}

}  // namespace

IsometryResult fiber_isometry(const GramForm& f1, const GramForm& f2, std::uint64_t budget, unsigned workers) {
  check_pair(f1, f2, budget);
  IsometryResult r;
  if (f1.gram() == f2.gram()) {
    r.verdict = Verdict::Yes;
    r.witness = identity_matrix(f1.ring().field(), f1.rank());
    r.note = "identical Gram matrices";
    return r;
  }
  const ColumnSearch search(f1.constant_gram(), f2.constant_gram());
  std::uint64_t searched = 0;
  const auto first = search.candidates({}, searched);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, first.size()))));

  // Contiguous chunks of the first-column candidates; the earliest chunk with
  // a witness holds the least one. Work is counted per candidate so that
  // `searched` matches a serial run.
  std::vector<std::optional<FieldMatrix>> found(first.size());
  std::vector<std::uint64_t> counts(first.size(), 0);
  auto run = [&](unsigned w) {
    const std::size_t lo = first.size() * w / workers, hi = first.size() * (w + 1) / workers;
    for (std::size_t k = lo; k < hi; ++k) {
      std::vector<Vec> cols{first[k]};
      search.dfs(cols, counts[k], [&](const FieldMatrix& a) {
        found[k] = a;
        return false;
      });
      if (found[k]) break;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  r.searched = searched;
  for (std::size_t k = 0; k < first.size(); ++k) {
    r.searched += counts[k];
    if (found[k]) {
      r.verdict = Verdict::Yes;
      r.witness = found[k];
      break;
    }
  }
  r.note = r.verdict == Verdict::Yes ? "isometric over " + f1.ring().field().name()
                                     : "no isometry over " + f1.ring().field().name() + " (exhaustive)";
  return r;
}

std::vector<FieldMatrix> all_fiber_isometries(const GramForm& f1, const GramForm& f2, std::uint64_t budget) {
  check_pair(f1, f2, budget);
  const ColumnSearch search(f1.constant_gram(), f2.constant_gram());
  std::vector<FieldMatrix> out;
  std::vector<Vec> cols;
  std::uint64_t searched = 0;
  search.dfs(cols, searched, [&](const FieldMatrix& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

GammaIsometryResult fiber_gamma_isometry(const GramForm& f1, const GramForm& f2, const GroupRep& rep,
                                         std::uint64_t budget, unsigned workers) {
  if (!(f1.ring() == f2.ring()) || f1.rank() != f2.rank()) throw DomainError("forms of different shape");
  if (!f1.is_constant() || !f2.is_constant()) throw DomainError("fiber isometry needs constant Gram matrices");
  if (!is_gamma_form(f1, rep) || !is_gamma_form(f2, rep))
    throw DomainError("both forms must be Gamma-forms for " + rep.name);
  const auto cb = centralizer_basis(rep);
  GammaIsometryResult r;
  r.centralizer_dimension = cb.dimension();
  r.witnesses = span_isometries(cb.basis, f1.constant_gram(), f2.constant_gram(), budget, workers);
  if (!r.witnesses.empty()) {
    r.verdict = Verdict::Yes;
    r.witness = r.witnesses.front();
  }
  r.note = std::to_string(r.witnesses.size()) + " equivariant isometries in a centralizer of dimension " +
           std::to_string(cb.dimension());
  return r;
}

}  // namespace genuslab
