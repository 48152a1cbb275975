#include "genuslab/curve.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "genuslab/error.hpp"

namespace genuslab {

std::string CurveData::to_string() const {
  return "y^2 = x^3 + " + a.to_string() + "*x + " + b.to_string() + " over " + field.name();
}

bool is_smooth(const FieldSpec& field, const FieldElement& a, const FieldElement& b) {
  const FieldElement four(field, 4), twenty_seven(field, 27);
  return !(four * a * a * a + twenty_seven * b * b).is_zero();
}

CurveData make_curve(const FieldSpec& field, const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == field) || !(b.spec() == field))
    throw DomainError("curve coefficients do not belong to " + field.name());
  if (!is_smooth(field, a, b))
    throw DomainError("singular curve: 4a^3 + 27b^2 = 0 over " + field.name());
  return CurveData{field, a, b};
}

CurveData make_curve(const FieldSpec& field, std::int64_t a, std::int64_t b) {
  return make_curve(field, FieldElement(field, a), FieldElement(field, b));
}

bool CurvePoint::operator<(const CurvePoint& o) const {
  if (infinity != o.infinity) return infinity;
  if (infinity) return false;
  if (x.index() != o.x.index()) return x.index() < o.x.index();
  return y.index() < o.y.index();
}

std::string CurvePoint::to_string() const {
  if (infinity) return "inf";
  return "(" + x.to_string() + "," + y.to_string() + ")";
}

bool on_curve(const CurveData& c, const CurvePoint& p) {
  if (p.infinity) return true;
  if (!(p.x.spec() == c.field) || !(p.y.spec() == c.field)) return false;
  return p.y * p.y == c.rhs(p.x);
}

namespace {

// roots[v] lists every r with r^2 = v, ascending by index.
std::vector<std::vector<FieldElement>> square_root_table(const FieldSpec& f) {
  std::vector<std::vector<FieldElement>> roots(static_cast<std::size_t>(f.q()));
  for (const auto& r : field_elements(f)) roots[static_cast<std::size_t>((r * r).index())].push_back(r);
  return roots;
}

}  // namespace

std::vector<CurvePoint> enumerate_points(const CurveData& c, unsigned workers) {
  const auto roots = square_root_table(c.field);
  const std::int64_t q = c.field.q();
  workers = std::max(1u, workers);
  std::vector<std::vector<CurvePoint>> chunks(workers);
  auto work = [&](unsigned w) {
    const std::int64_t lo = q * w / workers, hi = q * (w + 1) / workers;
    for (std::int64_t k = lo; k < hi; ++k) {
      const auto x = FieldElement::from_index(c.field, k);
      for (const auto& y : roots[static_cast<std::size_t>(c.rhs(x).index())])
        chunks[w].push_back(CurvePoint::affine(x, y));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_affine_points(const CurveData& c) {
  // Each x contributes 1 + chi(f(x)) points.
  const std::int64_t q = c.field.q();
  std::vector<std::uint8_t> root_count(static_cast<std::size_t>(q), 0);
  for (const auto& r : field_elements(c.field)) ++root_count[static_cast<std::size_t>((r * r).index())];
  std::uint64_t n = 0;
  for (std::int64_t k = 0; k < q; ++k)
    n += root_count[static_cast<std::size_t>(c.rhs(FieldElement::from_index(c.field, k)).index())];
  return n;
}

CurvePoint negate_point(const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y);
}

CurvePoint add_points(const CurveData& c, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(c, p) || !on_curve(c, q))
    throw DomainError("point not on " + c.to_string());
  if (p.infinity) return q;
  if (q.infinity) return p;
  FieldElement slope;
  if (p.x == q.x) {
    if ((p.y + q.y).is_zero()) return CurvePoint::at_infinity();
    // tangent: (3x^2 + a) / 2y
    slope = (FieldElement(c.field, 3) * p.x * p.x + c.a) / (FieldElement(c.field, 2) * p.y);
  } else {
    slope = (q.y - p.y) / (q.x - p.x);
  }
  const auto x3 = slope * slope - p.x - q.x;
  const auto y3 = slope * (p.x - x3) - p.y;
  return CurvePoint::affine(x3, y3);
}

CurvePoint multiply_point(const CurveData& c, std::int64_t k, const CurvePoint& p) {
  CurvePoint base = k < 0 ? negate_point(p) : p;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  CurvePoint acc = CurvePoint::at_infinity();
  while (e != 0) {
    if (e & 1u) acc = add_points(c, acc, base);
    base = add_points(c, base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<CurvePoint> CurveGroup::generator_points() const {
  std::vector<CurvePoint> out;
  for (auto i : structure.generators) out.push_back(points[i]);
  return out;
}

std::size_t CurveGroup::index_of(const CurvePoint& p) const {
  const auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) throw DomainError("point " + p.to_string() + " not enumerated");
  return static_cast<std::size_t>(it - points.begin());
}

std::uint64_t CurveGroup::order_of(const CurvePoint& p) const {
  std::uint64_t n = 1;
  for (CurvePoint cur = p; !cur.infinity; cur = add_points(curve, cur, p)) ++n;
  return n;
}

CurveGroup group_structure(const CurveData& c, std::uint64_t budget, unsigned workers) {
  const auto q = static_cast<std::uint64_t>(c.field.q());
  if (q > budget) throw BudgetExceeded("point enumeration over " + c.field.name(), q, budget);
  CurveGroup g{c, enumerate_points(c, workers), {}};

  // Memoised index arithmetic so the decomposition works on integers.
  std::unordered_map<std::uint64_t, std::size_t> memo;
  const std::uint64_t n = g.points.size();
  IndexedGroup ig;
  ig.size = n;
  ig.zero = 0;
  ig.add = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0) return j;
    if (j == 0) return i;
    const std::uint64_t key = std::min(i, j) * n + std::max(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto r = g.index_of(add_points(c, g.points[i], g.points[j]));
    memo.emplace(key, r);
    return r;
  };
  g.structure = decompose(ig);
  return g;
}

bool hasse_weil_holds(std::uint64_t total_points, std::uint64_t q) {
  const std::int64_t diff = static_cast<std::int64_t>(total_points) - static_cast<std::int64_t>(q + 1);
  return static_cast<std::uint64_t>(diff * diff) <= 4 * q;
}

bool hasse_weil_check(const CurveData& c) {
  return hasse_weil_holds(count_affine_points(c) + 1, static_cast<std::uint64_t>(c.field.q()));
}

CurveData base_change(const CurveData& c, const FieldSpec& target) {
  if (target.p != c.field.p) throw DomainError("base change must keep the characteristic");
  if (!c.a.in_prime_field() || !c.b.in_prime_field())
    throw DomainError("curve coefficients are not in the prime field");
  return make_curve(target, c.a.a(), c.b.a());
}

CurvePoint frobenius_point(const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x.frobenius(), p.y.frobenius());
}

TraceKernel trace_kernel(const CurveData& c, unsigned workers) {
  if (c.field.degree != 2) throw DomainError("trace map needs a quadratic extension field");
  if (!c.a.in_prime_field() || !c.b.in_prime_field())
    throw DomainError("curve coefficients are not in the prime field");
  const auto pts = enumerate_points(c, workers);
  TraceKernel tk;
  tk.total = pts.size();
  std::set<CurvePoint> image;
  for (const auto& p : pts) {
    const auto t = add_points(c, p, frobenius_point(p));
    if (t.infinity) ++tk.kernel_size;
    image.insert(t);
  }
  tk.image_size = image.size();
  return tk;
}

}  // namespace genuslab
