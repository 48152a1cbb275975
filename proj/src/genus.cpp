#include "genuslab/genus.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <tuple>

namespace genuslab {

namespace {

CurveGroup pic_of(const CoordRing& ring, std::uint64_t budget, unsigned workers) {
  return group_structure(ring.curve(), budget, workers);
}

FieldElement smallest_nonsquare(const FieldSpec& f) {
  for (const auto& e : field_elements(f))
    if (!e.is_zero() && !is_square(e).square) return e;
  throw DomainError("no non-square in " + f.name());
}

}  // namespace

GenusCount genus_size(const CoordRing& ring, const GramForm& form, std::uint64_t budget, unsigned workers) {
  if (!(form.ring() == ring)) throw DomainError("form over another ring");
  if (form.rank() < 3) throw DomainError("genus size via Pic/2 needs rank >= 3, got " + std::to_string(form.rank()));
  if (!form.regular()) throw DomainError("genus size needs a regular form");
  GenusCount g;
  g.pic = pic_of(ring, budget, workers).structure;
  g.size = m_torsion_count(g.pic, 2);
  g.proper_equals_genus = true;
  g.license = "c(q) = Pic(O)/2 for regular isotropic q of rank >= 3; c+(q) = c(q) for regular isotropic q; "
              "|Pic/2| = |Pic[2]|";
  return g;
}

GenusCount proper_gamma_genus_size_gm(const CoordRing& ring, std::uint64_t budget, unsigned workers) {
  GenusCount g;
  g.pic = pic_of(ring, budget, workers).structure;
  g.size = g.pic.order;
  g.license = "c+_Gamma(q) = H^1(O, G_m) = Pic(O) when the fixed connected group is G_m (assumed); "
              "Pic(O) = C(F_q)";
  return g;
}

MuH1Size mu_m_h1_size(const CoordRing& ring, std::uint64_t m, std::uint64_t budget, unsigned workers) {
  if (m < 1) throw DomainError("m must be positive");
  const auto& f = ring.field();
  if (m % static_cast<std::uint64_t>(f.p) == 0)
    throw DomainError("m = " + std::to_string(m) + " is divisible by the characteristic " + std::to_string(f.p));
  MuH1Size r;
  r.units_part = std::gcd(m, static_cast<std::uint64_t>(f.q()) - 1);
  r.torsion_part = m == 1 ? 1 : m_torsion_count(pic_of(ring, budget, workers).structure, m);
  r.total = r.units_part * r.torsion_part;
  r.license = "1 -> O^x/(O^x)^m -> H^1(O, mu_m) -> Pic(O)[m] -> 1 with O^x = F_q^x";
  return r;
}

KernelToK kernel_to_K_mu2(const CoordRing& ring, int degree_bound, std::uint64_t budget, unsigned workers) {
  const auto pic = pic_of(ring, budget, workers);
  const auto nu = ring.constant(smallest_nonsquare(ring.field()));

  // Kummer generators of the 2-torsion classes, identity first.
  std::vector<std::pair<std::string, RingElement>> torsion{{"0", ring.one()}};
  for (const auto& p : pic.points) {
    if (p.infinity || !p.y.is_zero()) continue;
    const auto pair = make_kummer_pair(Ideal::of_point(ring, p), 2, degree_bound);
    torsion.emplace_back("[" + p.to_string() + "]", pair.g);
  }

  KernelToK k;
  k.complete = true;
  k.size = 1;
  for (int unit = 0; unit < 2; ++unit)
    for (const auto& [label, g] : torsion) {
      if (unit == 0 && label == "0") continue;
      const auto w = unit ? nu * g : g;
      const auto sq = is_square_in_ring(w);
      const std::string name = (unit ? "unit class of " + nu.to_string() : std::string("unit class 1")) +
                               ", Pic[2] class " + label;
      k.witnesses.push_back({name, w, sq.verdict});
      if (sq.verdict == Verdict::Yes) ++k.size;
      if (sq.verdict == Verdict::NoWitnessWithinBound) k.complete = false;
    }
  k.license = "O is normal, so an element of O is a square in K iff it is a square in O; the map "
              "H^1(O, mu_2) -> K^x/(K^x)^2 sends (L, g) to the class of g";
  return k;
}

NormTorusGenus norm_torus_genus(const CurveData& curve, unsigned workers) {
  const auto base = make_field(curve.field.p, 1);
  if (is_square(-FieldElement::one(base)).square)
    throw DomainError("-1 is a square in " + base.name() + ": the norm torus splits (out of scope)");
  const auto over_ext = curve.field.degree == 2 ? curve : base_change(curve, make_field(curve.field.p, 2));
  const auto tk = trace_kernel(over_ext, workers);
  return NormTorusGenus{tk.kernel_size, tk.image_size, tk.total,
                        "c+(1_2) = H^1(O, N) = ker[Pic(O(i)) -> Pic(O)] for the norm torus N of O(i)/O"};
}

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Passed:
      return "passed";
    case ItemStatus::Failed:
      return "failed";
    case ItemStatus::FiberEvidenced:
      return "fiber-evidenced";
    case ItemStatus::FiberContradicted:
      return "fiber-contradicted";
    case ItemStatus::Assumed:
      return "assumed";
  }
  return "?";
}

bool counts_as_pass(ItemStatus s) {
  return s == ItemStatus::Passed || s == ItemStatus::FiberEvidenced || s == ItemStatus::Assumed;
}

Certificate certify_non_injection(const CoordRing& ring, const GramForm& form, const GroupRep& rep,
                                  ShapeEvidence evidence, std::uint64_t budget, unsigned workers) {
  Certificate c;
  const auto& f = ring.field();
  auto add = [&](std::string name, bool ok, std::string detail) {
    c.items.push_back({std::move(name), ok ? ItemStatus::Passed : ItemStatus::Failed, std::move(detail)});
  };

  add("rank >= 3", form.rank() >= 3, "rank " + std::to_string(form.rank()));
  add("form regular", form.regular(), "det " + form.det().to_string());
  bool gamma = false;
  std::string gamma_detail;
  try {
    gamma = is_gamma_form(form, rep);
    gamma_detail = rep.name + (gamma ? " preserves q" : " does not preserve q");
  } catch (const DomainError& e) {
    gamma_detail = e.what();
  }
  add("Gamma-form", gamma, gamma_detail);
  const bool minus_one = is_square(-FieldElement::one(f)).square;
  add("-1 square in F_q", minus_one, "-1 " + std::string(minus_one ? "is" : "is not") + " a square in " + f.name());

  const auto pic = pic_of(ring, budget, workers);
  c.pic = pic.structure;
  c.pic_order = pic.structure.order;
  c.pic_mod_two = m_torsion_count(pic.structure, 2);
  add("exp(Pic) > 2", pic.structure.exponent > 2,
      "Pic = " + pic.structure.to_string() + ", exponent " + std::to_string(pic.structure.exponent));

  CheckItem shape{"fixed connected group is G_m", ItemStatus::Assumed, ""};
  if (evidence == ShapeEvidence::Assume) {
    shape.detail = "assumed by request";
  } else if (!gamma || !form.is_constant() || !form.regular()) {
    shape.detail = "assumed: no fiber check possible for this form";
  } else {
    try {
      const auto fx = fixed_orthogonal_order(form, rep, budget, workers);
      const auto predicted = gm_shape_det1_prediction(f);
      shape.status = fx.det1_order == predicted ? ItemStatus::FiberEvidenced : ItemStatus::FiberContradicted;
      shape.detail = "det-1 fixed points over " + f.name() + ": " + std::to_string(fx.det1_order) +
                     ", G_m x {+-1} predicts " + std::to_string(predicted);
    } catch (const BudgetExceeded& e) {
      shape.detail = "assumed: fiber enumeration needs " + std::to_string(e.required()) + " > budget " +
                     std::to_string(e.budget());
    }
  }
  c.items.push_back(shape);
  c.items.push_back({"semidirect factor with finite quotient", ItemStatus::Assumed,
                     "assumed: not computable at a fiber"});

  for (const auto& it : c.items)
    if (!counts_as_pass(it.status)) c.failing.push_back(it.name);
  c.non_injective = c.failing.empty();
  c.bridge = "ker[c+_Gamma(q) -> c_Gamma(q)] = 1; |c+_Gamma(q)| = |Pic| = " + std::to_string(c.pic_order) +
             " vs |c(q)| = |Pic/2| = " + std::to_string(c.pic_mod_two) + "; Pic injects into Pic/2 only if exp <= 2 (" +
             (injects_into_mod_two_quotient(c.pic) ? "it does" : "it does not") + ")";
  return c;
}

std::vector<ScanRow> scan(const std::vector<FieldSpec>& fields,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& coefficients,
                          std::uint64_t budget, unsigned workers) {
  struct Cell {
    FieldSpec field;
    std::int64_t a, b;
  };
  std::vector<Cell> cells;
  for (const auto& f : fields) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    if (coefficients.empty()) {
      for (std::int64_t a = 0; a < f.p; ++a)
        for (std::int64_t b = 0; b < f.p; ++b) pairs.emplace_back(a, b);
    } else {
      for (auto [a, b] : coefficients) pairs.emplace_back(((a % f.p) + f.p) % f.p, ((b % f.p) + f.p) % f.p);
    }
    for (auto [a, b] : pairs)
      if (is_smooth(f, FieldElement(f, a), FieldElement(f, b))) cells.push_back({f, a, b});
  }
  std::vector<ScanRow> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  auto fill_row = [&](std::size_t k) {
    const auto& c = cells[k];
    const auto curve = make_curve(c.field, c.a, c.b);
    const auto g = group_structure(curve, budget, 1);
    auto& r = rows[k];
    r.q = c.field.q();
    r.a = c.a;
    r.b = c.b;
    r.curve = curve.to_string();
    r.pic_order = g.total_count();
    r.affine_count = g.affine_count();
    r.structure = g.structure.to_string();
    r.exponent = g.structure.exponent;
    r.minus_one_square = is_square(-FieldElement::one(c.field)).square;
    r.eligible = r.minus_one_square && r.exponent > 2;
    r.hasse_weil = hasse_weil_holds(r.pic_order, static_cast<std::uint64_t>(r.q));
  };
  auto fill = [&](std::size_t k) {
    try {
      fill_row(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || cells.size() < 2) {
    for (std::size_t k = 0; k < cells.size(); ++k) fill(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < cells.size(); k += workers) fill(k);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::sort(rows.begin(), rows.end(), [](const ScanRow& x, const ScanRow& y) {
    return std::tie(x.q, x.a, x.b) < std::tie(y.q, y.a, y.b);
  });
  return rows;
}

}  // namespace genuslab
