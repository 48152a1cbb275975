#include "genuslab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "genuslab/genus.hpp"
#include "genuslab/parse.hpp"

namespace genuslab {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "genus-lab/1";

// ---------------------------------------------------------------- reports

struct Builder {
  json body;
  json checks = json::array();

  explicit Builder(const std::string& command) {
    body["schema"] = kSchema;
    body["command"] = command;
  }

  void row(const std::string& name, json expected, json actual, const std::string& status,
           const std::string& license) {
    json c;
    c["check"] = name;
    c["expected"] = std::move(expected);
    c["actual"] = std::move(actual);
    c["status"] = status;
    c["license"] = license;
    checks.push_back(std::move(c));
  }
  void check(const std::string& name, const json& expected, const json& actual, const std::string& license) {
    row(name, expected, actual, expected == actual ? "PASS" : "FAIL", license);
  }
  // Disagreement with a stated value that is reported but not enforced.
  void flag(const std::string& name, const json& expected, const json& actual, const std::string& license) {
    row(name, expected, actual, expected == actual ? "PASS" : "FLAG", license);
  }

  Report finish() {
    if (!checks.empty()) {
      std::size_t pass = 0, fail = 0, flagged = 0;
      for (const auto& c : checks) {
        const auto s = c["status"].get<std::string>();
        pass += s == "PASS";
        fail += s == "FAIL";
        flagged += s == "FLAG";
      }
      body["checks"] = checks;
      body["summary"] = {{"pass", pass}, {"fail", fail}, {"flag", flagged}};
    }
    return body;
  }
};

template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

json structure_json(const AbelianStructure& s) {
  return {{"order", s.order},
          {"structure", s.to_string()},
          {"invariant_factors", s.factors},
          {"exponent", s.exponent},
          {"cyclic", s.is_cyclic()}};
}

json vector_json(const std::vector<RingElement>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive() || e.is_array(); });
    if (flat) {
      std::string s = "[";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar_text(v[k]);
      return s + "]";
    }
  }
  return v.dump();
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out,
             std::vector<std::pair<std::string, const json*>>& tables) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out, tables);
  } else if (is_table(v)) {
    tables.emplace_back(path, &v);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

std::vector<std::string> table_columns(const json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

std::string render_table(const Report& r) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::pair<std::string, const json*>> tables;
  flatten(r, "", pairs, tables);
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& [k, _] : pairs) width = std::max(width, k.size());
  for (const auto& [k, v] : pairs) os << std::left << std::setw(static_cast<int>(width) + 2) << (k + ":") << v << '\n';
  for (const auto& [name, rows] : tables) {
    os << '\n' << name << ":\n";
    const auto cols = table_columns(*rows);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> w(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) w[c] = cols[c].size();
    for (const auto& row : *rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        line.push_back(row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "");
        w[c] = std::max(w[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      std::string s = " ";
      for (std::size_t c = 0; c < line.size(); ++c) {
        s += " " + line[c];
        if (c + 1 < line.size()) s += std::string(w[c] - line[c].size() + 1, ' ');
      }
      os << s << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
  }
  return os.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  const json* rows = nullptr;
  if (r.contains("rows") && is_table(r["rows"])) rows = &r["rows"];
  else if (r.contains("checks") && is_table(r["checks"])) rows = &r["checks"];
  if (rows) {
    const auto cols = table_columns(*rows);
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_cell(cols[c]);
    os << '\n';
    for (const auto& row : *rows) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        os << (c ? "," : "") << csv_cell(row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "");
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::pair<std::string, const json*>> tables;
  flatten(r, "", pairs, tables);
  os << "path,value\n";
  for (const auto& [k, v] : pairs) os << csv_cell(k) << ',' << csv_cell(v) << '\n';
  for (const auto& [name, t] : tables)
    for (std::size_t i = 0; i < t->size(); ++i)
      for (auto it = (*t)[i].begin(); it != (*t)[i].end(); ++it)
        os << csv_cell(name + "[" + std::to_string(i) + "]." + it.key()) << ',' << csv_cell(scalar_text(it.value()))
           << '\n';
  return os.str();
}

// ---------------------------------------------------------------- inputs

struct CurveInput {
  std::string curve;
  std::string positional;
  std::string field;
};

CurveData resolve_curve(CurveInput in) {
  if (!in.positional.empty()) {
    if (!in.curve.empty()) throw ParseError("give the curve either positionally or with --curve");
    in.curve = in.positional;
  }
  if (in.curve.empty()) {
    if (in.field.empty()) throw ParseError("a curve (or at least --field) is required");
    const auto f = parse_field(in.field);
    // The report only depends on the field here; take the first smooth curve.
    for (std::int64_t a = 1; a < f.p; ++a)
      for (std::int64_t b = 0; b < f.p; ++b)
        if (is_smooth(f, FieldElement(f, a), FieldElement(f, b))) return make_curve(f, a, b);
    throw DomainError("no smooth short Weierstrass curve over " + f.name());
  }
  if (!in.field.empty()) return parse_curve(in.curve, parse_field(in.field));
  return parse_curve(in.curve);
}

void add_curve_options(CLI::App* cmd, CurveInput& in, bool positional = true) {
  if (positional) cmd->add_option("CURVE", in.positional, "\"y^2 = x^3 + a*x + b over GF(q)\" or a right-hand side");
  cmd->add_option("--curve", in.curve, "curve, alternative to the positional argument");
  cmd->add_option("--field", in.field, "GF(p) or GF(p^2) when the curve omits it");
}

// |G / mG| from the point enumeration, to compare with |G[m]|.
std::uint64_t quotient_by_multiples(const CurveGroup& g, std::int64_t m) {
  std::set<CurvePoint> image;
  for (const auto& p : g.points) image.insert(multiply_point(g.curve, m, p));
  return g.total_count() / image.size();
}

json curve_json(const CurveData& c) {
  return {{"equation", c.to_string()}, {"field", c.field.name()}, {"a", c.a.to_string()}, {"b", c.b.to_string()}};
}

// ---------------------------------------------------------------- commands

Report cmd_field(const std::string& spec) {
  const auto f = parse_field(spec);
  Builder b("field");
  b.body["field"] = f.name();
  b.body["p"] = f.p;
  b.body["degree"] = f.degree;
  b.body["q"] = f.q();
  if (f.degree == 2)
    b.body["generator"] = f.generator_is_i() ? std::string("i, i^2 = -1") : "w, w^2 = " + std::to_string(f.d);
  const auto minus_one = is_square(FieldElement(f, -1));
  b.body["minus_one_square"] = minus_one.square;
  std::uint64_t squares = 0;
  for (const auto& e : field_elements(f))
    if (!e.is_zero() && is_square(e).square) ++squares;
  b.body["nonzero_squares"] = squares;
  b.check("nonzero squares", static_cast<std::uint64_t>((f.q() - 1) / 2), squares, "Euler criterion");
  b.check("-1 square iff q = 1 mod 4", f.q() % 4 == 1, minus_one.square, "Euler criterion");
  return b.finish();
}

Report cmd_curve(const CurveInput& in, bool structure, bool points, const RunConfig& cfg) {
  const auto c = resolve_curve(in);
  const auto g = group_structure(c, cfg.budget, cfg.workers);
  Builder b("curve");
  b.body["curve"] = curve_json(c);
  b.body["affine_points"] = g.affine_count();
  b.body["projective_points"] = g.total_count();
  const auto q = static_cast<std::uint64_t>(c.field.q());
  b.body["hasse_weil_interval"] = {q + 1 - static_cast<std::uint64_t>(std::floor(2 * std::sqrt(double(q)))),
                                   q + 1 + static_cast<std::uint64_t>(std::floor(2 * std::sqrt(double(q))))};
  if (structure) {
    b.body["structure"] = structure_json(g.structure);
    b.body["license"] = "Pic(O) = C(F_q)";
  }
  if (points) {
    json pts = json::array();
    for (const auto& p : g.points) pts.push_back(p.to_string());
    b.body["points"] = pts;
  }
  b.check("Hasse-Weil bound", true, hasse_weil_holds(g.total_count(), q), "Hasse-Weil");
  if (structure) b.check("product of invariant factors", g.total_count(), g.structure.order, "enumeration");
  return b.finish();
}

Report cmd_pic(const CurveInput& in, std::int64_t m, const RunConfig& cfg) {
  if (m < 1) throw ParseError("--torsion must be >= 1");
  const auto c = resolve_curve(in);
  const auto g = group_structure(c, cfg.budget, cfg.workers);
  const auto ring = CoordRing(c);
  Builder b("pic");
  b.body["curve"] = curve_json(c);
  b.body["pic"] = structure_json(g.structure);
  b.body["pic"]["license"] = "Pic(O) = C(F_q)";
  const auto torsion = m_torsion_count(g.structure, m);
  const auto quotient = quotient_by_multiples(g, m);
  b.body["m"] = m;
  b.body["m_torsion"] = torsion;
  b.body["pic_mod_m"] = quotient;
  b.body["injects_into_pic_mod_2"] = injects_into_mod_two_quotient(g.structure);
  const auto u = units(ring);
  b.body["units"] = {{"order", u.order}, {"square_classes", u.square_class_count}, {"description", u.description}};
  b.check("|Pic/m| = |Pic[m]|", torsion, quotient, "finite abelian groups");
  b.check("Pic -> Pic/2 injective iff exp <= 2", g.structure.exponent <= 2,
          injects_into_mod_two_quotient(g.structure), "invariant factors");
  return b.finish();
}

json membership_json(const RingElement& h, const Ideal& l, int bound) {
  const auto m = ideal_membership(h, l, bound);
  json j = {{"element", h.to_string()}, {"verdict", to_string(m.verdict)}};
  if (m.verdict == Verdict::Yes) j["cofactors"] = vector_json(m.cofactors);
  return j;
}

Report cmd_ideal(const CurveInput& in, const std::string& ideal_text, int power, const std::string& equal,
                 const RunConfig& cfg) {
  if (power < 1) throw ParseError("--power must be >= 1");
  const auto c = resolve_curve(in);
  const CoordRing ring(c);
  const auto l = parse_ideal(ring, ideal_text);
  const auto lp = ideal_power(l, power);
  Builder b("ideal");
  b.body["curve"] = curve_json(c);
  b.body["ideal"] = l.to_string();
  b.body["power"] = power;
  b.body["ideal_power"] = lp.to_string();
  const auto pr = is_principal(lp, cfg.degree_bound);
  json cls = {{"determined", pr.ideal_class.determined}};
  if (pr.ideal_class.determined) cls["point"] = pr.ideal_class.point.to_string();
  json support = json::array();
  for (const auto& [p, v] : pr.ideal_class.divisor) support.push_back({{"point", p.to_string()}, {"order", v}});
  cls["divisor"] = support;
  b.body["class"] = cls;
  b.body["principal"] = {{"verdict", to_string(pr.verdict)},
                         {"generator", pr.generator ? json(pr.generator->to_string()) : json(nullptr)},
                         {"route", pr.route},
                         {"note", pr.note}};
  if (pr.generator) {
    json w = json::array();
    for (const auto& h : lp.generators()) w.push_back(membership_json(h, Ideal({*pr.generator}), cfg.degree_bound));
    w.push_back(membership_json(*pr.generator, lp, cfg.degree_bound));
    b.body["principal"]["containment"] = w;
    for (const auto& e : w) b.check("containment " + e["element"].get<std::string>(), "Yes", e["verdict"], "bounded membership");
  }
  if (!equal.empty()) {
    const auto j = parse_ideal(ring, equal);
    const auto eq = ideal_equal(lp, j, cfg.degree_bound);
    json wl = json::array(), wr = json::array();
    for (const auto& h : j.generators()) wl.push_back(membership_json(h, lp, cfg.degree_bound));
    for (const auto& h : lp.generators()) wr.push_back(membership_json(h, j, cfg.degree_bound));
    b.body["equality"] = {{"other", j.to_string()},
                          {"verdict", to_string(eq.verdict)},
                          {"note", eq.note},
                          {"other_in_power", wl},
                          {"power_in_other", wr}};
    b.check("ideal equality", "Yes", to_string(eq.verdict), "two-sided containment");
  }
  return b.finish();
}

Report cmd_form(const CurveInput& in, const std::string& form_text, const std::string& other_text,
                const std::string& rep_text, const RunConfig& cfg) {
  const auto c = resolve_curve(in);
  const CoordRing ring(c);
  const auto f = parse_form(ring, form_text);
  Builder b("form");
  b.body["curve"] = curve_json(c);
  b.body["gram"] = matrix_json(f.gram());
  b.body["rank"] = f.rank();
  b.body["det"] = f.det().to_string();
  b.body["regular"] = f.regular();
  if (f.regular()) {
    const auto d = discriminant(f);
    b.body["discriminant"] = {{"det", d.det.to_string()}, {"square_class", d.square_class}, {"module", d.module}};
    const auto iso = is_isotropic(f, cfg.budget);
    b.body["isotropy"] = {{"verdict", to_string(iso.verdict)},
                          {"fiber", to_string(iso.fiber)},
                          {"generic", to_string(iso.generic)},
                          {"witness", iso.witness ? vector_json(*iso.witness) : json(nullptr)},
                          {"searched", iso.searched},
                          {"note", iso.note}};
    if (iso.witness) b.check("q(witness) = 0", "0", f.value(*iso.witness).to_string(), "evaluation");
  }
  std::optional<GroupRep> rep;
  if (!rep_text.empty()) {
    rep = parse_rep(c.field, rep_text, f.rank());
    b.body["rep"] = {{"name", rep->name}, {"order", rep->abstract_order}};
    b.body["gamma_form"] = is_gamma_form(f, *rep);
  }
  if (!other_text.empty()) {
    const auto g = parse_form(ring, other_text);
    const auto r = fiber_isometry(f, g, cfg.budget, cfg.workers);
    b.body["isometry"] = {{"other", matrix_json(g.gram())},
                          {"verdict", to_string(r.verdict)},
                          {"witness", r.witness ? matrix_json(*r.witness) : json(nullptr)},
                          {"searched", r.searched},
                          {"note", r.note}};
    if (r.witness) {
      const auto lhs = r.witness->transpose() * f.constant_gram() * *r.witness;
      b.check("A^T B1 A = B2", matrix_json(g.constant_gram()), matrix_json(lhs), "matrix product");
    }
    if (rep) {
      const auto gr = fiber_gamma_isometry(f, g, *rep, cfg.budget, cfg.workers);
      b.body["gamma_isometry"] = {{"verdict", to_string(gr.verdict)},
                                  {"witness", gr.witness ? matrix_json(*gr.witness) : json(nullptr)},
                                  {"count", gr.witnesses.size()},
                                  {"centralizer_dimension", gr.centralizer_dimension},
                                  {"note", gr.note}};
    }
  }
  return b.finish();
}

// Smallest prime or prime square q = 1 mod 4 with q^d <= budget.
std::optional<std::int64_t> smallest_fitting_field(std::size_t d, std::uint64_t budget) {
  for (std::int64_t q = 5; q < 1'000'000; ++q) {
    if (q % 4 != 1) continue;
    const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(double(q))));
    if (!is_prime(q) && !(r * r == q && is_prime(r))) continue;
    long double size = 1;
    for (std::size_t k = 0; k < d; ++k) size *= q;
    return size <= static_cast<long double>(budget) ? std::optional(q) : std::nullopt;
  }
  return std::nullopt;
}

Report cmd_fixed_group(const CurveInput& in, const std::string& form_text, const std::string& rep_text,
                       const RunConfig& cfg, std::ostream& err) {
  const auto c = resolve_curve(in);
  const CoordRing ring(c);
  const auto f = parse_form(ring, form_text);
  const auto rep = parse_rep(c.field, rep_text, f.rank());
  FixedGroupReport r;
  try {
    r = fixed_orthogonal_order(f, rep, cfg.budget, cfg.workers);
  } catch (const BudgetExceeded&) {
    const auto d = centralizer_basis(rep).dimension();
    const auto q = smallest_fitting_field(d, cfg.budget);
    err << "centralizer has dimension " << d << "; "
        << (q ? "the smallest field with -1 a square that fits the budget is q = " + std::to_string(*q)
              : std::string("no field with -1 a square fits the budget"))
        << '\n';
    throw;
  }
  Builder b("fixed-group");
  b.body["field"] = r.field;
  b.body["form"] = matrix_json(f.gram());
  b.body["rep"] = {{"name", rep.name}, {"order", rep.abstract_order}};
  b.body["dimension_d"] = r.dimension_d;
  b.body["enumerated"] = r.budget_used;
  b.body["full_order"] = r.full_order;
  b.body["det1_order"] = r.det1_order;
  b.body["abelian"] = r.abelian;
  b.body["license"] = "exhaustive enumeration of the centralizer";
  b.check("closed under product and inverse", true, r.closure_certified, "enumeration");
  b.check("commutes with the generated group", true, r.commutes_with_closure, "enumeration");
  const auto n = f.rank();
  if (n >= 3 && rep.name == "S" + std::to_string(n - 2) + "-block(" + std::to_string(n) + ")")
    b.flag("det-1 order vs G_m x {+-1} shape", gm_shape_det1_prediction(c.field), r.det1_order,
           "fiber count 2(q - 1)");
  return b.finish();
}

RingElement sample_element(const CoordRing& ring, std::mt19937_64& rng) {
  const auto& f = ring.field();
  std::uniform_int_distribution<std::int64_t> coeff(0, f.q() - 1);
  auto poly = [&] {
    std::vector<FieldElement> cs;
    for (int k = 0; k < 3; ++k) cs.push_back(FieldElement::from_index(f, coeff(rng)));
    return Polynomial(f, cs);
  };
  return ring.element(poly(), poly());
}

Report cmd_kummer(const CurveInput& in, const std::string& ideal_text, int m, const std::string& generator,
                  const std::string& pair_text, int samples, const RunConfig& cfg) {
  const auto c = resolve_curve(in);
  const CoordRing ring(c);
  PairSpec spec{parse_ideal(ring, ideal_text), m, std::nullopt};
  if (!pair_text.empty()) spec = parse_pair(ring, pair_text);
  else if (!generator.empty()) spec.generator = parse_element(ring, generator);
  const auto pair = spec.generator ? make_kummer_pair(spec.ideal, spec.m, *spec.generator, cfg.degree_bound)
                                   : make_kummer_pair(spec.ideal, spec.m, cfg.degree_bound);
  Builder b("kummer");
  b.body["curve"] = curve_json(c);
  b.body["pair"] = {{"ideal", pair.l.to_string()},
                    {"m", pair.m},
                    {"g", pair.g.to_string()},
                    {"ideal_power", pair.power.to_string()},
                    {"leading_coefficient_square", pair.leading_square}};
  if (pair.m == 2) {
    const auto t = torsor_trivial_over_ring(pair, cfg.degree_bound);
    b.body["torsor"] = {{"verdict", to_string(t.verdict)},
                        {"ideal_principal", to_string(t.principal)},
                        {"sqrt_g", t.root ? json(t.root->to_string()) : json(nullptr)},
                        {"splitting", t.splitting},
                        {"note", t.note}};
    const TorsorAlgebra alg(pair);
    std::mt19937_64 rng(cfg.seed);
    auto sample = [&] {
      RingElement l = ring.zero();
      for (const auto& h : pair.l.generators()) l = l + sample_element(ring, rng) * h;
      return AlgebraElement{sample_element(ring, rng), l};
    };
    std::uint64_t comm = 0, assoc = 0, unit = 0;
    for (int k = 0; k < samples; ++k) {
      const auto u = sample(), v = sample(), w = sample();
      comm += alg.multiply(u, v) == alg.multiply(v, u);
      assoc += alg.multiply(alg.multiply(u, v), w) == alg.multiply(u, alg.multiply(v, w));
      unit += alg.multiply(alg.one(), u) == u;
    }
    b.body["algebra_samples"] = samples;
    b.check("commutative on samples", samples, comm, "seeded sampling");
    b.check("associative on samples", samples, assoc, "seeded sampling");
    b.check("unit on samples", samples, unit, "seeded sampling");
  }
  return b.finish();
}

Report cmd_genus(const CurveInput& in, const std::string& form_text, const RunConfig& cfg) {
  const auto c = resolve_curve(in);
  const CoordRing ring(c);
  const auto f = parse_form(ring, form_text);
  const auto g = group_structure(c, cfg.budget, cfg.workers);
  Builder b("genus");
  b.body["curve"] = curve_json(c);
  b.body["form"] = matrix_json(f.gram());
  b.body["pic"] = structure_json(g.structure);
  const auto gs = genus_size(ring, f, cfg.budget, cfg.workers);
  b.body["genus"] = {{"size", gs.size}, {"proper_equals_genus", gs.proper_equals_genus}, {"license", gs.license}};
  const auto pg = proper_gamma_genus_size_gm(ring, cfg.budget, cfg.workers);
  b.body["proper_gamma_genus_gm"] = {{"size", pg.size}, {"license", pg.license}};
  const auto mu = mu_m_h1_size(ring, 2, cfg.budget, cfg.workers);
  b.body["mu2_h1"] = {{"units_part", mu.units_part},
                      {"torsion_part", mu.torsion_part},
                      {"total", mu.total},
                      {"license", mu.license}};
  const auto k = kernel_to_K_mu2(ring, cfg.degree_bound, cfg.budget, cfg.workers);
  json ws = json::array();
  for (const auto& w : k.witnesses)
    ws.push_back({{"class", w.label}, {"image", w.element.to_string()}, {"square", to_string(w.square)}});
  b.body["kernel_to_K"] = {{"size", k.size}, {"complete", k.complete}, {"license", k.license}};
  b.body["kernel_witnesses"] = ws;
  b.check("|c(q)| = |Pic/2|", quotient_by_multiples(g, 2), gs.size, gs.license);
  b.check("kernel to K", 1, k.size, k.license);
  b.check("witness count", mu.total - 1, k.witnesses.size(), "one per nontrivial class");
  return b.finish();
}

Report cmd_certify(const CurveInput& in, const std::string& form_text, const std::string& rep_text,
                   const std::string& evidence, const RunConfig& cfg) {
  const auto c = resolve_curve(in);
  const CoordRing ring(c);
  const auto f = parse_form(ring, form_text);
  const auto rep = parse_rep(c.field, rep_text, f.rank());
  const auto ev = evidence == "assume" ? ShapeEvidence::Assume : ShapeEvidence::Fiber;
  const auto cert = certify_non_injection(ring, f, rep, ev, cfg.budget, cfg.workers);
  Builder b("certify");
  b.body["curve"] = curve_json(c);
  b.body["form"] = matrix_json(f.gram());
  b.body["rep"] = {{"name", rep.name}, {"order", rep.abstract_order}};
  b.body["evidence"] = evidence;
  json items = json::array();
  for (const auto& i : cert.items) items.push_back({{"hypothesis", i.name}, {"status", to_string(i.status)}, {"detail", i.detail}});
  b.body["hypotheses"] = items;
  b.body["failing"] = cert.failing;
  b.body["pic"] = structure_json(cert.pic);
  b.body["c_gamma_plus"] = {{"size", cert.pic_order}, {"license", "c+_Gamma(q) = Pic(O)"}};
  b.body["c"] = {{"size", cert.pic_mod_two}, {"license", "c(q) = Pic(O)/2"}};
  b.body["bridge"] = cert.bridge;
  b.body["verdict"] = cert.verdict();
  b.check("no injection Pic -> Pic/2 when exp > 2", cert.pic.exponent <= 2, injects_into_mod_two_quotient(cert.pic),
          "invariant factors");
  b.check("verdict consistent with failing hypotheses", cert.failing.empty(), cert.non_injective, "checklist");
  return b.finish();
}

std::vector<FieldSpec> fields_up_to(std::int64_t max_q) {
  std::vector<FieldSpec> out;
  for (std::int64_t p = 3; p <= max_q; ++p) {
    if (!is_prime(p)) continue;
    out.push_back(make_field(p, 1));
    if (p * p <= max_q) out.push_back(make_field(p, 2));
  }
  std::sort(out.begin(), out.end(), [](const FieldSpec& a, const FieldSpec& b) { return a.q() < b.q(); });
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_coefficients(const std::string& s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (s.empty()) return out;
  static const std::regex pair(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::smatch m;
    if (!std::regex_match(item, m, pair)) throw ParseError("coefficients must look like \"a,b;a,b\", got \"" + item + "\"");
    out.emplace_back(std::stoll(m[1]), std::stoll(m[2]));
  }
  return out;
}

Report cmd_scan(const std::vector<std::string>& field_specs, std::int64_t max_q, const std::string& coeffs,
                const RunConfig& cfg) {
  std::vector<FieldSpec> fields;
  for (const auto& s : field_specs) fields.push_back(parse_field(s));
  if (max_q > 0) {
    const auto more = fields_up_to(max_q);
    fields.insert(fields.end(), more.begin(), more.end());
  }
  const auto rows = scan(fields, parse_coefficients(coeffs), cfg.budget, cfg.workers);
  Builder b("scan");
  b.body["fields"] = json::array();
  for (const auto& f : fields) b.body["fields"].push_back(f.name());
  b.body["count"] = rows.size();
  b.body["license"] = "Pic(O) = C(F_q); eligible means -1 square and exp(Pic) > 2";
  json out = json::array();
  std::uint64_t hw = 0;
  for (const auto& r : rows) {
    out.push_back({{"q", r.q},
                   {"a", r.a},
                   {"b", r.b},
                   {"pic_order", r.pic_order},
                   {"affine", r.affine_count},
                   {"structure", r.structure},
                   {"exponent", r.exponent},
                   {"minus_one_square", r.minus_one_square},
                   {"eligible", r.eligible},
                   {"hasse_weil", r.hasse_weil}});
    hw += r.hasse_weil;
  }
  b.body["rows"] = out;
  b.check("Hasse-Weil on every row", rows.size(), hw, "Hasse-Weil");
  return b.finish();
}

}  // namespace

// ---------------------------------------------------------------- examples

Report example_replay_report(const RunConfig& cfg) {
  Builder b("paper-check");
  const auto f11 = make_field(11, 1);
  const auto c11 = make_curve(f11, 1, 0);
  const CoordRing ring(c11);
  const auto x = ring.x(), y = ring.y();
  b.body["curve"] = c11.to_string();

  // Point counts and Pic over F_11 and F_121.
  const auto g11 = group_structure(c11, cfg.budget, cfg.workers);
  b.check("affine points over GF(11)", 11, g11.affine_count(), "enumeration");
  b.check("projective points over GF(11)", 12, g11.total_count(), "enumeration");
  b.check("|Pic(O)| < 19", true, g11.total_count() < 19, "Hasse-Weil");
  b.flag("|Pic(O)| equals the affine count", g11.affine_count(), g11.structure.order, "Pic(O) = C(F_q), projective");
  const auto c121 = base_change(c11, make_field(11, 2));
  const auto g121 = group_structure(c121, cfg.budget, cfg.workers);
  b.check("projective points over GF(11^2)", 144, g121.total_count(), "enumeration");
  b.check("|Pic(O(i))| > 100", true, g121.total_count() > 100, "Hasse-Weil");

  b.check("Pic(O) structure", "Z/12", g11.structure.to_string(), "Pic(O) = C(F_q)");
  b.check("exp Pic(O)", 12, g11.structure.exponent, "invariant factors");
  b.check("|Pic[2]|", 2, m_torsion_count(g11.structure, 2), "invariant factors");
  const auto i3 = GramForm::from_constants(ring, identity_matrix(f11, 3));
  const auto gs = genus_size(ring, i3, cfg.budget, cfg.workers);
  b.check("|c(1_3)|", 2, gs.size, gs.license);

  // Ideals.
  const Ideal l({x, y});
  b.check("<x, y>^2 = <x>", "Yes", to_string(ideal_equal(ideal_power(l, 2), Ideal({x}), cfg.degree_bound).verdict),
          "two-sided containment");
  b.check("<x, y> principal", "No", to_string(is_principal(l, cfg.degree_bound).verdict), "point correspondence");
  {
    std::set<std::int64_t> values;
    for (const auto& u : field_elements(f11))
      for (const auto& v : field_elements(f11)) values.insert((u * u + v * v).index());
    values.erase(0);
    b.check("x^2 + y^2 hits every unit of GF(11)", 10, values.size(), "enumeration");
  }

  // The S_3 example.
  const auto s3 = s3_rank2_f11();
  const auto& tau = s3.generators[0];
  const auto& sigma = s3.generators[1];
  const auto id2 = identity_matrix(f11, 2);
  b.check("|<sigma, tau>|", 6, generated_group_order(s3, cfg.budget), "closure");
  b.check("sigma^3 = I", true, sigma * sigma * sigma == id2, "matrix product");
  b.check("tau sigma tau = sigma^-1", true, tau * sigma * tau == *inverse(sigma), "matrix product");
  const auto i2 = GramForm::from_constants(ring, id2);
  b.check("1_2 is a Gamma-form", true, is_gamma_form(i2, s3), "invariance");
  const auto fg = fixed_orthogonal_order(i2, s3, cfg.budget, cfg.workers);
  b.check("|O^Gamma(F_11)|", 2, fg.full_order, "enumeration");
  b.check("|SO^Gamma(F_11)|", 2, fg.det1_order, "enumeration");

  // H^1 with mu_2 coefficients.
  const auto k = kernel_to_K_mu2(ring, cfg.degree_bound, cfg.budget, cfg.workers);
  b.check("ker to K", 1, k.size, k.license);
  b.check("non-square witnesses", 3, k.witnesses.size(), k.license);
  const auto mu = mu_m_h1_size(ring, 2, cfg.budget, cfg.workers);
  b.check("H^1(O, mu_2) units part", 2, mu.units_part, mu.license);
  b.check("H^1(O, mu_2) torsion part", 2, mu.torsion_part, mu.license);
  b.check("H^1(O, mu_2)", 4, mu.total, mu.license);

  // Norm torus over F_121.
  const auto nt = norm_torus_genus(c11, cfg.workers);
  b.check("trace kernel nontrivial", true, nt.kernel_size >= 2, nt.license);
  b.check("trace kernel size", 12, nt.kernel_size, nt.license);
  b.check("kernel x image", 144, nt.kernel_size * nt.image_size, nt.license);

  // Certificates.
  const auto cert11 = certify_non_injection(ring, i3, symmetric_block_rep(f11, 3, 3), ShapeEvidence::Fiber,
                                            cfg.budget, cfg.workers);
  b.check("certify GF(11)", "INCONCLUSIVE", cert11.verdict(), "-1 not a square");
  b.check("GF(11) fails on -1", true,
          std::find(cert11.failing.begin(), cert11.failing.end(), "-1 square in F_q") != cert11.failing.end(),
          "checklist");
  const auto f5 = make_field(5, 1);
  const CoordRing ring5(make_curve(f5, 1, 0));
  const auto i4_5 = GramForm::from_constants(ring5, identity_matrix(f5, 4));
  const auto rep5 = symmetric_block_rep(f5, 4, 2);
  const auto cert5 = certify_non_injection(ring5, i4_5, rep5, ShapeEvidence::Assume, cfg.budget, cfg.workers);
  b.check("certify GF(5)", "INCONCLUSIVE", cert5.verdict(), "exp(Pic) = 2");
  b.check("GF(5) failing hypotheses", json::array({"exp(Pic) > 2"}), cert5.failing, "checklist");
  const auto fg5 = fixed_orthogonal_order(i4_5, rep5, cfg.budget, cfg.workers);
  b.flag("GF(5) det-1 fixed order vs G_m x {+-1}", gm_shape_det1_prediction(f5), fg5.det1_order,
         "fiber count 2(q - 1)");

  const auto f13 = make_field(13, 1);
  const auto rows = scan({f13}, {}, cfg.budget, cfg.workers);
  const auto row = std::find_if(rows.begin(), rows.end(), [](const ScanRow& r) { return r.eligible; });
  if (row == rows.end()) {
    b.check("eligible curve over GF(13)", true, false, "scan");
  } else {
    const CoordRing ring13(make_curve(f13, row->a, row->b));
    const auto cert13 = certify_non_injection(ring13, GramForm::from_constants(ring13, identity_matrix(f13, 4)),
                                              symmetric_block_rep(f13, 4, 2), ShapeEvidence::Fiber, cfg.budget,
                                              cfg.workers);
    b.body["gf13_curve"] = row->curve;
    b.check("certify GF(13)", "NON_INJECTIVE", cert13.verdict(), cert13.bridge);
    b.check("Pic(GF(13) curve) does not inject into Pic/2", false, injects_into_mod_two_quotient(cert13.pic),
            "invariant factors");
  }
  return b.finish();
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") return render_csv(report);
  return render_table(report);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus computations for quadratic spaces over affine elliptic curves", "genus_lab"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  double budget = 1e7;
  app.add_option("--degree-bound", cfg.degree_bound, "degree bound for membership searches")
      ->check(CLI::Range(1, 64));
  app.add_option("--budget", budget, "enumeration budget")->check(CLI::Range(1.0, 1e15));
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  std::string field_spec;
  auto* field_cmd = app.add_subcommand("field", "field facts");
  field_cmd->add_option("field", field_spec, "GF(p) or GF(p^2)")->required();

  CurveInput curve_in;
  bool want_structure = false, want_points = false;
  auto* curve_cmd = app.add_subcommand("curve", "point counts and group structure");
  add_curve_options(curve_cmd, curve_in);
  curve_cmd->add_flag("--structure", want_structure, "invariant factors");
  curve_cmd->add_flag("--points", want_points, "list the points");

  std::int64_t torsion = 2;
  auto* pic_cmd = app.add_subcommand("pic", "Picard group of the coordinate ring");
  add_curve_options(pic_cmd, curve_in);
  pic_cmd->add_option("--torsion", torsion, "m for Pic[m] and Pic/m");

  std::string ideal_text = "<x, y>", equal_text;
  int power = 1;
  auto* ideal_cmd = app.add_subcommand("ideal", "ideal powers, classes and principality");
  add_curve_options(ideal_cmd, curve_in);
  ideal_cmd->add_option("--ideal", ideal_text, "<g1, g2, ...>");
  ideal_cmd->add_option("--power", power, "exponent k of L^k");
  ideal_cmd->add_option("--equal", equal_text, "compare L^k with this ideal");

  std::string form_text = "I3", other_text, rep_text;
  auto* form_cmd = app.add_subcommand("form", "quadratic form invariants and fiber isometry");
  add_curve_options(form_cmd, curve_in);
  form_cmd->add_option("--form", form_text, "I<n>, diag(...) or JSON Gram matrix");
  form_cmd->add_option("--other", other_text, "second form for the isometry test");
  form_cmd->add_option("--rep", rep_text, "Gamma representation");

  auto* fixed_cmd = app.add_subcommand("fixed-group", "Gamma-fixed orthogonal group at the fiber");
  add_curve_options(fixed_cmd, curve_in);
  fixed_cmd->add_option("--form", form_text, "constant Gram matrix");
  fixed_cmd->add_option("--rep", rep_text, "Gamma representation")->required();

  std::string generator, pair_text;
  int m = 2, samples = 200;
  auto* kummer_cmd = app.add_subcommand("kummer", "Kummer pairs and mu_2-torsors");
  add_curve_options(kummer_cmd, curve_in);
  kummer_cmd->add_option("--ideal", ideal_text, "L");
  kummer_cmd->add_option("--m", m, "exponent");
  kummer_cmd->add_option("--generator", generator, "g with L^m = <g>");
  kummer_cmd->add_option("--pair", pair_text, R"(JSON {"ideal", "m", "generator"})");
  kummer_cmd->add_option("--samples", samples, "sampled algebra identities")->check(CLI::Range(0, 100000));

  auto* genus_cmd = app.add_subcommand("genus", "genus sizes and H^1 counts");
  add_curve_options(genus_cmd, curve_in);
  genus_cmd->add_option("--form", form_text, "form of rank >= 3");

  std::string evidence = "fiber";
  auto* certify_cmd = app.add_subcommand("certify", "non-injection checklist");
  add_curve_options(certify_cmd, curve_in);
  certify_cmd->add_option("--form", form_text, "Gram matrix");
  certify_cmd->add_option("--rep", rep_text, "Gamma representation")->required();
  certify_cmd->add_option("--evidence", evidence, "fiber or assume")->check(CLI::IsMember({"fiber", "assume"}));

  std::vector<std::string> scan_fields;
  std::int64_t max_q = 0;
  std::string coefficients;
  auto* scan_cmd = app.add_subcommand("scan", "sweep curves over several fields");
  scan_cmd->add_option("--fields", scan_fields, "fields to scan")->delimiter(';');
  scan_cmd->add_option("--max-q", max_q, "all odd primes and prime squares up to this bound");
  scan_cmd->add_option("--coefficients", coefficients, "\"a,b;a,b\" (default: every pair)");

  auto* check_cmd = app.add_subcommand("paper-check", "replay the worked examples");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  cfg.budget = static_cast<std::uint64_t>(budget);
  if (scan_cmd->parsed() && scan_fields.empty() && max_q == 0) {
    err << "error: scan needs --fields or --max-q\n";
    return kBadInput;
  }

  try {
    Report r;
    if (field_cmd->parsed()) r = cmd_field(field_spec);
    else if (curve_cmd->parsed()) r = cmd_curve(curve_in, want_structure, want_points, cfg);
    else if (pic_cmd->parsed()) r = cmd_pic(curve_in, torsion, cfg);
    else if (ideal_cmd->parsed()) r = cmd_ideal(curve_in, ideal_text, power, equal_text, cfg);
    else if (form_cmd->parsed()) r = cmd_form(curve_in, form_text, other_text, rep_text, cfg);
    else if (fixed_cmd->parsed()) r = cmd_fixed_group(curve_in, form_text, rep_text, cfg, err);
    else if (kummer_cmd->parsed()) r = cmd_kummer(curve_in, ideal_text, m, generator, pair_text, samples, cfg);
    else if (genus_cmd->parsed()) r = cmd_genus(curve_in, form_text, cfg);
    else if (certify_cmd->parsed()) r = cmd_certify(curve_in, form_text, rep_text, evidence, cfg);
    else if (scan_cmd->parsed()) r = cmd_scan(scan_fields, max_q, coefficients, cfg);
    else if (check_cmd->parsed()) r = example_replay_report(cfg);
    out << render(r, cfg.format);
    const bool failed = r.contains("summary") && r["summary"]["fail"].get<std::size_t>() > 0;
    return failed ? kCheckFailed : kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
}

}  // namespace genuslab
