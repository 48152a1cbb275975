#include "genuslab/parse.hpp"

#include <cctype>
#include <functional>
#include <algorithm>
#include <regex>

#include "json.hpp"

#include "genuslab/error.hpp"

namespace genuslab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T>
class ExprParser {
 public:
  using Number = std::function<T(std::int64_t)>;
  using Variable = std::function<T(char)>;

  ExprParser(std::string text, Number number, Variable variable)
      : s_(std::move(text)), number_(std::move(number)), variable_(std::move(variable)) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse \"" + s_ + "\" at position " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(');
  }

  T expr() {
    T acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  T power() {
    if (peek('-')) {
      ++pos_;
      return -power();
    }
    if (peek('+')) {
      ++pos_;
      return power();
    }
    T base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      const auto e = digits();
      T r = number_(1);
      for (std::int64_t k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  std::int64_t digits() {
    skip();
    const auto start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100'000'000'000'000LL) fail("number too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  T primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number_(digits());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("unknown name");
      return variable_(c);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  Number number_;
  Variable variable_;
};

FieldElement generator_of(const FieldSpec& f, char c) {
  if (f.degree != 2) throw ParseError(std::string("'") + c + "' needs a quadratic extension field");
  if (c == 'i' && !f.generator_is_i()) throw ParseError("'i' is not available in " + f.name() + "; use 'w'");
  return FieldElement(f, 0, 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

RingElement json_element(const CoordRing& ring, const nlohmann::json& v) {
  if (v.is_number_integer()) return ring.constant(v.get<std::int64_t>());
  if (v.is_string()) return parse_element(ring, v.get<std::string>());
  throw ParseError("matrix entries must be integers or element strings");
}

FieldElement json_field_element(const FieldSpec& f, const nlohmann::json& v) {
  if (v.is_number_integer()) return FieldElement(f, v.get<std::int64_t>());
  if (v.is_string()) return parse_field_element(f, v.get<std::string>());
  throw ParseError("matrix entries must be integers or element strings");
}

nlohmann::json parse_json(const std::string& s) {
  try {
    return nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

FieldSpec parse_field(const std::string& text) {
  static const std::regex re(R"(\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("field must look like GF(p) or GF(p^2), got \"" + text + "\"");
  if (m[1].length() > 9) throw ParseError("characteristic too large");
  const auto p = std::stoll(m[1]);
  const int degree = m[2].matched ? std::stoi(m[2]) : 1;
  if (degree != 1 && degree != 2) throw ParseError("only GF(p) and GF(p^2) are supported");
  try {
    return make_field(p, degree);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

FieldElement parse_field_element(const FieldSpec& field, const std::string& s) {
  ExprParser<FieldElement> p(
      s, [&](std::int64_t n) { return FieldElement(field, n); },
      [&](char c) -> FieldElement {
        if (c == 'i' || c == 'w') return generator_of(field, c);
        throw ParseError(std::string("unexpected variable '") + c + "' in a field element");
      });
  return p.parse();
}

Polynomial parse_polynomial(const FieldSpec& field, const std::string& s) {
  ExprParser<Polynomial> p(
      s, [&](std::int64_t n) { return Polynomial::constant(FieldElement(field, n)); },
      [&](char c) -> Polynomial {
        if (c == 'x') return Polynomial::monomial(FieldElement::one(field), 1);
        if (c == 'i' || c == 'w') return Polynomial::constant(generator_of(field, c));
        throw ParseError(std::string("unexpected variable '") + c + "' in a polynomial in x");
      });
  return p.parse();
}

CurveData parse_curve(const std::string& s, const FieldSpec& field) {
  std::string rhs = s;
  const auto eq = s.find('=');
  if (eq != std::string::npos) {
    std::string lhs = s.substr(0, eq);
    lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](unsigned char c) { return std::isspace(c); }), lhs.end());
    if (lhs != "y^2") throw ParseError("curve must be written y^2 = x^3 + a*x + b");
    rhs = s.substr(eq + 1);
  }
  const auto f = parse_polynomial(field, rhs);
  if (f.degree() != 3 || !f.coeff(3).is_one() || !f.coeff(2).is_zero())
    throw ParseError("right-hand side must be x^3 + a*x + b, got " + f.to_string("x"));
  return make_curve(field, f.coeff(1), f.coeff(0));
}

CurveData parse_curve(const std::string& s) {
  const auto over = s.find(" over ");
  if (over == std::string::npos) throw ParseError("curve needs \"over GF(q)\" or a separate --field");
  return parse_curve(s.substr(0, over), parse_field(s.substr(over + 6)));
}

RingElement parse_element(const CoordRing& ring, const std::string& s) {
  ExprParser<RingElement> p(
      s, [&](std::int64_t n) { return ring.constant(n); },
      [&](char c) -> RingElement {
        if (c == 'x') return ring.x();
        if (c == 'y') return ring.y();
        if (c == 'i' || c == 'w') return ring.constant(generator_of(ring.field(), c));
        throw ParseError(std::string("unknown variable '") + c + "'");
      });
  return p.parse();
}

Ideal parse_ideal(const CoordRing& ring, const std::string& text) {
  const auto s = trim(text);
  if (s.size() < 2 || s.front() != '<' || s.back() != '>') throw ParseError("ideal must look like <g1, g2, ...>");
  std::vector<RingElement> gens;
  for (const auto& part : split_top_level(s.substr(1, s.size() - 2), ',')) {
    if (part.empty()) throw ParseError("empty generator in " + s);
    gens.push_back(parse_element(ring, part));
  }
  try {
    return Ideal(gens);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

GramForm parse_form(const CoordRing& ring, const std::string& text) {
  const auto s = trim(text);
  static const std::regex identity(R"(I_?(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, identity)) {
    const auto n = std::stoul(m[1]);
    if (n < 1 || n > 16) throw ParseError("identity form rank out of range");
    return GramForm::from_constants(ring, identity_matrix(ring.field(), n));
  }
  if (s.rfind("diag(", 0) == 0 && s.back() == ')') {
    const auto parts = split_top_level(s.substr(5, s.size() - 6), ',');
    RingMatrix g(parts.size(), parts.size(), ring.zero());
    for (std::size_t k = 0; k < parts.size(); ++k) g(k, k) = parse_element(ring, parts[k]);
    return GramForm(ring, std::move(g));
  }
  if (!s.empty() && s.front() == '[') {
    const auto j = parse_json(s);
    if (!j.is_array() || j.empty()) throw ParseError("form matrix must be a non-empty array of rows");
    const std::size_t n = j.size();
    RingMatrix g(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) throw ParseError("form matrix must be square");
      for (std::size_t k = 0; k < n; ++k) g(i, k) = json_element(ring, j[i][k]);
    }
    return GramForm(ring, std::move(g));
  }
  throw ParseError("form must be In, diag(...) or a JSON matrix, got \"" + s + "\"");
}

GroupRep parse_rep(const FieldSpec& field, const std::string& text, std::size_t dim) {
  const auto s = trim(text);
  if (s == "trivial") return trivial_rep(field, dim);
  if (s == "S3-rank2-F11") {
    if (!(field == make_field(11, 1))) throw ParseError("S3-rank2-F11 is defined over GF(11) only");
    return s3_rank2_f11();
  }
  if (s == "S3-rank2") return s3_rank2(field);
  if (s == "perm") return symmetric_block_rep(field, dim, dim);
  if (s == "Sn-2-block") {
    if (dim < 2) throw ParseError("Sn-2-block needs rank >= 2");
    return symmetric_block_rep(field, dim, dim - 2);
  }
  if (s == "S3") {
    if (dim == 2) return field == make_field(11, 1) ? s3_rank2_f11() : s3_rank2(field);
    if (dim < 3) throw ParseError("S3 needs rank >= 2");
    return symmetric_block_rep(field, dim, 3);
  }
  static const std::regex block(R"(S(\d+)-block\((\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, block)) {
    const auto k = std::stoul(m[1]), n = std::stoul(m[2]);
    if (n != dim) throw ParseError("representation dimension " + std::to_string(n) + " does not match rank " +
                                   std::to_string(dim));
    if (k > 7) throw ParseError("block size too large");
    return symmetric_block_rep(field, n, k);
  }
  if (!s.empty() && s.front() == '{') {
    const auto j = parse_json(s);
    if (!j.contains("generators") || !j["generators"].is_array()) throw ParseError("rep JSON needs \"generators\"");
    std::vector<FieldMatrix> gens;
    for (const auto& g : j["generators"]) {
      if (!g.is_array() || g.size() != dim) throw ParseError("generator must be a " + std::to_string(dim) + "x" +
                                                             std::to_string(dim) + " matrix");
      FieldMatrix mat(dim, dim, FieldElement::zero(field));
      for (std::size_t r = 0; r < dim; ++r) {
        if (!g[r].is_array() || g[r].size() != dim) throw ParseError("generator rows must have length " + std::to_string(dim));
        for (std::size_t c = 0; c < dim; ++c) mat(r, c) = json_field_element(field, g[r][c]);
      }
      gens.push_back(std::move(mat));
    }
    const auto name = j.value("name", std::string("custom"));
    const auto order = j.value("order", std::uint64_t{0});
    try {
      auto rep = make_rep(name, order, field, dim, std::move(gens));
      if (order == 0) rep.abstract_order = generated_group(rep).order();
      return rep;
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown representation \"" + s + "\"");
}

PairSpec parse_pair(const CoordRing& ring, const std::string& s) {
  const auto j = parse_json(s);
  if (!j.is_object() || !j.contains("ideal") || !j["ideal"].is_string())
    throw ParseError("pair JSON needs an \"ideal\" string");
  PairSpec p{parse_ideal(ring, j["ideal"].get<std::string>()), 2, std::nullopt};
  if (j.contains("m")) {
    if (!j["m"].is_number_integer()) throw ParseError("\"m\" must be an integer");
    p.m = j["m"].get<int>();
    if (p.m < 1 || p.m > 12) throw ParseError("\"m\" out of range");
  }
  if (j.contains("generator")) p.generator = json_element(ring, j["generator"]);
  return p;
}

}  // namespace genuslab
