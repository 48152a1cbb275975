#include <gtest/gtest.h>

#include <sstream>

#include "genuslab/cli.hpp"
#include "genuslab/parse.hpp"

using namespace genuslab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json call_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = call(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return nlohmann::json::parse(r.out);
}

const CoordRing& ring11() {
  static const CoordRing ring(make_curve(make_field(11, 1), 1, 0));
  return ring;
}

}  // namespace

TEST(ParseField, AcceptsPrimeAndSquareFields) {
  EXPECT_EQ(parse_field("GF(11)").q(), 11);
  EXPECT_EQ(parse_field(" GF( 11^2 ) ").q(), 121);
  EXPECT_EQ(parse_field("GF(5^2)").degree, 2);
}

TEST(ParseField, RejectsEverythingElse) {
  for (const char* s : {"GF(12)", "GF(11^3)", "F11", "GF()", "GF(11", "GF(1)"})
    EXPECT_THROW(parse_field(s), ParseError) << s;
}

TEST(ParseCurve, FullAndShortSpellings) {
  const auto c = parse_curve("y^2 = x^3 + x over GF(11)");
  EXPECT_EQ(c, make_curve(make_field(11, 1), 1, 0));
  EXPECT_EQ(parse_curve("x^3+x", make_field(11, 1)), c);
  EXPECT_EQ(parse_curve("x^3 - 2x + 7", make_field(13, 1)), make_curve(make_field(13, 1), 11, 7));
  EXPECT_EQ(parse_curve("(x + 1)(x^2 - x + 1) + 3x", make_field(7, 1)), make_curve(make_field(7, 1), 3, 1));
}

TEST(ParseCurve, Errors) {
  EXPECT_THROW(parse_curve("x^3 + x"), ParseError);                           // no field
  EXPECT_THROW(parse_curve("x^3 + x^2 + 1", make_field(11, 1)), ParseError);  // x^2 term
  EXPECT_THROW(parse_curve("2x^3 + 1", make_field(11, 1)), ParseError);       // not monic
  EXPECT_THROW(parse_curve("y^3 = x^3 + 1", make_field(11, 1)), ParseError);
  EXPECT_THROW(parse_curve("x^3", make_field(11, 1)), DomainError);           // singular
}

TEST(ParseElement, Grammar) {
  const auto& ring = ring11();
  const auto x = ring.x(), y = ring.y();
  EXPECT_EQ(parse_element(ring, "3x + 2y^2"), x.scaled(FieldElement(ring.field(), 3)) + (y * y).scaled(FieldElement(ring.field(), 2)));
  EXPECT_EQ(parse_element(ring, "-x^2"), -(x * x));
  EXPECT_EQ(parse_element(ring, "(x - 1)*(x + 1)"), x * x - ring.one());
  EXPECT_EQ(parse_element(ring, "x y"), x * y);
  EXPECT_EQ(parse_element(ring, "y^2"), x * x * x + x);
  EXPECT_EQ(parse_element(ring, "12"), ring.one());
  for (const char* bad : {"", "x +", "(x", "z", "x^", "xy", "3 $", "i"}) EXPECT_THROW(parse_element(ring, bad), ParseError) << bad;
}

TEST(ParseElement, ExtensionGenerator) {
  const auto f = make_field(11, 2);
  EXPECT_EQ(parse_field_element(f, "2 + 3i"), FieldElement(f, 2, 3));
  EXPECT_EQ(parse_field_element(f, "i^2"), FieldElement(f, -1));
  const auto f5 = make_field(5, 2);  // generator is not a square root of -1
  EXPECT_THROW(parse_field_element(f5, "i"), ParseError);
  EXPECT_EQ(parse_field_element(f5, "w"), FieldElement(f5, 0, 1));
}

TEST(ParseIdeal, Generators) {
  const auto& ring = ring11();
  EXPECT_EQ(parse_ideal(ring, "<x, y>"), Ideal({ring.x(), ring.y()}));
  EXPECT_EQ(parse_ideal(ring, "< (x+1)*(x-1) >"), Ideal({ring.x() * ring.x() - ring.one()}));
  EXPECT_THROW(parse_ideal(ring, "x, y"), ParseError);
  EXPECT_THROW(parse_ideal(ring, "<x,>"), ParseError);
  EXPECT_THROW(parse_ideal(ring, "<0>"), ParseError);
}

TEST(ParseForm, Spellings) {
  const auto& ring = ring11();
  const auto i3 = parse_form(ring, "I3");
  EXPECT_EQ(i3.rank(), 3u);
  EXPECT_TRUE(i3.is_constant());
  EXPECT_EQ(parse_form(ring, "diag(1, 1, 1)").gram(), i3.gram());
  EXPECT_EQ(parse_form(ring, "[[1,0,0],[0,1,0],[0,0,1]]").gram(), i3.gram());
  const auto nc = parse_form(ring, R"([["x", 1], [1, "2"]])");
  EXPECT_FALSE(nc.is_constant());
  EXPECT_THROW(parse_form(ring, "[[1,2],[3,4]]"), DomainError);  // not symmetric
  EXPECT_THROW(parse_form(ring, "[[1,2],[2]]"), ParseError);
  EXPECT_THROW(parse_form(ring, "[[1,2"), ParseError);
  EXPECT_THROW(parse_form(ring, "J3"), ParseError);
}

TEST(ParseRep, PresetsAndJson) {
  const auto f11 = make_field(11, 1);
  EXPECT_EQ(parse_rep(f11, "S3-rank2-F11", 2).abstract_order, 6u);
  EXPECT_EQ(parse_rep(f11, "S3", 2).generators, s3_rank2_f11().generators);
  EXPECT_EQ(parse_rep(f11, "S3", 3).name, "S3-block(3)");
  EXPECT_EQ(parse_rep(f11, "Sn-2-block", 4).name, "S2-block(4)");
  EXPECT_EQ(parse_rep(f11, "trivial", 3).dim, 3u);
  EXPECT_EQ(parse_rep(f11, "perm", 3).abstract_order, 6u);
  const auto j = parse_rep(f11, R"({"name": "swap", "generators": [[[0,1],[1,0]]]})", 2);
  EXPECT_EQ(j.abstract_order, 2u);
  EXPECT_THROW(parse_rep(f11, "S2-block(4)", 3), ParseError);
  EXPECT_THROW(parse_rep(make_field(13, 1), "S3-rank2-F11", 2), ParseError);
  EXPECT_THROW(parse_rep(f11, R"({"generators": [[[0,0],[0,0]]]})", 2), ParseError);  // singular
  EXPECT_THROW(parse_rep(f11, "S4", 3), ParseError);
}

TEST(ParsePair, Json) {
  const auto& ring = ring11();
  const auto p = parse_pair(ring, R"({"ideal": "<x, y>", "m": 2, "generator": "x"})");
  EXPECT_EQ(p.m, 2);
  ASSERT_TRUE(p.generator);
  EXPECT_EQ(*p.generator, ring.x());
  EXPECT_FALSE(parse_pair(ring, R"({"ideal": "<1>"})").generator);
  EXPECT_THROW(parse_pair(ring, R"({"m": 2})"), ParseError);
  EXPECT_THROW(parse_pair(ring, "nope"), ParseError);
}

TEST(Cli, CurveStructureExample) {
  const auto j = call_json({"curve", "y^2 = x^3 + x over GF(11)", "--structure"});
  EXPECT_EQ(j["schema"], "genus-lab/1");
  EXPECT_EQ(j["structure"]["order"], 12);
  EXPECT_EQ(j["structure"]["cyclic"], true);
  EXPECT_EQ(j["structure"]["exponent"], 12);
  EXPECT_EQ(j["affine_points"], 11);
  EXPECT_EQ(j["projective_points"], 12);
}

TEST(Cli, CertifyExample) {
  const auto j = call_json({"certify", "--field", "GF(11)", "--curve", "x^3+x", "--form", "I3", "--rep", "S3"});
  EXPECT_EQ(j["verdict"], "INCONCLUSIVE");
  const auto& failing = j["failing"];
  EXPECT_NE(std::find(failing.begin(), failing.end(), "-1 square in F_q"), failing.end());
}

TEST(Cli, NumericClaimsCarryLicenses) {
  const auto j = call_json({"genus", "y^2 = x^3 + x over GF(11)"});
  EXPECT_EQ(j["genus"]["size"], 2);
  EXPECT_FALSE(j["genus"]["license"].get<std::string>().empty());
  EXPECT_FALSE(j["mu2_h1"]["license"].get<std::string>().empty());
  EXPECT_FALSE(j["kernel_to_K"]["license"].get<std::string>().empty());
  for (const auto& c : j["checks"]) EXPECT_FALSE(c["license"].get<std::string>().empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"curve", "y^2 = x^3 + x over GF(12)"}).code, 2);
  EXPECT_EQ(call({"curve", "y^2 = x^3 over GF(11)"}).code, 2);
  EXPECT_EQ(call({"curve"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"curve", "x^3+x", "--field", "GF(11)", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
  // <x, y> and <y> differ at (0, 0): a requested check fails.
  EXPECT_EQ(call({"ideal", "x^3+x", "--field", "GF(11)", "--equal", "<y>"}).code, 1);
  EXPECT_EQ(call({"ideal", "x^3+x", "--field", "GF(11)", "--power", "2", "--equal", "<x>"}).code, 0);
  const auto budget = call({"fixed-group", "--field", "GF(13)", "--form", "I4", "--rep", "S2-block(4)"});
  EXPECT_EQ(budget.code, 3);
  EXPECT_NE(budget.err.find("q = 5"), std::string::npos);
  EXPECT_EQ(call({"fixed-group", "--field", "GF(11)", "--form", "I2", "--rep", "S3", "--budget", "1e3"}).code, 0);
}

TEST(Cli, FixedGroupFlagsShapeWithoutFailing) {
  const auto j = call_json({"fixed-group", "--field", "GF(5)", "--form", "I4", "--rep", "S2-block(4)"});
  EXPECT_EQ(j["full_order"], 480);
  EXPECT_EQ(j["det1_order"], 240);
  EXPECT_EQ(j["summary"]["flag"], 1);
  EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Cli, KummerAndForm) {
  const auto k = call_json({"kummer", "y^2 = x^3 + x over GF(11)", "--ideal", "<x, y>"});
  EXPECT_EQ(k["pair"]["g"], "x");
  EXPECT_EQ(k["torsor"]["verdict"], "nontrivial");
  const auto f = call_json({"form", "y^2 = x^3 + x over GF(11)", "--form", "diag(1,3,5)", "--other", "I3"});
  EXPECT_EQ(f["isometry"]["verdict"], "Yes");
  EXPECT_EQ(f["isotropy"]["verdict"], "Yes");
  EXPECT_EQ(f["summary"]["fail"], 0);
}

TEST(Cli, CsvRendering) {
  const auto r = call({"scan", "--fields", "GF(5);GF(13)", "--coefficients", "1,0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "q,a,b,pic_order,affine,structure,exponent,minus_one_square,eligible,hasse_weil");
  EXPECT_NE(r.out.find("13,1,0,20,19,Z/2 x Z/10,10,true,true,true"), std::string::npos);
}

TEST(Cli, ScanNeedsARange) {
  EXPECT_EQ(call({"scan"}).code, 2);
  const auto j = call_json({"scan", "--fields", "GF(7)", "--coefficients", "0,0"});
  EXPECT_EQ(j["count"], 0);  // singular only
}

TEST(Cli, ByteIdenticalAcrossWorkers) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"scan", "--max-q", "25"},
           {"fixed-group", "--field", "GF(5)", "--form", "I4", "--rep", "S2-block(4)"},
           {"form", "x^3+x", "--field", "GF(7)", "--form", "diag(2,2,2)", "--other", "I3", "--rep", "perm"}}) {
    std::string first;
    for (const char* w : {"1", "2", "8"}) {
      auto args = cmd;
      args.insert(args.end(), {"--workers", w, "--format", "json"});
      const auto r = call(args);
      ASSERT_EQ(r.code, 0) << r.err;
      if (first.empty()) first = r.out;
      EXPECT_EQ(r.out, first) << cmd[0] << " workers " << w;
    }
  }
}

TEST(Cli, ExampleReplayPasses) {
  const auto r = call({"paper-check", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_GE(j["summary"]["pass"], 30);
  for (const auto& c : j["checks"]) EXPECT_NE(c["status"], "FAIL") << c["check"];
}
