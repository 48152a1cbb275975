#pragma once

// Text formats accepted by the command line. All parsers throw ParseError on
// malformed input; mathematical problems (singular curve, ...) surface as
// DomainError from the constructors they call.

#include <string>

#include "genuslab/kummer.hpp"
#include "genuslab/quad_form.hpp"

namespace genuslab {

/// "GF(11)", "GF(11^2)".
FieldSpec parse_field(const std::string& s);

/// "y^2 = x^3 + a*x + b over GF(q)", or just the right-hand side together
/// with a field.
CurveData parse_curve(const std::string& s);
CurveData parse_curve(const std::string& s, const FieldSpec& field);

/// Integers, x, y, the extension generator (i or w), + - * ^ and parentheses.
/// A number directly followed by a variable multiplies ("3x").
RingElement parse_element(const CoordRing& ring, const std::string& s);
FieldElement parse_field_element(const FieldSpec& field, const std::string& s);
/// Polynomial in x only.
Polynomial parse_polynomial(const FieldSpec& field, const std::string& s);

/// "<x, y>"
Ideal parse_ideal(const CoordRing& ring, const std::string& s);

/// "I3", "diag(1, 2, x)" or a JSON matrix of element strings / integers.
GramForm parse_form(const CoordRing& ring, const std::string& s);

/// "trivial", "S3-rank2-F11", "S3-rank2", "S<k>-block(<n>)", "Sn-2-block",
/// "S3", "perm", or JSON {"name", "order", "generators": [[[...]]]}.
/// `dim` resolves the presets that depend on the form rank.
GroupRep parse_rep(const FieldSpec& field, const std::string& s, std::size_t dim);

struct PairSpec {
  Ideal ideal;
  int m = 2;
  std::optional<RingElement> generator;
};

/// {"ideal": "<x,y>", "m": 2, "generator": "x"}; generator is optional.
PairSpec parse_pair(const CoordRing& ring, const std::string& s);

}  // namespace genuslab
