#pragma once

// Elliptic curves y^2 = x^3 + a x + b over F_q and their point groups.
// Pic of the affine coordinate ring (S = {infinity}) is identified with the
// group of rational points of the projective curve throughout.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "genuslab/abelian.hpp"
#include "genuslab/field.hpp"

namespace genuslab {

struct CurveData {
  FieldSpec field;
  FieldElement a;
  FieldElement b;

  /// x^3 + a x + b
  FieldElement rhs(const FieldElement& x) const { return x * x * x + a * x + b; }
  bool operator==(const CurveData&) const = default;
  /// "y^2 = x^3 + 1*x + 0 over GF(11)"
  std::string to_string() const;
};

/// Throws DomainError when 4a^3 + 27b^2 = 0.
CurveData make_curve(const FieldSpec& field, const FieldElement& a, const FieldElement& b);
CurveData make_curve(const FieldSpec& field, std::int64_t a, std::int64_t b);
bool is_smooth(const FieldSpec& field, const FieldElement& a, const FieldElement& b);

struct CurvePoint {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(const FieldElement& x, const FieldElement& y) { return {false, x, y}; }

  bool operator==(const CurvePoint& o) const {
    return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
  }
  /// Infinity first, then lexicographic on (x, y) element indices.
  bool operator<(const CurvePoint& o) const;
  std::string to_string() const;
};

bool on_curve(const CurveData& c, const CurvePoint& p);

/// Infinity followed by every affine solution, lexicographically sorted.
/// The x-range is split across `workers` threads; output does not depend on it.
std::vector<CurvePoint> enumerate_points(const CurveData& c, unsigned workers = 1);

/// Number of affine solutions only (no point list); used by wide scans.
std::uint64_t count_affine_points(const CurveData& c);

/// Chord-tangent addition with infinity as identity. Throws DomainError for
/// points off the curve.
CurvePoint add_points(const CurveData& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint negate_point(const CurvePoint& p);
CurvePoint multiply_point(const CurveData& c, std::int64_t k, const CurvePoint& p);

/// The point group with its enumeration and decomposition.
struct CurveGroup {
  CurveData curve;
  std::vector<CurvePoint> points;  // points[0] is infinity
  AbelianStructure structure;

  std::uint64_t total_count() const { return points.size(); }
  std::uint64_t affine_count() const { return points.size() - 1; }
  std::vector<CurvePoint> generator_points() const;
  std::size_t index_of(const CurvePoint& p) const;
  /// Order of a single point by repeated addition.
  std::uint64_t order_of(const CurvePoint& p) const;
};

/// Enumerates and decomposes. Throws BudgetExceeded when q > budget.
CurveGroup group_structure(const CurveData& c, std::uint64_t budget = 10'000'000,
                           unsigned workers = 1);

/// |N - (q + 1)| <= 2 sqrt(q), compared in integers.
bool hasse_weil_holds(std::uint64_t total_points, std::uint64_t q);
bool hasse_weil_check(const CurveData& c);

/// The same equation read over another field of the same characteristic.
/// Coefficients must lie in the prime field.
CurveData base_change(const CurveData& c, const FieldSpec& target);

/// (x, y) -> (x^p, y^p).
CurvePoint frobenius_point(const CurvePoint& p);

struct TraceKernel {
  std::uint64_t kernel_size = 0;
  std::uint64_t image_size = 0;
  std::uint64_t total = 0;
};

/// Trace P -> P + Frob(P) from C(F_{p^2}) to C(F_p). Requires a degree-2
/// field and coefficients in the prime field.
TraceKernel trace_kernel(const CurveData& c, unsigned workers = 1);

}  // namespace genuslab
