#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genuslab/field.hpp"

namespace genuslab {

/// Dense univariate polynomial over F_q; trailing zero coefficients are
/// always stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const FieldSpec& field) : field_(field) {}
  Polynomial(const FieldSpec& field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  /// c * x^k
  static Polynomial monomial(const FieldElement& c, int k);

  const FieldSpec& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  FieldElement coeff(int k) const;
  FieldElement leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElement& c) const;

  /// Quotient and remainder; throws DomainError on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient when the division is exact, nothing otherwise.
  std::optional<Polynomial> exact_div(const Polynomial& divisor) const;

  FieldElement eval(const FieldElement& x) const;
  /// p(x0 + t) as a polynomial in t.
  Polynomial shifted(const FieldElement& x0) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_ && field_ == o.field_; }
  /// Degree first, then coefficient indices from the top.
  bool operator<(const Polynomial& o) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldSpec field_{};
  std::vector<FieldElement> coeffs_;
};

/// r with r^2 = p when one exists over F_q (sign fixed by the smallest-index
/// root of the leading coefficient).
std::optional<Polynomial> poly_sqrt(const Polynomial& p);

}  // namespace genuslab
