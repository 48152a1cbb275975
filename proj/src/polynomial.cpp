#include "genuslab/polynomial.hpp"

#include <algorithm>

#include "genuslab/error.hpp"

namespace genuslab {

Polynomial::Polynomial(const FieldSpec& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.spec() == field_)) throw DomainError("polynomial coefficient from another field");
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.spec(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, int k) {
  std::vector<FieldElement> v(static_cast<std::size_t>(k) + 1, FieldElement::zero(c.spec()));
  v.back() = c;
  return Polynomial(c.spec(), std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return FieldElement::zero(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

FieldElement Polynomial::leading() const {
  if (is_zero()) return FieldElement::zero(field_);
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw DomainError("mixed polynomial fields");
  std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw DomainError("mixed polynomial fields");
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, FieldElement::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = *this;
  if (degree() < divisor.degree()) return {Polynomial(field_), rem};
  std::vector<FieldElement> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1),
                                 FieldElement::zero(field_));
  const auto lead_inv = divisor.leading().inv();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const auto factor = rem.leading() * lead_inv;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int k = 0; k <= divisor.degree(); ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
    rem.trim();
  }
  return {Polynomial(field_, std::move(quot)), rem};
}

std::optional<Polynomial> Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  auto acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const FieldElement& x0) const {
  // Horner with the linear polynomial (t + x0).
  const Polynomial lin(field_, {x0, FieldElement::one(field_)});
  Polynomial acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int k = degree(); k >= 0; --k) {
    const auto a = coeffs_[static_cast<std::size_t>(k)].index();
    const auto b = o.coeffs_[static_cast<std::size_t>(k)].index();
    if (a != b) return a < b;
  }
  return false;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    if (!c.in_prime_field()) cs = "(" + cs + ")";
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      term = c.is_one() ? "" : cs + "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::optional<Polynomial> poly_sqrt(const Polynomial& p) {
  const FieldSpec& f = p.field();
  if (p.is_zero()) return p;
  if (p.degree() % 2 != 0) return std::nullopt;
  const auto lead = is_square(p.leading());
  if (!lead.square) return std::nullopt;
  const int m = p.degree() / 2;
  // Solve coefficients of r from the top: p_{m+k} = sum_{i+j=m+k} r_i r_j.
  std::vector<FieldElement> r(static_cast<std::size_t>(m) + 1, FieldElement::zero(f));
  r[static_cast<std::size_t>(m)] = *lead.root;
  const auto two_lead_inv = (FieldElement(f, 2) * *lead.root).inv();
  for (int k = m - 1; k >= 0; --k) {
    auto acc = p.coeff(m + k);
    for (int i = k + 1; i <= m; ++i) {
      const int j = m + k - i;
      if (j > k && j <= m) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(k)] = acc * two_lead_inv;
  }
  Polynomial root(f, std::move(r));
  if (!(root * root == p)) return std::nullopt;
  return root;
}

}  // namespace genuslab
