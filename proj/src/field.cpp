#include "genuslab/field.hpp"

#include "genuslab/error.hpp"

namespace genuslab {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  base = mod(base, p);
  while (e != 0) {
    if (e & 1u) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  return mod(t, p);
}

}  // namespace

std::string FieldSpec::name() const {
  if (degree == 1) return "GF(" + std::to_string(p) + ")";
  return "GF(" + std::to_string(p) + "^2)";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

FieldSpec make_field(std::int64_t p, int degree) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw DomainError("characteristic " + std::to_string(p) + " is not an odd prime");
  if (degree != 1 && degree != 2)
    throw DomainError("only degrees 1 and 2 are supported, got " + std::to_string(degree));
  // Keeps (p*p)^2 and index products comfortably inside int64.
  if (p > 3037000)
    throw DomainError("characteristic " + std::to_string(p) + " is beyond desk scale");
  FieldSpec spec{p, degree, 0};
  if (degree == 2) {
    if (p % 4 == 3) {
      spec.d = p - 1;
    } else {
      for (std::int64_t c = 2; c < p; ++c) {
        if (pow_mod(c, static_cast<std::uint64_t>((p - 1) / 2), p) == p - 1) {
          spec.d = c;
          break;
        }
      }
    }
  }
  return spec;
}

FieldElement::FieldElement(const FieldSpec& spec, std::int64_t a, std::int64_t b)
    : spec_(spec), a_(mod(a, spec.p)), b_(spec.degree == 2 ? mod(b, spec.p) : 0) {
  if (spec.degree == 1 && mod(b, spec.p) != 0)
    throw DomainError("second coordinate given for prime field " + spec.name());
}

FieldElement FieldElement::from_index(const FieldSpec& spec, std::int64_t index) {
  if (index < 0 || index >= spec.q())
    throw DomainError("element index out of range for " + spec.name());
  return FieldElement(spec, index % spec.p, index / spec.p);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(spec_ == o.spec_))
    throw DomainError("mixed fields: " + spec_.name() + " and " + o.spec_.name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  r.a_ = (a_ + o.a_) % spec_.p;
  r.b_ = (b_ + o.b_) % spec_.p;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  r.a_ = mod(a_ - o.a_, spec_.p);
  r.b_ = mod(b_ - o.b_, spec_.p);
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.a_ = mod(-a_, spec_.p);
  r.b_ = mod(-b_, spec_.p);
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  const std::int64_t p = spec_.p;
  FieldElement r = *this;
  if (spec_.degree == 1) {
    r.a_ = a_ * o.a_ % p;
    return r;
  }
  // (a + b w)(c + e w) = (ac + d be) + (ae + bc) w
  r.a_ = (a_ * o.a_ % p + spec_.d * (b_ * o.b_ % p)) % p;
  r.b_ = (a_ * o.b_ + b_ * o.a_) % p;
  return r;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in " + spec_.name());
  const std::int64_t p = spec_.p;
  if (spec_.degree == 1) return FieldElement(spec_, inv_mod(a_, p));
  // (a + b w)^-1 = (a - b w) / (a^2 - d b^2); the norm is nonzero since d is a non-residue.
  const std::int64_t norm = mod(a_ * a_ % p - spec_.d * (b_ * b_ % p), p);
  const std::int64_t ninv = inv_mod(norm, p);
  return FieldElement(spec_, a_ * ninv, mod(-b_, p) * ninv);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = one(spec_);
  FieldElement base = *this;
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::frobenius() const {
  if (spec_.degree == 1) return *this;
  // w^p = w * d^((p-1)/2) = -w
  return FieldElement(spec_, a_, -b_);
}

std::string FieldElement::to_string() const {
  if (spec_.degree == 1 || b_ == 0) return std::to_string(a_);
  const std::string gen = spec_.generator_is_i() ? "i" : "w";
  const std::string bpart = (b_ == 1 ? "" : std::to_string(b_)) + gen;
  if (a_ == 0) return bpart;
  return std::to_string(a_) + "+" + bpart;
}

std::vector<FieldElement> field_elements(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(spec.q()));
  for (std::int64_t k = 0; k < spec.q(); ++k) out.push_back(FieldElement::from_index(spec, k));
  return out;
}

SquareResult is_square(const FieldElement& a) {
  const FieldSpec& spec = a.spec();
  if (a.is_zero()) return {true, FieldElement::zero(spec)};
  const auto euler = a.pow(static_cast<std::uint64_t>((spec.q() - 1) / 2));
  if (!euler.is_one()) return {false, std::nullopt};
  for (std::int64_t k = 1; k < spec.q(); ++k) {
    const auto r = FieldElement::from_index(spec, k);
    if (r * r == a) return {true, r};
  }
  throw DomainError("Euler criterion and exhaustive root search disagree");  // unreachable
}

FieldTables::FieldTables(const FieldSpec& spec)
    : spec_(spec), q_(static_cast<std::uint32_t>(spec.q())) {
  if (spec.q() > kMaxOrder)
    throw BudgetExceeded("field tables for " + spec.name(), static_cast<std::uint64_t>(spec.q()),
                         kMaxOrder);
  const auto elems = field_elements(spec);
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  for (std::uint32_t x = 0; x < q_; ++x) {
    neg_[x] = static_cast<std::uint16_t>((-elems[x]).index());
    inv_[x] = x == 0 ? 0 : static_cast<std::uint16_t>(elems[x].inv().index());
    for (std::uint32_t y = 0; y < q_; ++y) {
      add_[x * q_ + y] = static_cast<std::uint16_t>((elems[x] + elems[y]).index());
      mul_[x * q_ + y] = static_cast<std::uint16_t>((elems[x] * elems[y]).index());
    }
  }
}

}  // namespace genuslab
