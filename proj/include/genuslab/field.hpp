#pragma once

// Exact arithmetic in F_p and in the quadratic extension F_p(sqrt d).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace genuslab {

/// F_q with q = p or q = p^2. The quadratic extension is F_p[w]/(w^2 - d)
/// for a fixed non-residue d; d = p - 1 (i.e. w = i) whenever p = 3 mod 4.
struct FieldSpec {
  std::int64_t p = 0;
  int degree = 1;
  std::int64_t d = 0;  // reduced into [0, p); 0 for prime fields

  std::int64_t q() const { return degree == 1 ? p : p * p; }
  bool operator==(const FieldSpec&) const = default;

  /// "GF(11)" or "GF(11^2)".
  std::string name() const;
  /// True when the extension generator squares to -1, so it prints as "i".
  bool generator_is_i() const { return degree == 2 && d == p - 1; }
};

bool is_prime(std::int64_t n);

/// Validates p and, for degree 2, picks the non-residue d.
FieldSpec make_field(std::int64_t p, int degree);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec& spec, std::int64_t a, std::int64_t b = 0);

  static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec, 0, 0); }
  static FieldElement one(const FieldSpec& spec) { return FieldElement(spec, 1, 0); }
  /// Inverse of index(): a + p*b.
  static FieldElement from_index(const FieldSpec& spec, std::int64_t index);

  const FieldSpec& spec() const { return spec_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t index() const { return a_ + spec_.p * b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool in_prime_field() const { return b_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// Throws DomainError on zero.
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  /// x -> x^p; the identity on prime fields, conjugation w -> -w otherwise.
  FieldElement frobenius() const;

  bool operator==(const FieldElement& o) const {
    return a_ == o.a_ && b_ == o.b_ && spec_ == o.spec_;
  }
  /// Orders by index(); only meaningful within one field.
  bool operator<(const FieldElement& o) const { return index() < o.index(); }

  /// "7", "5+3i", "2w", with coordinates printed in [0, p).
  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldSpec spec_{};
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

/// All q elements in index order.
std::vector<FieldElement> field_elements(const FieldSpec& spec);

struct SquareResult {
  bool square = false;
  std::optional<FieldElement> root;  // smallest-index root when square
};

/// Euler criterion for the verdict; the witness is found by exhaustion.
SquareResult is_square(const FieldElement& a);

/// Dense index-based tables for brute-force searches over small fields.
/// Element k corresponds to FieldElement::from_index(spec, k).
class FieldTables {
 public:
  explicit FieldTables(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t q() const { return q_; }
  std::uint16_t add(std::uint16_t x, std::uint16_t y) const { return add_[x * q_ + y]; }
  std::uint16_t mul(std::uint16_t x, std::uint16_t y) const { return mul_[x * q_ + y]; }
  std::uint16_t neg(std::uint16_t x) const { return neg_[x]; }
  std::uint16_t sub(std::uint16_t x, std::uint16_t y) const { return add(x, neg_[y]); }
  /// inv(0) is 0; callers guard.
  std::uint16_t inv(std::uint16_t x) const { return inv_[x]; }

  static constexpr std::int64_t kMaxOrder = 1024;

 private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

}  // namespace genuslab
