#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace genuslab {

/// Invariant-factor decomposition d_1 | d_2 | ... | d_k of a finite abelian
/// group. Factors equal to 1 are never listed, so the trivial group has none.
struct AbelianStructure {
  std::vector<std::uint64_t> factors;
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  /// Element indices (in the caller's enumeration), one per factor, each of
  /// exactly the matching order; together they generate the group freely.
  std::vector<std::size_t> generators;

  bool is_cyclic() const { return factors.size() <= 1; }
  /// "Z/12", "Z/2 x Z/2", "trivial".
  std::string to_string() const;
};

/// |{g : m g = 0}| = prod gcd(d_i, m). Requires m >= 1.
std::uint64_t m_torsion_count(const AbelianStructure& s, std::uint64_t m);

/// Builds the structure directly from a factor list (any order, 1s dropped).
/// Generators are left empty.
AbelianStructure structure_from_factors(std::vector<std::uint64_t> factors);

/// True iff some injective homomorphism G -> G/2G exists, i.e. exp(G) <= 2.
bool injects_into_mod_two_quotient(const AbelianStructure& s);

/// A finite abelian group presented by an enumeration of its elements.
struct IndexedGroup {
  std::size_t size = 0;
  std::size_t zero = 0;
  std::function<std::size_t(std::size_t, std::size_t)> add;
};

/// k * g by double-and-add.
std::size_t group_multiple(const IndexedGroup& g, std::uint64_t k, std::size_t element);

/// Order of every element, computed from the prime factorisation of |G|.
std::vector<std::uint64_t> element_orders(const IndexedGroup& g);

/// Sylow-by-Sylow basis extraction (pick a maximal-order element of the
/// quotient, correct its lift by the already chosen generators), then
/// recombination of prime-power factors into invariant factors.
AbelianStructure decompose(const IndexedGroup& g);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace genuslab
