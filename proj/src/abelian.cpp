#include "genuslab/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "genuslab/error.hpp"

namespace genuslab {

std::string AbelianStructure::to_string() const {
  if (factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) out += " x ";
    out += "Z/" + std::to_string(factors[i]);
  }
  return out;
}

std::uint64_t m_torsion_count(const AbelianStructure& s, std::uint64_t m) {
  if (m == 0) throw DomainError("m-torsion requires m >= 1");
  std::uint64_t count = 1;
  for (auto d : s.factors) count *= std::gcd(d, m);
  return count;
}

AbelianStructure structure_from_factors(std::vector<std::uint64_t> factors) {
  std::erase(factors, std::uint64_t{1});
  if (std::find(factors.begin(), factors.end(), 0u) != factors.end())
    throw DomainError("invariant factors must be positive");
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] % factors[i - 1] != 0)
      throw DomainError("factors do not form a divisibility chain");
  AbelianStructure s;
  s.factors = factors;
  for (auto d : factors) s.order *= d;
  s.exponent = factors.empty() ? 1 : factors.back();
  return s;
}

bool injects_into_mod_two_quotient(const AbelianStructure& s) { return s.exponent <= 2; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t l = 2; l * l <= n; ++l) {
    if (n % l != 0) continue;
    out.push_back(l);
    while (n % l == 0) n /= l;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t group_multiple(const IndexedGroup& g, std::uint64_t k, std::size_t element) {
  std::size_t result = g.zero;
  std::size_t base = element;
  while (k != 0) {
    if (k & 1u) result = g.add(result, base);
    base = g.add(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> element_orders(const IndexedGroup& g) {
  const auto primes = prime_factors(g.size);
  std::vector<std::uint64_t> orders(g.size);
  for (std::size_t e = 0; e < g.size; ++e) {
    std::uint64_t ord = g.size;
    for (auto l : primes) {
      while (ord % l == 0 && group_multiple(g, ord / l, e) == g.zero) ord /= l;
    }
    orders[e] = ord;
  }
  return orders;
}

namespace {

struct PrimePart {
  std::vector<std::uint64_t> orders;  // descending prime powers
  std::vector<std::size_t> gens;
};

PrimePart sylow_basis(const IndexedGroup& g, std::uint64_t l,
                      const std::vector<std::uint64_t>& orders) {
  std::vector<std::size_t> sylow;
  for (std::size_t e = 0; e < g.size; ++e) {
    std::uint64_t o = orders[e];
    while (o % l == 0) o /= l;
    if (o == 1) sylow.push_back(e);
  }

  PrimePart part;
  // Current span S = <gens>, with the coefficient vector of each member.
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> span;
  span[g.zero] = {};

  while (span.size() < sylow.size()) {
    std::size_t best = g.zero;
    std::uint64_t best_q = 1;
    for (auto h : sylow) {
      std::uint64_t qo = 1;
      std::size_t cur = h;
      while (!span.contains(cur)) {
        cur = group_multiple(g, l, cur);
        qo *= l;
      }
      if (qo > best_q) {
        best_q = qo;
        best = h;
      }
    }
    // best_q * best lies in S; subtract (t_i / best_q) g_i so the lift has order best_q.
    const auto& coeffs = span.at(group_multiple(g, best_q, best));
    std::size_t lift = best;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] % best_q != 0) throw DomainError("basis extraction: non-divisible lift");
      const std::uint64_t k = coeffs[i] / best_q;
      const std::uint64_t neg = (part.orders[i] - k % part.orders[i]) % part.orders[i];
      lift = g.add(lift, group_multiple(g, neg, part.gens[i]));
    }
    if (orders[lift] != best_q) throw DomainError("basis extraction: lift has wrong order");

    std::unordered_map<std::size_t, std::vector<std::uint64_t>> grown;
    grown.reserve(span.size() * best_q);
    for (const auto& [elem, vec] : span) {
      std::size_t cur = elem;
      for (std::uint64_t k = 0; k < best_q; ++k) {
        auto v = vec;
        v.resize(part.gens.size(), 0);
        v.push_back(k);
        grown.emplace(cur, std::move(v));
        cur = g.add(cur, lift);
      }
    }
    span = std::move(grown);
    part.orders.push_back(best_q);
    part.gens.push_back(lift);
  }
  return part;
}

}  // namespace

AbelianStructure decompose(const IndexedGroup& g) {
  if (g.size == 0) throw DomainError("empty group");
  const auto orders = element_orders(g);
  std::vector<PrimePart> parts;
  std::size_t rank = 0;
  for (auto l : prime_factors(g.size)) {
    parts.push_back(sylow_basis(g, l, orders));
    rank = std::max(rank, parts.back().orders.size());
  }

  // j-th largest prime-power factors across primes combine into one invariant factor.
  AbelianStructure s;
  for (std::size_t j = 0; j < rank; ++j) {
    std::uint64_t d = 1;
    std::size_t gen = g.zero;
    for (const auto& part : parts) {
      if (j >= part.orders.size()) continue;
      d *= part.orders[j];
      gen = g.add(gen, part.gens[j]);
    }
    s.factors.push_back(d);
    s.generators.push_back(gen);
  }
  std::reverse(s.factors.begin(), s.factors.end());
  std::reverse(s.generators.begin(), s.generators.end());
  s.order = 1;
  for (auto d : s.factors) s.order *= d;
  s.exponent = s.factors.empty() ? 1 : s.factors.back();
  if (s.order != g.size) throw DomainError("invariant factors do not multiply to the group order");
  for (std::size_t i = 0; i < s.factors.size(); ++i)
    if (orders[s.generators[i]] != s.factors[i])
      throw DomainError("generator order does not match its invariant factor");
  return s;
}

}  // namespace genuslab
