#include "genuslab/fixed_group.hpp"

#include <algorithm>
#include <chrono>

namespace genuslab {

namespace {

bool contains(const std::vector<FieldMatrix>& sorted, const FieldMatrix& m) {
  return std::binary_search(sorted.begin(), sorted.end(), m, matrix_less);
}

}  // namespace

FixedGroupReport fixed_orthogonal_order(const GramForm& f, const GroupRep& rep, std::uint64_t budget,
                                        unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  if (!f.is_constant()) throw DomainError("fixed group needs a constant Gram matrix");
  if (!f.regular()) throw DomainError("fixed group needs a regular form");
  if (!is_gamma_form(f, rep)) throw DomainError("form is not a Gamma-form for " + rep.name);
  const auto& field = f.ring().field();
  const auto b = f.constant_gram();
  const auto cb = centralizer_basis(rep);

  FixedGroupReport r;
  r.field = field.name();
  r.dimension_d = cb.dimension();
  r.budget_used = saturating_pow(static_cast<std::uint64_t>(field.q()), static_cast<unsigned>(cb.dimension()));
  r.elements = span_isometries(cb.basis, b, b, budget, workers);
  r.full_order = r.elements.size();

  const auto& el = r.elements;
  const auto id = identity_matrix(field, f.rank());
  bool closed = contains(el, id);
  bool abelian = true;
  for (std::size_t i = 0; i < el.size() && closed; ++i) {
    const auto inv = inverse(el[i]);
    closed = inv && contains(el, *inv);
    for (std::size_t j = 0; j < el.size() && closed; ++j) {
      const auto prod = el[i] * el[j];
      closed = contains(el, prod);
      if (abelian && j > i && !(prod == el[j] * el[i])) abelian = false;
    }
  }
  r.closure_certified = closed;
  r.abelian = abelian;

  const auto gamma = generated_group(rep, budget);
  r.commutes_with_closure = std::all_of(el.begin(), el.end(), [&](const FieldMatrix& m) {
    return std::all_of(gamma.elements.begin(), gamma.elements.end(),
                       [&](const FieldMatrix& g) { return m * g == g * m; });
  });

  const auto one = FieldElement::one(field);
  for (const auto& m : el) {
    const auto d = determinant(m);
    if (d == one) ++r.det1_order;
    else if (!(d == -one)) r.closure_certified = false;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t generated_group_order(const GroupRep& rep, std::uint64_t budget) {
  return generated_group(rep, budget).order();
}

std::uint64_t classical_orthogonal_order(const FieldSpec& field, std::size_t n, const FieldElement& det) {
  if (det.is_zero()) throw DomainError("degenerate form");
  const auto q = static_cast<std::uint64_t>(field.q());
  switch (n) {
    case 1:
      return 2;
    case 2:
      return is_square(-det).square ? 2 * (q - 1) : 2 * (q + 1);
    case 3:
      return 2 * q * (q * q - 1);
    default:
      throw DomainError("classical order tabulated for n <= 3 only");
  }
}

std::uint64_t brute_force_orthogonal_order(const FieldMatrix& b, std::uint64_t budget) {
  const std::size_t n = b.rows();
  const auto& field = b(0, 0).spec();
  const auto q = static_cast<std::uint64_t>(field.q());
  const auto space = saturating_pow(q, static_cast<unsigned>(n * n));
  if (space > budget) throw BudgetExceeded("full matrix enumeration", space, budget);
  std::uint64_t count = 0;
  FieldMatrix m(n, n, FieldElement::zero(field));
  for (std::uint64_t it = 0; it < space; ++it) {
    std::uint64_t rest = it;
    for (std::size_t e = 0; e < n * n; ++e, rest /= q)
      m(e / n, e % n) = FieldElement::from_index(field, static_cast<std::int64_t>(rest % q));
    if (m.transpose() * b * m == b) ++count;
  }
  return count;
}

std::uint64_t gm_shape_det1_prediction(const FieldSpec& field) {
  return 2 * (static_cast<std::uint64_t>(field.q()) - 1);
}

}  // namespace genuslab
