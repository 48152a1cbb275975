#pragma once

// Finite groups given by constant generator matrices over F_q: presets,
// closure, centralizer algebra, and enumeration of a centralizer span.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/linalg.hpp"

namespace genuslab {

/// Gamma presented through generator images rho(gamma) in GL_n(F_q).
/// The representation is over the constants of the coordinate ring.
struct GroupRep {
  std::string name;
  std::uint64_t abstract_order = 1;  // |Gamma| of the named abstract group
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<FieldMatrix> generators;
};

/// Validates shapes and invertibility of the generators.
GroupRep make_rep(std::string name, std::uint64_t abstract_order, const FieldSpec& field, std::size_t dim,
                  std::vector<FieldMatrix> generators);

GroupRep trivial_rep(const FieldSpec& field, std::size_t dim);
/// tau = [[0,1],[1,0]], sigma = [[5,-8],[8,5]] over F_11.
GroupRep s3_rank2_f11();
/// Rotation by a third of a turn and a swap; needs 3 to be a square in F_q.
GroupRep s3_rank2(const FieldSpec& field);
/// S_k permuting the last k coordinates of F_q^n by permutation matrices
/// (generated by a transposition and a k-cycle); trivial when k <= 1.
GroupRep symmetric_block_rep(const FieldSpec& field, std::size_t n, std::size_t k);

std::uint64_t factorial(std::uint64_t k);

struct GeneratedGroup {
  std::vector<FieldMatrix> elements;  // sorted by matrix_less
  std::uint64_t order() const { return elements.size(); }
  bool faithful = false;              // order equals the abstract order
};

/// Closure of the generators under products. Throws BudgetExceeded when the
/// closure grows past `budget` elements.
GeneratedGroup generated_group(const GroupRep& rep, std::uint64_t budget = 10'000'000);

struct CentralizerBasis {
  FieldSpec field;
  std::size_t n = 0;
  std::vector<FieldMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
  /// (1/|G|) sum_g tr(g) tr(g^-1), recorded when it is meaningful in F_p
  /// (p does not divide |G| and n^2 < p).
  std::optional<std::uint64_t> character_dimension;
};

/// Kernel of M -> (rho(g) M - M rho(g))_g over F_q.
CentralizerBasis centralizer_basis(const GroupRep& rep);

/// Every invertible M in span(basis) with M^T b1 M = b2, sorted. The q^d
/// coefficient space is split across workers by the first coefficient.
/// Throws BudgetExceeded when q^d > budget.
std::vector<FieldMatrix> span_isometries(const std::vector<FieldMatrix>& basis, const FieldMatrix& b1,
                                         const FieldMatrix& b2, std::uint64_t budget, unsigned workers = 1);

}  // namespace genuslab
