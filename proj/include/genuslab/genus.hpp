#pragma once

// Genus cardinalities of quadratic spaces over O, read off from Pic(O) and
// the units through the isomorphisms recorded in each result's `license`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/fixed_group.hpp"
#include "genuslab/kummer.hpp"

namespace genuslab {

struct GenusCount {
  std::uint64_t size = 0;
  bool proper_equals_genus = false;  // c+(q) = c(q)
  AbelianStructure pic;
  std::string license;
};

/// |c(q)| = |Pic / 2 Pic|. Throws DomainError for rank < 3 or an irregular
/// form; a regular form of rank >= 3 over O is isotropic here.
GenusCount genus_size(const CoordRing& ring, const GramForm& form, std::uint64_t budget = 10'000'000,
                      unsigned workers = 1);

/// |c+_Gamma(q)| = |Pic(O)| when the fixed connected group is G_m.
GenusCount proper_gamma_genus_size_gm(const CoordRing& ring, std::uint64_t budget = 10'000'000,
                                      unsigned workers = 1);

struct MuH1Size {
  std::uint64_t units_part = 1;    // |O^x / (O^x)^m| = gcd(m, q - 1)
  std::uint64_t torsion_part = 1;  // |Pic[m]|
  std::uint64_t total = 1;
  std::string license;
};

/// Throws DomainError when m < 1 or the characteristic divides m.
MuH1Size mu_m_h1_size(const CoordRing& ring, std::uint64_t m, std::uint64_t budget = 10'000'000,
                      unsigned workers = 1);

struct KernelWitness {
  std::string label;    // which class of H^1(O, mu_2) it represents
  RingElement element;  // its image in K^x / (K^x)^2
  Verdict square = Verdict::No;
};

struct KernelToK {
  std::uint64_t size = 1;  // 1 + number of classes whose image is a square
  bool complete = false;   // every square test was decided
  std::vector<KernelWitness> witnesses;
  std::string license;
};

/// ker[H^1(O, mu_2) -> H^1(K, mu_2)], checked class by class: a unit class
/// times the Kummer generator of a 2-torsion class, which must not be a square.
KernelToK kernel_to_K_mu2(const CoordRing& ring, int degree_bound = 8, std::uint64_t budget = 10'000'000,
                          unsigned workers = 1);

struct NormTorusGenus {
  std::uint64_t kernel_size = 0;
  std::uint64_t image_size = 0;
  std::uint64_t total = 0;  // |Pic(O(i))|
  std::string license;
};

/// Kernel of the trace Pic(O(i)) -> Pic(O), for a curve with coefficients in
/// F_p (given over F_p or F_{p^2}). Throws DomainError when -1 is a square in F_p.
NormTorusGenus norm_torus_genus(const CurveData& curve, unsigned workers = 1);

enum class ItemStatus { Passed, Failed, FiberEvidenced, FiberContradicted, Assumed };
std::string to_string(ItemStatus s);
bool counts_as_pass(ItemStatus s);

struct CheckItem {
  std::string name;
  ItemStatus status = ItemStatus::Failed;
  std::string detail;
};

enum class ShapeEvidence { Fiber, Assume };

struct Certificate {
  std::vector<CheckItem> items;
  bool non_injective = false;
  std::vector<std::string> failing;
  std::uint64_t pic_order = 0;        // |c+_Gamma(q)|
  std::uint64_t pic_mod_two = 0;      // |c(q)|
  AbelianStructure pic;
  std::string bridge;
  std::string verdict() const { return non_injective ? "NON_INJECTIVE" : "INCONCLUSIVE"; }
};

/// Evaluates every hypothesis of the non-injection criterion for c_Gamma(q)
/// -> c(q). With ShapeEvidence::Fiber the fixed group is enumerated when q^d
/// fits the budget and compared with 2(q - 1) det-1 points; otherwise the
/// shape is assumed.
Certificate certify_non_injection(const CoordRing& ring, const GramForm& form, const GroupRep& rep,
                                  ShapeEvidence evidence = ShapeEvidence::Fiber,
                                  std::uint64_t budget = 10'000'000, unsigned workers = 1);

struct ScanRow {
  std::int64_t q = 0;
  std::int64_t a = 0, b = 0;
  std::string curve;
  std::uint64_t pic_order = 0;
  std::uint64_t affine_count = 0;
  std::string structure;
  std::uint64_t exponent = 1;
  bool minus_one_square = false;
  bool eligible = false;  // -1 square and exp(Pic) > 2
  bool hasse_weil = false;
};

/// One row per smooth curve y^2 = x^3 + a x + b over each field, with a, b
/// taken from `coefficients` (reduced mod p) or, when empty, every pair of
/// prime-field elements. Sorted by (q, a, b).
std::vector<ScanRow> scan(const std::vector<FieldSpec>& fields,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& coefficients,
                          std::uint64_t budget = 10'000'000, unsigned workers = 1);

}  // namespace genuslab
