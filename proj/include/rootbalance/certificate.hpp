#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rootbalance/root_system.hpp"

namespace rootbalance {

/// Root indices into the canonical order of a RootSystem, sorted and
/// deduplicated.
struct SubsetSelection {
  std::vector<std::size_t> indices;

  /// Sorts, deduplicates and range-checks against rs.
  static SubsetSelection of(const RootSystem& rs, std::vector<std::size_t> indices);
  static SubsetSelection full(const RootSystem& rs);

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }
  bool contains(std::size_t index) const;
  SubsetSelection complement(const RootSystem& rs) const;

  friend bool operator==(const SubsetSelection&, const SubsetSelection&) = default;
};

struct SignedTerm {
  std::size_t index = 0;
  int sign = 1;
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Sign assignment on a subset of positive roots; a witness when the signed
/// sum vanishes.
struct SignedCombination {
  DynkinLabel system;
  std::vector<SignedTerm> terms;

  CoordVector resum(const RootSystem& rs) const;
  bool is_witness(const RootSystem& rs) const;
  SubsetSelection subset() const;
  SignedCombination negated() const;

  friend bool operator==(const SignedCombination&, const SignedCombination&) = default;
};

/// A balanced subset together with its signing and the complement.
struct WellBalancedCertificate {
  DynkinLabel system;
  SubsetSelection subset;
  SignedCombination witness;
  SubsetSelection complement;
  bool complement_strongly_orthogonal = false;
  std::size_t cocardinality = 0;

  friend bool operator==(const WellBalancedCertificate&, const WellBalancedCertificate&) = default;
};

/// phi(v) = <numerator, v> / denominator on stored (half-unit) coordinates.
/// If phi is integral on a subset S and sum_{S} phi is odd, S has no
/// vanishing signed combination: every sign flip changes the sum by an even
/// amount.
struct ParityFunctional {
  std::vector<long long> numerator;
  long long denominator = 1;

  friend bool operator==(const ParityFunctional&, const ParityFunctional&) = default;
};

enum class CertificateKind {
  Witness,
  CoordinateParity,
  PairCountParity,
  E7PairScan,
  SOSizeBound,
  LatticeParity,
  ExhaustiveSearch,
  TrivialBound,
};

std::string_view to_string(CertificateKind kind);
CertificateKind certificate_kind_from_string(std::string_view name);

struct WitnessPayload {
  WellBalancedCertificate certificate;
  friend bool operator==(const WitnessPayload&, const WitnessPayload&) = default;
};

/// Per-coordinate parity: coordinate i is "odd" when an odd number of
/// positive roots have odd i-th true coordinate; every such coordinate
/// must be hit by an excluded root.
struct CoordinateParityPayload {
  std::vector<std::size_t> odd_counts;       // per coordinate, number of roots with odd entry
  std::vector<std::size_t> odd_coordinates;  // 1-based
  std::size_t max_odd_entries_per_root = 0;
  friend bool operator==(const CoordinateParityPayload&, const CoordinateParityPayload&) = default;
};

/// Grouping e_i + e_j with e_i - e_j: the number of +-2e_k terms, read off
/// as the total of the functional (1/2) sum_i <e_i, .>. For type D the
/// per-coordinate evenness constraint is recorded as well.
struct PairCountPayload {
  ParityFunctional functional;
  long long term_count = 0;
  bool coordinate_evenness = false;
  std::vector<std::size_t> coordinate_counts;
  friend bool operator==(const PairCountPayload&, const PairCountPayload&) = default;
};

struct E7PairEntry {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t beta = 0;
  bool orthogonal = false;
  friend bool operator==(const E7PairEntry&, const E7PairEntry&) = default;
};

struct E7PairScanPayload {
  long long v_dot_two_rho = 0;                  // <v, 2 rho>
  std::vector<std::size_t> single_root_beta;    // per alpha_1, a beta with odd <beta, alpha_1>
  std::vector<E7PairEntry> pairs;               // every unordered pair with its violating beta
  std::size_t orthogonal_pairs = 0;
  std::size_t surviving_pairs = 0;
  friend bool operator==(const E7PairScanPayload&, const E7PairScanPayload&) = default;
};

enum class SOSizeMethod { Enumeration, SupportPacking };
enum class SORefinement { None, EvenCoordinateParity, OddCoordinateParity, LongRootExclusion };

std::string_view to_string(SOSizeMethod method);
std::string_view to_string(SORefinement refinement);

/// Upper bound on the cocardinality of a well-balanced subset: the largest
/// strongly orthogonal subset, optionally sharpened by a family-specific
/// parity argument.
struct SOSizePayload {
  SOSizeMethod method = SOSizeMethod::Enumeration;
  std::size_t so_max = 0;
  SubsetSelection attaining;
  SORefinement refinement = SORefinement::None;
  /// LongRootExclusion: shows R+ minus all support-one roots is unbalanced.
  ParityFunctional exclusion_functional;
  friend bool operator==(const SOSizePayload&, const SOSizePayload&) = default;
};

struct LatticeParityPayload {
  SubsetSelection subset;
  ParityFunctional functional;
  long long odd_total = 0;
  friend bool operator==(const LatticeParityPayload&, const LatticeParityPayload&) = default;
};

enum class Quantity { MinBalancedCocardinality, MaxWellBalancedCocardinality };
std::string_view to_string(Quantity q);
Quantity quantity_from_string(std::string_view name);

/// Result of an exhaustive complement search: for every listed size, all
/// strongly orthogonal complements of that size were tested and refuted.
struct ExhaustiveSearchPayload {
  Quantity quantity = Quantity::MinBalancedCocardinality;
  std::vector<std::pair<std::size_t, std::size_t>> refuted_sizes;  // (size, candidates)
  std::size_t so_max = 0;
  friend bool operator==(const ExhaustiveSearchPayload&, const ExhaustiveSearchPayload&) = default;
};

struct TrivialBoundPayload {
  friend bool operator==(const TrivialBoundPayload&, const TrivialBoundPayload&) = default;
};

using CertificatePayload =
    std::variant<WitnessPayload, CoordinateParityPayload, PairCountPayload, E7PairScanPayload,
                 SOSizePayload, LatticeParityPayload, ExhaustiveSearchPayload, TrivialBoundPayload>;

/// Re-checkable evidence about a root system. `value` is the certified
/// number: the cocardinality for witnesses, the bound for bound
/// certificates, and the cocardinality of the refuted subset for lattice
/// obstructions.
struct Certificate {
  DynkinLabel system;
  int value = 0;
  CertificatePayload payload;

  CertificateKind kind() const noexcept;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

} // namespace rootbalance
