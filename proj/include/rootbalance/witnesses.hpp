#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootbalance/certificate.hpp"
#include "rootbalance/root_system.hpp"

namespace rootbalance {

// ---------------------------------------------------------------------------
// Alternating identities over e_1..e_N

enum class IdentityKind { Plus, Minus };    // e_i + e_j or e_i - e_j
enum class IdentityParity { Even, Odd };    // N = 2m or N = 2m + 1

struct FormalTerm {
  CoordVector vector;
  int sign = 1;
};

struct IdentitySum {
  std::vector<FormalTerm> terms;  // sum_{i<j<=N} (-1)^{i+j} (e_i +- e_j)
  CoordVector rhs;                // closed form

  CoordVector lhs() const;
  bool verifies() const { return lhs() == rhs; }
};

IdentitySum identity_sum(IdentityKind kind, IdentityParity parity, int m);

// ---------------------------------------------------------------------------
// Explicit constructions

/// Balanced subset of minimal cocardinality with its signing.
WellBalancedCertificate thm32_witness(const DynkinLabel& label);
/// Well-balanced subset of maximal cocardinality with its signing.
WellBalancedCertificate thm41_witness(const DynkinLabel& label);

/// Signing of all of R+(F4), found by the exhaustive solver and stored as
/// data; re-verified whenever it is loaded.
SignedCombination f4_full_signing(const RootSystem& f4);

// ---------------------------------------------------------------------------
// Bounds

/// Structure of strong orthogonality for systems whose roots all have
/// supports of size one or two: two roots with overlapping but different
/// supports are never strongly orthogonal, so a strongly orthogonal set is
/// a packing of disjoint support classes.
struct SupportAnalysis {
  bool applicable = false;
  std::size_t singleton_weight = 0;    // max strongly orthogonal roots on one singleton support
  std::size_t pair_weight = 0;         // same for a two-element support
  std::size_t singleton_supports = 0;  // distinct singleton supports
  bool singleton_classes_simple = false;  // every singleton support carries one root
  std::size_t packing_bound = 0;
};

SupportAnalysis analyze_supports(const RootSystem& rs);

/// True when every positive root has integer coordinates.
bool has_integral_coordinates(const RootSystem& rs);

struct BoundResult {
  int bound = 0;
  Certificate certificate;
};

/// Lower bound on the cocardinality of a balanced subset for A, B, D from
/// per-coordinate parity. NotApplicable for C, E, F, G.
BoundResult coordinate_parity_bound(const RootSystem& rs);

/// Lower bound for C and D from the number of +-2e_k terms.
BoundResult pair_count_parity_bound(const RootSystem& rs);

/// Machine-checked three-step argument that E7 needs cocardinality >= 3.
BoundResult e7_cocardinality_bound(const RootSystem& rs);

/// Upper bound on the cocardinality of a well-balanced subset.
BoundResult wellbalanced_upper_bound(const RootSystem& rs);

/// Best available lower bound on the minimal balanced cocardinality.
BoundResult balanced_lower_bound(const RootSystem& rs);

// ---------------------------------------------------------------------------
// Verification

struct VerificationResult {
  bool ok = false;
  std::string detail;
  explicit operator bool() const noexcept { return ok; }
};

/// Independent re-check of a certificate using only root system data and the
/// balance predicates.
VerificationResult verify(const RootSystem& rs, const Certificate& cert);
VerificationResult verify(const RootSystem& rs, const WellBalancedCertificate& cert);

/// Wraps a WellBalancedCertificate into a Witness certificate.
Certificate as_certificate(const WellBalancedCertificate& wb);

} // namespace rootbalance
