#include "rootbalance/certificate.hpp"

#include <array>

#include "rootbalance/errors.hpp"

namespace rootbalance {

namespace {

constexpr std::array<std::string_view, 8> kKindNames = {
    "Witness",      "CoordinateParity", "PairCountParity",  "E7PairScan",
    "SOSizeBound",  "LatticeParity",    "ExhaustiveSearch", "TrivialBound",
};

} // namespace

std::string_view to_string(CertificateKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

CertificateKind certificate_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<CertificateKind>(i);
  throw FormatError("unknown certificate kind '" + std::string(name) + "'");
}

std::string_view to_string(SOSizeMethod method) {
  switch (method) {
  case SOSizeMethod::Enumeration: return "enumeration";
  case SOSizeMethod::SupportPacking: return "support_packing";
  }
  return "?";
}

std::string_view to_string(SORefinement refinement) {
  switch (refinement) {
  case SORefinement::None: return "none";
  case SORefinement::EvenCoordinateParity: return "even_coordinate_parity";
  case SORefinement::OddCoordinateParity: return "odd_coordinate_parity";
  case SORefinement::LongRootExclusion: return "long_root_exclusion";
  }
  return "?";
}

std::string_view to_string(Quantity q) {
  return q == Quantity::MinBalancedCocardinality ? "min_balanced_cocard" : "max_wellbalanced_cocard";
}

Quantity quantity_from_string(std::string_view name) {
  if (name == "min_balanced_cocard") return Quantity::MinBalancedCocardinality;
  if (name == "max_wellbalanced_cocard") return Quantity::MaxWellBalancedCocardinality;
  throw FormatError("unknown quantity '" + std::string(name) + "'");
}

CertificateKind Certificate::kind() const noexcept {
  return static_cast<CertificateKind>(payload.index());
}

} // namespace rootbalance
