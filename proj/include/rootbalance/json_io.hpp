#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "rootbalance/certificate.hpp"
#include "rootbalance/extremal.hpp"
#include "rootbalance/root_system.hpp"

namespace rootbalance {

using Json = nlohmann::ordered_json;

/// {"family","rank","ambient_dim","scale":2,"positive_roots":[[...],...]}
Json to_json(const RootSystem& rs);
/// Rebuilds the system from family and rank and checks that every listed
/// field matches exactly; FormatError otherwise.
RootSystem root_system_from_json(const Json& j);

Json label_json(const DynkinLabel& label);
DynkinLabel label_from_json(const Json& j);

/// {"system":{"family","rank"},"indices":[...]}
Json to_json(const DynkinLabel& system, const SubsetSelection& s);
SubsetSelection subset_from_json(const Json& j, const RootSystem& rs);

/// {"system":{...},"terms":[[index,sign],...]}
Json to_json(const SignedCombination& s);
SignedCombination signed_combination_from_json(const Json& j);

Json to_json(const WellBalancedCertificate& wb);
WellBalancedCertificate wellbalanced_from_json(const Json& j);

/// Carries "kind" and "verified"; the latter is null unless a verification
/// result is supplied.
Json to_json(const Certificate& c, std::optional<bool> verified = std::nullopt);
Certificate certificate_from_json(const Json& j);

Json to_json(const ExtremalReport& r, std::optional<bool> lower_verified = std::nullopt,
             std::optional<bool> upper_verified = std::nullopt);
Json to_json(const TableReport& r);
Json to_json(const C5RemarkReport& r);

} // namespace rootbalance
