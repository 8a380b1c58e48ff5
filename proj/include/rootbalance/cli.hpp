#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rootbalance/certificate.hpp"
#include "rootbalance/root_system.hpp"

namespace rootbalance {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
} // namespace exit_code

/// "full", "indices:i,j,..." or "complement:i,j,..." against canonical order.
SubsetSelection parse_subset_spec(std::string_view text, const RootSystem& rs);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rootbalance
