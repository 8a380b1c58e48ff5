#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootbalance/coord_vector.hpp"

namespace rootbalance {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinLabel {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;
  friend auto operator<=>(const DynkinLabel&, const DynkinLabel&) = default;

  std::string to_string() const;
  bool is_classical() const noexcept;
  /// Accepts "A".."G" (case-insensitive); validates admissibility.
  static DynkinLabel parse(std::string_view family, int rank);
};

bool is_admissible(const DynkinLabel& label) noexcept;
void require_admissible(const DynkinLabel& label);

/// A positive root with an orientation: sign * positive_roots[index].
struct RootRef {
  std::size_t index = 0;
  int sign = 1;
  friend bool operator==(const RootRef&, const RootRef&) = default;
};

/// Reduced simple root system with Bourbaki positive roots. Immutable after
/// construction; the positive roots are sorted lexicographically on their
/// stored coordinates.
class RootSystem {
public:
  explicit RootSystem(const DynkinLabel& label);

  const DynkinLabel& label() const noexcept { return label_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return roots_.size(); }

  std::span<const CoordVector> positive_roots() const noexcept { return roots_; }
  const CoordVector& root(std::size_t index) const { return roots_.at(index); }
  std::span<const CoordVector> simple_roots() const noexcept { return simple_; }

  /// Signed reference when v is in R+ or -R+.
  std::optional<RootRef> find(const CoordVector& v) const;
  /// Index of a positive root; throws when v is not in R+.
  std::size_t index_of(const CoordVector& v) const;

  /// Sum of all positive roots (2 rho).
  const CoordVector& positive_sum() const noexcept { return positive_sum_; }

private:
  DynkinLabel label_;
  std::size_t ambient_dim_ = 0;
  std::vector<CoordVector> roots_;
  std::vector<CoordVector> simple_;
  std::unordered_map<CoordVector, RootRef, CoordVectorHash> membership_;
  CoordVector positive_sum_;
};

RootSystem build_root_system(const DynkinLabel& label);

/// Membership test against R = R+ u -R+.
std::optional<RootRef> is_root(const RootSystem& rs, const CoordVector& v);

CoordVector positive_sum(const RootSystem& rs);

} // namespace rootbalance
