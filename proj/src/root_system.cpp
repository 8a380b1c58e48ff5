#include "rootbalance/root_system.hpp"

#include <algorithm>
#include <cctype>

#include "rootbalance/errors.hpp"

namespace rootbalance {

std::string DynkinLabel::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool DynkinLabel::is_classical() const noexcept {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

DynkinLabel DynkinLabel::parse(std::string_view family, int rank) {
  if (family.size() != 1) throw InadmissibleRank("unknown family '" + std::string(family) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
  if (f < 'A' || f > 'G') throw InadmissibleRank("unknown family '" + std::string(family) + "'");
  DynkinLabel label{static_cast<Family>(f), rank};
  require_admissible(label);
  return label;
}

bool is_admissible(const DynkinLabel& label) noexcept {
  const int n = label.rank;
  switch (label.family) {
  case Family::A: return n >= 1;
  case Family::B:
  case Family::C: return n >= 2;
  case Family::D: return n >= 4;
  case Family::E: return n >= 6 && n <= 8;
  case Family::F: return n == 4;
  case Family::G: return n == 2;
  }
  return false;
}

void require_admissible(const DynkinLabel& label) {
  if (!is_admissible(label)) throw InadmissibleRank("inadmissible label " + label.to_string());
}

namespace {

using Roots = std::vector<CoordVector>;

CoordVector e(std::size_t dim, std::size_t i, int k = 1) { return CoordVector::basis(dim, i, k); }

/// e_i - e_j and e_i + e_j for 1 <= i < j <= n.
void add_pair_roots(Roots& out, std::size_t dim, std::size_t n, bool with_sum) {
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      out.push_back(e(dim, i) - e(dim, j));
      if (with_sum) out.push_back(e(dim, i) + e(dim, j));
    }
}

/// -e_i + e_j and e_i + e_j for 1 <= i < j <= n, written as printed for the
/// E series.
void add_e_series_pairs(Roots& out, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      out.push_back(e(8, j) - e(8, i));
      out.push_back(e(8, i) + e(8, j));
    }
}

/// 1/2(fixed + sum_{i<=k} (-1)^nu(i) e_i) over nu with the given parity.
void add_half_spin(Roots& out, const std::vector<int>& fixed_tail, std::size_t k, int parity) {
  for (unsigned nu = 0; nu < (1u << k); ++nu) {
    if (static_cast<int>(__builtin_popcount(nu) % 2) != parity) continue;
    std::vector<int> c(8, 0);
    for (std::size_t i = 0; i < k; ++i) c[i] = (nu >> i) & 1u ? -1 : 1;
    for (std::size_t i = k; i < 8; ++i) c[i] = fixed_tail[i - k];
    out.emplace_back(std::move(c));
  }
}

CoordVector half_vector(std::vector<int> c) { return CoordVector(std::move(c)); }

} // namespace

RootSystem::RootSystem(const DynkinLabel& label) : label_(label) {
  require_admissible(label);
  const auto n = static_cast<std::size_t>(label.rank);
  Roots& r = roots_;
  Roots& s = simple_;

  switch (label.family) {
  case Family::A:
    ambient_dim_ = n + 1;
    add_pair_roots(r, ambient_dim_, n + 1, false);
    for (std::size_t i = 1; i <= n; ++i) s.push_back(e(ambient_dim_, i) - e(ambient_dim_, i + 1));
    break;
  case Family::B:
    ambient_dim_ = n;
    add_pair_roots(r, n, n, true);
    for (std::size_t i = 1; i <= n; ++i) r.push_back(e(n, i));
    for (std::size_t i = 1; i < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
    s.push_back(e(n, n));
    break;
  case Family::C:
    ambient_dim_ = n;
    add_pair_roots(r, n, n, true);
    for (std::size_t i = 1; i <= n; ++i) r.push_back(e(n, i, 2));
    for (std::size_t i = 1; i < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
    s.push_back(e(n, n, 2));
    break;
  case Family::D:
    ambient_dim_ = n;
    add_pair_roots(r, n, n, true);
    for (std::size_t i = 1; i < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
    s.push_back(e(n, n - 1) + e(n, n));
    break;
  case Family::E: {
    ambient_dim_ = 8;
    if (n == 6) {
      add_e_series_pairs(r, 5);
      add_half_spin(r, {-1, -1, 1}, 5, 0);
    } else if (n == 7) {
      add_e_series_pairs(r, 6);
      r.push_back(e(8, 8) - e(8, 7));
      add_half_spin(r, {-1, 1}, 6, 1);
    } else {
      add_e_series_pairs(r, 8);
      add_half_spin(r, {1}, 7, 0);
    }
    s.push_back(half_vector({1, -1, -1, -1, -1, -1, -1, 1}));
    s.push_back(e(8, 1) + e(8, 2));
    for (std::size_t i = 2; i < n; ++i) s.push_back(e(8, i) - e(8, i - 1));
    break;
  }
  case Family::F:
    ambient_dim_ = 4;
    add_pair_roots(r, 4, 4, true);
    for (std::size_t i = 1; i <= 4; ++i) r.push_back(e(4, i));
    for (unsigned signs = 0; signs < 8; ++signs)
      r.push_back(half_vector({1, signs & 1u ? -1 : 1, signs & 2u ? -1 : 1, signs & 4u ? -1 : 1}));
    s.push_back(e(4, 2) - e(4, 3));
    s.push_back(e(4, 3) - e(4, 4));
    s.push_back(e(4, 4));
    s.push_back(half_vector({1, -1, -1, -1}));
    break;
  case Family::G: {
    // alpha1 = e1 - e2, alpha2 = -2e1 + e2 + e3 in R^3.
    ambient_dim_ = 3;
    const CoordVector a1 = CoordVector::from_true({1, -1, 0});
    const CoordVector a2 = CoordVector::from_true({-2, 1, 1});
    r = {a1, a2, a1 + a2, 2 * a1 + a2, 3 * a1 + a2, 3 * a1 + 2 * a2};
    s = {a1, a2};
    break;
  }
  }

  std::sort(r.begin(), r.end());
  if (std::adjacent_find(r.begin(), r.end()) != r.end())
    throw Error("duplicate positive root while building " + label.to_string());

  positive_sum_ = CoordVector(ambient_dim_);
  for (std::size_t i = 0; i < r.size(); ++i) {
    positive_sum_ += r[i];
    membership_.emplace(r[i], RootRef{i, 1});
    membership_.emplace(-r[i], RootRef{i, -1});
  }
  if (membership_.size() != 2 * r.size())
    throw Error("positive and negative roots overlap in " + label.to_string());
}

std::optional<RootRef> RootSystem::find(const CoordVector& v) const {
  if (v.dim() != ambient_dim_)
    throw DimensionMismatch("vector of dimension " + std::to_string(v.dim()) + " tested against " +
                            label_.to_string() + " (ambient dimension " +
                            std::to_string(ambient_dim_) + ")");
  auto it = membership_.find(v);
  if (it == membership_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const CoordVector& v) const {
  auto ref = find(v);
  if (!ref || ref->sign != 1)
    throw Error(v.expression() + " is not a positive root of " + label_.to_string());
  return ref->index;
}

RootSystem build_root_system(const DynkinLabel& label) { return RootSystem(label); }

std::optional<RootRef> is_root(const RootSystem& rs, const CoordVector& v) { return rs.find(v); }

CoordVector positive_sum(const RootSystem& rs) { return rs.positive_sum(); }

} // namespace rootbalance
