// Lower and upper bounds with their certificates.
#include <algorithm>
#include <map>

#include "rootbalance/balance.hpp"
#include "rootbalance/errors.hpp"
#include "rootbalance/strong_orthogonality.hpp"
#include "rootbalance/witnesses.hpp"

namespace rootbalance {

namespace {

Certificate make(const RootSystem& rs, int value, CertificatePayload payload) {
  Certificate c;
  c.system = rs.label();
  c.value = value;
  c.payload = std::move(payload);
  return c;
}

bool odd_true_entry(int stored) { return (stored / 2) % 2 != 0; }

std::size_t max_so_within(const RootSystem& rs, const std::vector<std::size_t>& cls) {
  std::size_t best = 0;
  const std::size_t k = cls.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) pick.push_back(cls[i]);
    bool ok = true;
    for (std::size_t i = 0; i < pick.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pick.size() && ok; ++j)
        ok = strongly_orthogonal_pair(rs, pick[i], pick[j]);
    if (ok) best = std::max(best, pick.size());
  }
  return best;
}

SubsetSelection subset_of(const RootSystem& rs, const std::vector<CoordVector>& roots) {
  std::vector<std::size_t> idx;
  for (const auto& r : roots) idx.push_back(rs.index_of(r));
  return SubsetSelection::of(rs, std::move(idx));
}

// The standard maximum strongly orthogonal sets of the classical families.
SubsetSelection classical_attaining_set(const RootSystem& rs) {
  const std::size_t d = rs.ambient_dim();
  const auto n = static_cast<std::size_t>(rs.label().rank);
  auto e = [d](std::size_t i, int k = 1) { return CoordVector::basis(d, i, k); };
  std::vector<CoordVector> roots;
  switch (rs.label().family) {
  case Family::A:
    for (std::size_t i = 1; i + 1 <= n + 1; i += 2) roots.push_back(e(i) - e(i + 1));
    break;
  case Family::B:
  case Family::D:
    for (std::size_t i = 1; i + 1 <= n; i += 2) {
      roots.push_back(e(i) + e(i + 1));
      roots.push_back(e(i) - e(i + 1));
    }
    if (rs.label().family == Family::B && n % 2 == 1) roots.push_back(e(n));
    break;
  case Family::C:
    for (std::size_t i = 1; i <= n; ++i) roots.push_back(e(i, 2));
    break;
  default: throw NotApplicable("no classical attaining set for " + rs.label().to_string());
  }
  return subset_of(rs, roots);
}

} // namespace

bool has_integral_coordinates(const RootSystem& rs) {
  for (const auto& r : rs.positive_roots())
    for (int x : r.doubled())
      if (x % 2 != 0) return false;
  return true;
}

SupportAnalysis analyze_supports(const RootSystem& rs) {
  SupportAnalysis out;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> classes;
  std::vector<std::vector<std::size_t>> touching(rs.ambient_dim());
  for (std::size_t a = 0; a < rs.size(); ++a) {
    auto s = support(rs.root(a));
    if (s.empty() || s.size() > 2) return out;
    for (std::size_t c : s) touching[c - 1].push_back(a);
    classes[s].push_back(a);
  }
  for (const auto& roots : touching)
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (support(rs.root(roots[i])) != support(rs.root(roots[j])) &&
            strongly_orthogonal_pair(rs, roots[i], roots[j]))
          return out;

  out.singleton_classes_simple = true;
  for (const auto& [s, cls] : classes) {
    const std::size_t w = max_so_within(rs, cls);
    if (s.size() == 1) {
      out.singleton_weight = std::max(out.singleton_weight, w);
      ++out.singleton_supports;
      if (cls.size() != 1) out.singleton_classes_simple = false;
    } else {
      out.pair_weight = std::max(out.pair_weight, w);
    }
  }
  const std::size_t n = rs.ambient_dim();
  for (std::size_t t = 0; t <= std::min(n, out.singleton_supports); ++t)
    out.packing_bound = std::max(out.packing_bound, t * out.singleton_weight + (n - t) / 2 * out.pair_weight);
  out.applicable = true;
  return out;
}

BoundResult coordinate_parity_bound(const RootSystem& rs) {
  const Family f = rs.label().family;
  if (f != Family::A && f != Family::B && f != Family::D)
    throw NotApplicable("coordinate parity bound does not apply to " + rs.label().to_string());
  CoordinateParityPayload p;
  p.odd_counts.assign(rs.ambient_dim(), 0);
  for (const auto& r : rs.positive_roots()) {
    std::size_t odd_here = 0;
    for (std::size_t c = 0; c < r.dim(); ++c)
      if (odd_true_entry(r[c])) {
        ++p.odd_counts[c];
        ++odd_here;
      }
    p.max_odd_entries_per_root = std::max(p.max_odd_entries_per_root, odd_here);
  }
  for (std::size_t c = 0; c < p.odd_counts.size(); ++c)
    if (p.odd_counts[c] % 2 == 1) p.odd_coordinates.push_back(c + 1);
  const std::size_t k = p.odd_coordinates.size();
  const int bound = k == 0 ? 0
                           : static_cast<int>((k + p.max_odd_entries_per_root - 1) / p.max_odd_entries_per_root);
  return {bound, make(rs, bound, p)};
}

BoundResult pair_count_parity_bound(const RootSystem& rs) {
  const Family f = rs.label().family;
  if (f != Family::C && f != Family::D)
    throw NotApplicable("pair count bound does not apply to " + rs.label().to_string());
  PairCountPayload p;
  p.functional.numerator.assign(rs.ambient_dim(), 1);
  p.functional.denominator = 4;
  const auto all = SubsetSelection::full(rs);
  const auto total = functional_total(rs, all.indices, p.functional);
  if (!total) throw Error("internal: pair count functional not integral");
  p.term_count = *total;
  int bound = 0;
  if (p.term_count % 2 != 0) {
    bound = 1;
    if (f == Family::D) {
      p.coordinate_evenness = true;
      p.coordinate_counts.assign(rs.ambient_dim(), 0);
      for (const auto& r : rs.positive_roots())
        for (std::size_t c = 0; c < r.dim(); ++c)
          if (odd_true_entry(r[c])) ++p.coordinate_counts[c];
      bound = 2;
    }
  }
  return {bound, make(rs, bound, p)};
}

BoundResult e7_cocardinality_bound(const RootSystem& rs) {
  if (rs.label() != DynkinLabel{Family::E, 7})
    throw NotApplicable("E7 pair scan requested for " + rs.label().to_string());
  const auto roots = rs.positive_roots();
  const std::size_t n = roots.size();
  auto ip = [&](std::size_t a, std::size_t b) { return scaled_inner(roots[a], roots[b]) / 4; };

  E7PairScanPayload p;
  const CoordVector v(std::vector<int>(8, 1));
  p.v_dot_two_rho = scaled_inner(v, rs.positive_sum()) / 4;
  int bound = 0;
  if (p.v_dot_two_rho % 2 != 0) bound = 1;

  bool singles = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t beta = n;
    for (std::size_t b = 0; b < n && beta == n; ++b)
      if (ip(a, b) % 2 != 0) beta = b;
    if (beta == n) singles = false;
    p.single_root_beta.push_back(beta);
  }
  if (bound == 1 && singles) bound = 2;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      E7PairEntry entry{a, b, n, ip(a, b) == 0};
      for (std::size_t beta = 0; beta < n && entry.beta == n; ++beta)
        if ((ip(beta, a) - ip(beta, b)) % 2 != 0) entry.beta = beta;
      if (entry.orthogonal) ++p.orthogonal_pairs;
      if (entry.beta == n) ++p.surviving_pairs;
      p.pairs.push_back(entry);
    }
  if (bound == 2 && p.surviving_pairs == 0) bound = 3;
  return {bound, make(rs, bound, p)};
}

BoundResult balanced_lower_bound(const RootSystem& rs) {
  switch (rs.label().family) {
  case Family::A:
  case Family::B: return coordinate_parity_bound(rs);
  case Family::C:
  case Family::D: return pair_count_parity_bound(rs);
  case Family::E:
    if (rs.label().rank == 7) return e7_cocardinality_bound(rs);
    break;
  default: break;
  }
  return {0, make(rs, 0, TrivialBoundPayload{})};
}

BoundResult wellbalanced_upper_bound(const RootSystem& rs) {
  const DynkinLabel& label = rs.label();
  const auto n = static_cast<std::size_t>(label.rank);
  SOSizePayload p;
  int bound = 0;
  if (label.is_classical()) {
    const SupportAnalysis sa = analyze_supports(rs);
    if (!sa.applicable) throw Error("internal: support analysis failed for " + label.to_string());
    p.method = SOSizeMethod::SupportPacking;
    p.so_max = sa.packing_bound;
    p.attaining = classical_attaining_set(rs);
    bound = static_cast<int>(p.so_max);
    if (label.family == Family::A && n % 2 == 0) {
      p.refinement = SORefinement::EvenCoordinateParity;
      bound = 0;
    } else if (label.family == Family::B) {
      p.refinement = SORefinement::OddCoordinateParity;
      bound = static_cast<int>((n + 1) / 2);
    } else if (label.family == Family::C && (n % 4 == 2 || n % 4 == 3)) {
      p.refinement = SORefinement::LongRootExclusion;
      p.exclusion_functional.numerator.assign(rs.ambient_dim(), 1);
      p.exclusion_functional.denominator = 4;
      bound = static_cast<int>(n) - 1;
    }
  } else {
    const auto best = max_strongly_orthogonal(rs);
    p.method = SOSizeMethod::Enumeration;
    p.so_max = best.size;
    p.attaining = best.attaining;
    bound = static_cast<int>(p.so_max);
  }
  return {bound, make(rs, bound, p)};
}

} // namespace rootbalance
