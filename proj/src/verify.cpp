// Independent re-checks of every certificate kind.
#include <algorithm>
#include <sstream>

#include "rootbalance/balance.hpp"
#include "rootbalance/errors.hpp"
#include "rootbalance/strong_orthogonality.hpp"
#include "rootbalance/witnesses.hpp"

namespace rootbalance {

namespace {

VerificationResult pass() { return {true, "ok"}; }

VerificationResult fail(const std::string& why) { return {false, why}; }

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

bool valid_subset(const RootSystem& rs, const SubsetSelection& s) {
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    if (s.indices[i] >= rs.size()) return false;
    if (i > 0 && s.indices[i - 1] >= s.indices[i]) return false;
  }
  return true;
}

bool odd_true_entry(int stored) { return (stored / 2) % 2 != 0; }

std::vector<std::size_t> odd_counts(const RootSystem& rs) {
  std::vector<std::size_t> counts(rs.ambient_dim(), 0);
  for (const auto& r : rs.positive_roots())
    for (std::size_t c = 0; c < r.dim(); ++c)
      if (odd_true_entry(r[c])) ++counts[c];
  return counts;
}

long long true_inner(const CoordVector& a, const CoordVector& b, bool& integral) {
  const long long s = scaled_inner(a, b);
  if (s % 4 != 0) integral = false;
  return s / 4;
}

VerificationResult check_witness(const RootSystem& rs, const WellBalancedCertificate& wb) {
  if (wb.system != rs.label()) return fail("system mismatch");
  if (!valid_subset(rs, wb.subset)) return fail("subset indices invalid");
  if (wb.witness.system != rs.label()) return fail("witness system mismatch");
  if (wb.witness.terms.size() != wb.subset.size()) return fail("witness does not cover the subset");
  for (std::size_t i = 0; i < wb.witness.terms.size(); ++i) {
    const auto& t = wb.witness.terms[i];
    if (t.index != wb.subset.indices[i]) return fail("witness terms differ from the subset");
    if (t.sign != 1 && t.sign != -1) return fail("witness sign not +-1");
  }
  if (!wb.witness.resum(rs).is_zero()) return fail("signed sum is " + wb.witness.resum(rs).to_string());
  if (wb.complement != wb.subset.complement(rs)) return fail("complement listing is wrong");
  if (wb.cocardinality != wb.complement.size()) return fail("cocardinality does not match the complement");
  if (wb.complement_strongly_orthogonal != strongly_orthogonal_set(rs, wb.complement))
    return fail("strong orthogonality flag is wrong");
  return pass();
}

VerificationResult check(const RootSystem& rs, int value, const CoordinateParityPayload& p) {
  if (!has_integral_coordinates(rs)) return fail("coordinate parity needs integral roots");
  const auto counts = odd_counts(rs);
  if (counts != p.odd_counts) return fail("odd counts differ");
  std::vector<std::size_t> odd;
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (counts[c] % 2 == 1) odd.push_back(c + 1);
  if (odd != p.odd_coordinates) return fail("odd coordinates differ");
  std::size_t max_odd = 0;
  for (const auto& r : rs.positive_roots()) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < r.dim(); ++c)
      if (odd_true_entry(r[c])) ++k;
    max_odd = std::max(max_odd, k);
  }
  if (max_odd != p.max_odd_entries_per_root) return fail("max odd entries per root differs");
  const std::size_t bound = odd.empty() ? 0 : (odd.size() + max_odd - 1) / max_odd;
  if (static_cast<std::size_t>(value) != bound) return fail("bound should be " + str(bound));
  return pass();
}

VerificationResult check(const RootSystem& rs, int value, const PairCountPayload& p) {
  const auto all = SubsetSelection::full(rs);
  const auto total = functional_total(rs, all.indices, p.functional);
  if (!total) return fail("functional is not integral on R+");
  if (*total != p.term_count) return fail("term count differs: " + str(*total));
  int bound = 0;
  if (*total % 2 != 0) {
    bound = 1;
    if (p.coordinate_evenness) {
      if (!has_integral_coordinates(rs)) return fail("evenness step needs integral roots");
      const auto counts = odd_counts(rs);
      if (counts != p.coordinate_counts) return fail("coordinate counts differ");
      if (std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 != 0; }))
        return fail("a coordinate count is odd");
      for (const auto& r : rs.positive_roots()) {
        const auto d = r.doubled();
        if (std::none_of(d.begin(), d.end(), odd_true_entry))
          return fail("root " + r.expression() + " has no odd coordinate");
      }
      bound = 2;
    }
  }
  if (value != bound) return fail("bound should be " + str(bound));
  return pass();
}

VerificationResult check(const RootSystem& rs, int value, const E7PairScanPayload& p) {
  const auto roots = rs.positive_roots();
  const std::size_t n = roots.size();
  bool integral = true;
  std::vector<std::vector<long long>> ip(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ip[a][b] = true_inner(roots[a], roots[b], integral);
  if (!integral) return fail("inner products between roots are not integral");
  for (std::size_t b = 0; b < n; ++b) {
    bool ok = true;
    if (true_inner(roots[b], rs.positive_sum(), ok) % 2 != 0 || !ok)
      return fail("<beta, 2rho> is not even for " + roots[b].expression());
  }

  // step (a): v has half-integer entries, integral on every root
  const CoordVector v(std::vector<int>(rs.ambient_dim(), 1));
  long long total = 0;
  for (const auto& r : roots) {
    bool ok = true;
    total += true_inner(v, r, ok);
    if (!ok) return fail("<v, alpha> not integral for " + r.expression());
  }
  if (total != p.v_dot_two_rho) return fail("<v, 2rho> is " + str(total));
  int bound = 0;
  if (total % 2 == 0) return value == 0 ? pass() : fail("bound should be 0");
  bound = 1;

  // step (b)
  bool singles = p.single_root_beta.size() == n;
  for (std::size_t a = 0; singles && a < n; ++a) {
    const std::size_t beta = p.single_root_beta[a];
    singles = beta < n && ip[beta][a] % 2 != 0;
  }
  if (singles) bound = 2;

  // step (c)
  bool all_pairs = singles && p.pairs.size() == n * (n - 1) / 2;
  std::size_t orthogonal = 0;
  std::size_t surviving = 0;
  std::size_t k = 0;
  for (std::size_t a = 0; all_pairs && a < n; ++a)
    for (std::size_t b = a + 1; all_pairs && b < n; ++b, ++k) {
      const auto& e = p.pairs[k];
      if (e.first != a || e.second != b) return fail("pair list out of canonical order");
      if (e.orthogonal != (ip[a][b] == 0)) return fail("orthogonality flag wrong");
      if (e.orthogonal) ++orthogonal;
      if (e.beta >= n) {
        ++surviving;
      } else if ((ip[e.beta][a] - ip[e.beta][b]) % 2 == 0) {
        return fail("beta does not separate pair (" + str(a) + ", " + str(b) + ")");
      }
    }
  if (all_pairs) {
    if (orthogonal != p.orthogonal_pairs || surviving != p.surviving_pairs)
      return fail("pair counters differ");
    if (surviving == 0) bound = 3;
  }
  if (value != bound) return fail("bound should be " + str(bound));
  return pass();
}

VerificationResult check(const RootSystem& rs, int value, const SOSizePayload& p) {
  if (!valid_subset(rs, p.attaining)) return fail("attaining set invalid");
  if (p.attaining.size() != p.so_max) return fail("attaining set has the wrong size");
  if (!strongly_orthogonal_set(rs, p.attaining)) return fail("attaining set is not strongly orthogonal");

  const SupportAnalysis sa = analyze_supports(rs);
  switch (p.method) {
  case SOSizeMethod::Enumeration: {
    const StrongOrthogonalityGraph graph(rs);
    bool larger = false;
    enumerate_strongly_orthogonal_of_size(graph, p.so_max + 1, [&](const SubsetSelection&) {
      larger = true;
      return false;
    });
    if (larger) return fail("a larger strongly orthogonal set exists");
    break;
  }
  case SOSizeMethod::SupportPacking:
    if (!sa.applicable) return fail("support packing premises fail");
    if (sa.packing_bound != p.so_max) return fail("packing bound is " + str(sa.packing_bound));
    break;
  }

  const std::size_t n = rs.ambient_dim();
  std::size_t bound = p.so_max;
  switch (p.refinement) {
  case SORefinement::None: break;
  case SORefinement::EvenCoordinateParity: {
    // Each coordinate: even count in R+, so even count in the complement;
    // a strongly orthogonal set meets each coordinate at most once.
    if (!has_integral_coordinates(rs) || !sa.applicable) return fail("even parity premises fail");
    if (sa.singleton_weight > 1 || sa.pair_weight > 1) return fail("a support class holds two roots");
    const auto counts = odd_counts(rs);
    if (std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 != 0; }))
      return fail("a coordinate count is odd");
    bound = 0;
    break;
  }
  case SORefinement::OddCoordinateParity: {
    // Each coordinate is met an odd number of times by the complement,
    // hence exactly once; at most one singleton support is used.
    if (!has_integral_coordinates(rs) || !sa.applicable) return fail("odd parity premises fail");
    const auto counts = odd_counts(rs);
    if (std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c % 2 == 0; }))
      return fail("a coordinate count is even");
    std::vector<std::size_t> singles;
    for (std::size_t a = 0; a < rs.size(); ++a)
      if (support(rs.root(a)).size() == 1) singles.push_back(a);
    for (std::size_t i = 0; i < singles.size(); ++i)
      for (std::size_t j = i + 1; j < singles.size(); ++j)
        if (strongly_orthogonal_pair(rs, singles[i], singles[j]))
          return fail("two singleton roots are strongly orthogonal");
    bound = (n + 1) / 2;
    break;
  }
  case SORefinement::LongRootExclusion: {
    // A complement of size n must be all support-one roots; their removal
    // leaves a set with an odd functional total.
    if (!sa.applicable || sa.singleton_weight != 1 || sa.pair_weight != 1 ||
        sa.singleton_supports != n || !sa.singleton_classes_simple || p.so_max != n)
      return fail("long root exclusion premises fail");
    std::vector<std::size_t> rest;
    for (std::size_t a = 0; a < rs.size(); ++a)
      if (support(rs.root(a)).size() != 1) rest.push_back(a);
    const auto total = functional_total(rs, rest, p.exclusion_functional);
    if (!total) return fail("exclusion functional not integral");
    if (*total % 2 == 0) return fail("exclusion functional total is even");
    bound = n - 1;
    break;
  }
  }
  if (static_cast<std::size_t>(value) != bound) return fail("bound should be " + str(bound));
  return pass();
}

VerificationResult check(const RootSystem& rs, int value, const LatticeParityPayload& p) {
  if (!valid_subset(rs, p.subset)) return fail("subset invalid");
  const auto total = functional_total(rs, p.subset.indices, p.functional);
  if (!total) return fail("functional not integral on the subset");
  if (*total != p.odd_total) return fail("functional total differs");
  if (*total % 2 == 0) return fail("functional total is even");
  if (static_cast<std::size_t>(value) != rs.size() - p.subset.size()) return fail("value is not the cocardinality");
  return pass();
}

VerificationResult check(const RootSystem& rs, int value, const ExhaustiveSearchPayload& p) {
  const StrongOrthogonalityGraph graph(rs);
  bool larger = false;
  enumerate_strongly_orthogonal_of_size(graph, p.so_max + 1, [&](const SubsetSelection&) {
    larger = true;
    return false;
  });
  if (larger) return fail("strongly orthogonal sets exceed so_max");

  std::vector<std::size_t> sizes;
  if (p.quantity == Quantity::MinBalancedCocardinality) {
    if (value < 0) return fail("negative value");
    for (std::size_t k = 0; k < static_cast<std::size_t>(value); ++k) sizes.push_back(k);
  } else {
    for (std::size_t k = static_cast<std::size_t>(value) + 1; k <= p.so_max; ++k) sizes.push_back(k);
  }
  if (p.refuted_sizes.size() != sizes.size()) return fail("refuted sizes do not cover the range");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (p.refuted_sizes[i].first != sizes[i]) return fail("refuted sizes out of order");
    std::size_t candidates = 0;
    bool refuted = true;
    enumerate_strongly_orthogonal_of_size(graph, sizes[i], [&](const SubsetSelection& c) {
      ++candidates;
      if (is_balanced(rs, c.complement(rs))) refuted = false;
      return refuted;
    });
    if (!refuted) return fail("a complement of size " + str(sizes[i]) + " is balanced");
    if (candidates != p.refuted_sizes[i].second) return fail("candidate count differs at size " + str(sizes[i]));
  }
  return pass();
}

VerificationResult check(const RootSystem&, int value, const TrivialBoundPayload&) {
  return value == 0 ? pass() : fail("trivial bound must be 0");
}

VerificationResult check(const RootSystem& rs, int value, const WitnessPayload& p) {
  auto r = check_witness(rs, p.certificate);
  if (r && static_cast<std::size_t>(value) != p.certificate.cocardinality)
    return fail("value is not the cocardinality");
  return r;
}

} // namespace

VerificationResult verify(const RootSystem& rs, const WellBalancedCertificate& cert) {
  try {
    return check_witness(rs, cert);
  } catch (const Error& e) {
    return fail(e.what());
  }
}

VerificationResult verify(const RootSystem& rs, const Certificate& cert) {
  if (cert.system != rs.label()) return fail("system mismatch");
  try {
    return std::visit([&](const auto& p) { return check(rs, cert.value, p); }, cert.payload);
  } catch (const Error& e) {
    return fail(e.what());
  }
}

} // namespace rootbalance
