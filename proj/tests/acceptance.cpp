// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rootbalance/balance.hpp"
#include "rootbalance/errors.hpp"
#include "rootbalance/extremal.hpp"
#include "rootbalance/strong_orthogonality.hpp"
#include "rootbalance/witnesses.hpp"

using namespace rootbalance;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

using Clock = std::chrono::steady_clock;

std::vector<DynkinLabel> table_labels() {
  std::vector<DynkinLabel> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 6; ++n) out.push_back({Family::D, n});
  out.push_back({Family::G, 2});
  out.push_back({Family::F, 4});
  out.push_back({Family::E, 6});
  return out;
}

Outcome table_reproduction(Quantity q) {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& l : table_labels()) {
    const RootSystem rs(l);
    const auto r = q == Quantity::MinBalancedCocardinality ? min_balanced_cocardinality(rs, SearchMode::Exhaustive)
                                                           : max_wellbalanced_cocardinality(rs, SearchMode::Exhaustive);
    const int table = q == Quantity::MinBalancedCocardinality ? thm32_value(l) : thm41_value(l);
    const bool row = r.value == table && r.lower_certificate.value == r.value && r.upper_certificate.value == r.value &&
                     verify(rs, r.lower_certificate).ok && verify(rs, r.upper_certificate).ok;
    if (!row) {
      o.ok = false;
      o.note += l.to_string() + " computed " + std::to_string(r.value) + " table " + std::to_string(table) + "; ";
    }
    ++rows;
  }
  if (o.ok) o.note = std::to_string(rows) + " labels, exhaustive, certificates verified";
  return o;
}

Outcome e7_certification() {
  const RootSystem e7({Family::E, 7});
  const auto b = e7_cocardinality_bound(e7);
  const auto& p = std::get<E7PairScanPayload>(b.certificate.payload);
  const bool singles = std::all_of(p.single_root_beta.begin(), p.single_root_beta.end(),
                                   [&](std::size_t beta) { return beta < e7.size(); });
  const auto w = thm32_witness(e7.label());
  Outcome o;
  o.ok = b.bound == 3 && p.v_dot_two_rho == 15 && singles && p.surviving_pairs == 0 && verify(e7, b.certificate).ok &&
         w.cocardinality == 3 && verify(e7, w).ok;
  std::ostringstream os;
  os << "<v,2rho>=" << p.v_dot_two_rho << ", " << p.orthogonal_pairs << " orthogonal of " << p.pairs.size()
     << " pairs separated, witness cocardinality " << w.cocardinality;
  o.note = os.str();
  return o;
}

Outcome witness_suite() {
  Outcome o;
  std::size_t n = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= 40; ++r) {
      const DynkinLabel l{f, r};
      if (!is_admissible(l)) continue;
      const RootSystem rs(l);
      const auto lo = thm32_witness(l);
      const auto hi = thm41_witness(l);
      const bool ok = verify(rs, lo).ok && verify(rs, hi).ok && hi.complement_strongly_orthogonal &&
                      lo.cocardinality == static_cast<std::size_t>(thm32_value(l)) &&
                      hi.cocardinality == static_cast<std::size_t>(thm41_value(l));
      if (!ok) {
        o.ok = false;
        o.note += l.to_string() + " ";
      }
      ++n;
    }
  if (o.ok) o.note = std::to_string(n) + " labels, both constructions";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  for (int m = 1; m <= 20; ++m)
    for (auto k : {IdentityKind::Plus, IdentityKind::Minus})
      for (auto p : {IdentityParity::Even, IdentityParity::Odd})
        if (!identity_sum(k, p, m).verifies()) o.ok = false;
  o.note = "80 identities";
  return o;
}

Outcome maximal_balanced_property() {
  Outcome o;
  std::size_t systems = 0, seeds = 0;
  for (DynkinLabel l : {DynkinLabel{Family::A, 1}, DynkinLabel{Family::A, 2}, DynkinLabel{Family::A, 3},
                        DynkinLabel{Family::B, 2}, DynkinLabel{Family::B, 3}, DynkinLabel{Family::C, 2},
                        DynkinLabel{Family::C, 3}, DynkinLabel{Family::G, 2}}) {
    const RootSystem rs(l);
    ++systems;
    std::size_t best = 0;
    std::vector<std::vector<std::size_t>> balanced;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rs.size()); ++mask) {
      auto pick = oracle::from_mask(mask, rs.size());
      if (!oracle::naive_balanced(rs, pick)) continue;
      best = std::max(best, pick.size());
      balanced.push_back(std::move(pick));
    }
    for (const auto& pick : balanced) {
      if (pick.size() == best && !oracle::naive_so_set(rs, oracle::complement_of(pick, rs.size()))) o.ok = false;
      auto s = SubsetSelection::of(rs, pick);
      auto w = *find_zero_signing(rs, s);
      std::size_t steps = 0;
      while (!strongly_orthogonal_set(rs, s.complement(rs)) && steps <= rs.size()) {
        auto next = augment_balanced(rs, s, w);
        if (next.subset.size() <= s.size() || !next.witness.is_witness(rs)) o.ok = false;
        s = std::move(next.subset);
        w = std::move(next.witness);
        ++steps;
      }
      if (steps > rs.size()) o.ok = false;
      ++seeds;
    }
  }
  o.note = std::to_string(systems) + " systems, " + std::to_string(seeds) + " balanced seeds augmented";
  return o;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(7);
  std::vector<RootSystem> systems;
  for (DynkinLabel l : {DynkinLabel{Family::A, 4}, DynkinLabel{Family::B, 3}, DynkinLabel{Family::C, 3},
                        DynkinLabel{Family::D, 4}})
    systems.emplace_back(l);
  std::size_t agree = 0, feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& rs = systems[static_cast<std::size_t>(trial) % systems.size()];
    std::vector<std::size_t> all(rs.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(12, rs.size()))(rng);
    std::vector<std::size_t> pick(all.begin(), all.begin() + static_cast<long>(k));
    std::sort(pick.begin(), pick.end());
    const auto w = find_zero_signing(rs, SubsetSelection::of(rs, pick));
    const bool naive = oracle::naive_balanced(rs, pick);
    if (w.has_value() == naive && (!w || w->is_witness(rs))) ++agree;
    feasible += naive;
  }
  Outcome o;
  o.ok = agree == 200;
  o.note = std::to_string(agree) + "/200 agree (" + std::to_string(feasible) + " feasible)";
  return o;
}

Outcome fixed_points() {
  const RootSystem e7({Family::E, 7});
  const bool rho = e7.positive_sum() == CoordVector::from_true({0, 2, 4, 6, 8, 10, -17, 17});
  const bool c5 = c5_remark_check().ok();
  bool ab = true;
  for (Family f : {Family::A, Family::B})
    for (int n = 1; n <= 40; ++n)
      if (is_admissible({f, n}) && thm32_value({f, n}) != thm41_value({f, n})) ab = false;
  Outcome o;
  o.ok = rho && c5 && ab;
  o.note = std::string("2rho(E7) ") + (rho ? "ok" : "wrong") + ", C5 inclusion-maximal set " + (c5 ? "ok" : "fails") +
           ", A/B tables " + (ab ? "agree" : "differ");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 for none
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "minimal balanced cocardinality table", 300, [] { return table_reproduction(Quantity::MinBalancedCocardinality); }},
      {2, "maximal well-balanced cocardinality table", 300,
       [] { return table_reproduction(Quantity::MaxWellBalancedCocardinality); }},
      {3, "E7 certification", 60, e7_certification},
      {4, "construction suite up to rank 40", 10, witness_suite},
      {5, "alternating identities m <= 20", 0, identity_suite},
      {6, "maximum balanced sets are well-balanced; augmentation terminates", 0, maximal_balanced_property},
      {7, "solver agrees with naive enumeration", 0, oracle_equivalence},
      {8, "fixed points: 2rho(E7), C5 inclusion-maximal set, A/B tables", 0, fixed_points},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.note += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += !o.ok;
    std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << o.note
              << "; " << std::fixed << std::setprecision(2) << secs << " s]\n";
  }
  return failures == 0 ? 0 : 1;
}
