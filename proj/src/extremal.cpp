// Extremal cocardinalities: closed forms, searches and the table harness.
#include "rootbalance/extremal.hpp"

#include <algorithm>
#include <sstream>

#include "rootbalance/errors.hpp"
#include "rootbalance/strong_orthogonality.hpp"

namespace rootbalance {

int thm32_value(const DynkinLabel& label) {
  require_admissible(label);
  const int k = label.rank / 4;
  const int r = label.rank % 4;
  switch (label.family) {
  case Family::A: {
    const int v[4] = {0, 2 * k + 1, 0, 2 * k + 2};
    return v[r];
  }
  case Family::B: {
    const int v[4] = {2 * k, 2 * k + 1, 2 * k + 1, 2 * k + 2};
    return v[r];
  }
  case Family::C: {
    const int v[4] = {0, 1, 1, 0};
    return v[r];
  }
  case Family::D: {
    const int v[4] = {0, 0, 2, 2};
    return v[r];
  }
  case Family::E: return label.rank == 7 ? 3 : 0;
  case Family::F:
  case Family::G: return 0;
  }
  return 0;
}

int thm41_value(const DynkinLabel& label) {
  require_admissible(label);
  const int k = label.rank / 4;
  const int r = label.rank % 4;
  switch (label.family) {
  case Family::A:
  case Family::B: return thm32_value(label);
  case Family::C: {
    const int v[4] = {4 * k, 4 * k + 1, 4 * k + 1, 4 * k + 2};
    return v[r];
  }
  case Family::D: {
    const int v[4] = {4 * k, 4 * k, 4 * k + 2, 4 * k + 2};
    return v[r];
  }
  case Family::E: return label.rank == 6 ? 4 : label.rank;
  case Family::F: return 4;
  case Family::G: return 2;
  }
  return 0;
}

std::string_view to_string(ReportMethod method) {
  switch (method) {
  case ReportMethod::Exhaustive: return "exhaustive";
  case ReportMethod::Certified: return "certified";
  case ReportMethod::Mixed: return "mixed";
  }
  return "?";
}

ReportMethod report_method_from_string(std::string_view name) {
  for (auto m : {ReportMethod::Exhaustive, ReportMethod::Certified, ReportMethod::Mixed})
    if (to_string(m) == name) return m;
  throw FormatError("unknown method '" + std::string(name) + "'");
}

namespace {

struct SearchOutcome {
  int value = 0;
  Certificate search;   // ExhaustiveSearch
  Certificate witness;  // Witness
};

WellBalancedCertificate from_complement(const RootSystem& rs, const SubsetSelection& complement,
                                        SignedCombination signing) {
  WellBalancedCertificate wb;
  wb.system = rs.label();
  wb.subset = complement.complement(rs);
  wb.witness = std::move(signing);
  wb.complement = complement;
  wb.complement_strongly_orthogonal = strongly_orthogonal_set(rs, complement);
  wb.cocardinality = complement.size();
  return wb;
}

Certificate make(const RootSystem& rs, int value, CertificatePayload payload) {
  Certificate c;
  c.system = rs.label();
  c.value = value;
  c.payload = std::move(payload);
  return c;
}

void require_exhaustive(const RootSystem& rs, const SolverBudget& budget) {
  if (rs.size() > budget.max_subset_size)
    throw BudgetExceeded(rs.label().to_string() + " has " + std::to_string(rs.size()) +
                         " positive roots, beyond the exhaustive budget of " +
                         std::to_string(budget.max_subset_size));
}

// Tests every strongly orthogonal complement of the given size; returns the
// number tested, stopping at the first balanced complement.
std::size_t scan_size(const RootSystem& rs, const StrongOrthogonalityGraph& graph, std::size_t size,
                      const SolverBudget& budget, std::optional<WellBalancedCertificate>& found) {
  std::size_t candidates = 0;
  enumerate_strongly_orthogonal_of_size(graph, size, [&](const SubsetSelection& c) {
    ++candidates;
    if (auto w = find_zero_signing(rs, c.complement(rs), budget)) {
      found = from_complement(rs, c, std::move(*w));
      return false;
    }
    return true;
  });
  return candidates;
}

SearchOutcome search_min(const RootSystem& rs, const SolverBudget& budget) {
  require_exhaustive(rs, budget);
  const StrongOrthogonalityGraph graph(rs);
  ExhaustiveSearchPayload p;
  p.quantity = Quantity::MinBalancedCocardinality;
  p.so_max = max_strongly_orthogonal(graph).size;
  for (std::size_t k = 0; k <= p.so_max; ++k) {
    std::optional<WellBalancedCertificate> found;
    const std::size_t candidates = scan_size(rs, graph, k, budget, found);
    if (found) {
      const int v = static_cast<int>(k);
      return {v, make(rs, v, p), as_certificate(*found)};
    }
    p.refuted_sizes.emplace_back(k, candidates);
  }
  throw Error("internal: no balanced subset with strongly orthogonal complement in " +
              rs.label().to_string());
}

SearchOutcome search_max(const RootSystem& rs, const SolverBudget& budget) {
  require_exhaustive(rs, budget);
  const StrongOrthogonalityGraph graph(rs);
  ExhaustiveSearchPayload p;
  p.quantity = Quantity::MaxWellBalancedCocardinality;
  p.so_max = max_strongly_orthogonal(graph).size;
  for (std::size_t k = p.so_max + 1; k-- > 0;) {
    std::optional<WellBalancedCertificate> found;
    const std::size_t candidates = scan_size(rs, graph, k, budget, found);
    if (found) {
      std::reverse(p.refuted_sizes.begin(), p.refuted_sizes.end());
      const int v = static_cast<int>(k);
      return {v, make(rs, v, p), as_certificate(*found)};
    }
    p.refuted_sizes.emplace_back(k, candidates);
  }
  throw Error("internal: no well-balanced subset in " + rs.label().to_string());
}

} // namespace

ExtremalReport min_balanced_cocardinality(const RootSystem& rs, SearchMode mode,
                                          const SolverBudget& budget) {
  ExtremalReport r;
  r.label = rs.label();
  r.quantity = Quantity::MinBalancedCocardinality;
  const bool fits = rs.size() <= budget.max_subset_size;
  if (mode == SearchMode::Exhaustive || (mode == SearchMode::Auto && fits)) {
    auto s = search_min(rs, budget);
    r.value = s.value;
    r.lower_certificate = std::move(s.search);
    r.upper_certificate = std::move(s.witness);
    r.method = ReportMethod::Exhaustive;
    return r;
  }
  auto lb = balanced_lower_bound(rs);
  const auto wb = thm32_witness(rs.label());
  r.value = static_cast<int>(wb.cocardinality);
  r.upper_certificate = as_certificate(wb);
  r.method = ReportMethod::Certified;
  if (lb.bound != r.value) {
    if (!fits)
      throw BudgetExceeded("lower bound " + std::to_string(lb.bound) + " does not meet the construction " +
                           std::to_string(r.value) + " and exhaustive search is out of budget");
    auto s = search_min(rs, budget);
    r.value = s.value;
    r.upper_certificate = std::move(s.witness);
    lb.certificate = std::move(s.search);
    r.method = ReportMethod::Mixed;
  }
  r.lower_certificate = std::move(lb.certificate);
  return r;
}

ExtremalReport max_wellbalanced_cocardinality(const RootSystem& rs, SearchMode mode,
                                              const SolverBudget& budget) {
  ExtremalReport r;
  r.label = rs.label();
  r.quantity = Quantity::MaxWellBalancedCocardinality;
  const bool fits = rs.size() <= budget.max_subset_size;
  if (mode == SearchMode::Exhaustive || (mode == SearchMode::Auto && fits)) {
    auto s = search_max(rs, budget);
    r.value = s.value;
    r.lower_certificate = std::move(s.witness);
    r.upper_certificate = std::move(s.search);
    r.method = ReportMethod::Exhaustive;
    return r;
  }
  auto ub = wellbalanced_upper_bound(rs);
  const auto wb = thm41_witness(rs.label());
  if (!wb.complement_strongly_orthogonal)
    throw Error("internal: construction for " + rs.label().to_string() + " is not well-balanced");
  r.value = static_cast<int>(wb.cocardinality);
  r.lower_certificate = as_certificate(wb);
  r.method = ReportMethod::Certified;
  if (ub.bound != r.value) {
    if (!fits)
      throw BudgetExceeded("upper bound " + std::to_string(ub.bound) + " does not meet the construction " +
                           std::to_string(r.value) + " and exhaustive search is out of budget");
    auto s = search_max(rs, budget);
    r.value = s.value;
    r.lower_certificate = std::move(s.witness);
    ub.certificate = std::move(s.search);
    r.method = ReportMethod::Mixed;
  }
  r.upper_certificate = std::move(ub.certificate);
  return r;
}

bool TableReport::all_pass() const {
  return ab_tables_agree && std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.pass; });
}

std::vector<DynkinLabel> labels_up_to(int max_classical_rank) {
  std::vector<DynkinLabel> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 1; n <= max_classical_rank; ++n)
      if (is_admissible({f, n})) out.push_back({f, n});
  out.push_back({Family::E, 6});
  out.push_back({Family::E, 7});
  out.push_back({Family::E, 8});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

namespace {

TableRow report_row(const RootSystem& rs, Quantity q, const SolverBudget& budget) {
  TableRow row;
  row.label = rs.label();
  row.quantity = std::string(to_string(q));
  row.table_value = q == Quantity::MinBalancedCocardinality ? thm32_value(rs.label()) : thm41_value(rs.label());
  try {
    const auto r = q == Quantity::MinBalancedCocardinality ? min_balanced_cocardinality(rs, SearchMode::Auto, budget)
                                                           : max_wellbalanced_cocardinality(rs, SearchMode::Auto, budget);
    row.computed_value = r.value;
    row.method = std::string(to_string(r.method));
    row.certificates = {r.lower_certificate, r.upper_certificate};
    bool verified = true;
    for (const auto& c : row.certificates) {
      const auto v = verify(rs, c);
      row.verified.push_back(v.ok);
      if (!v.ok) {
        verified = false;
        row.detail += std::string(to_string(c.kind())) + ": " + v.detail + "; ";
      }
    }
    const bool agree = r.lower_certificate.value == r.value && r.upper_certificate.value == r.value;
    if (!agree) row.detail += "certificates disagree on the value; ";
    row.pass = verified && agree && r.value == row.table_value;
  } catch (const Error& e) {
    row.method = "error";
    row.detail = e.what();
  }
  return row;
}

TableRow witness_row(const RootSystem& rs, Quantity q) {
  TableRow row;
  row.label = rs.label();
  const bool min = q == Quantity::MinBalancedCocardinality;
  row.quantity = "witness_" + std::string(to_string(q));
  row.table_value = min ? thm32_value(rs.label()) : thm41_value(rs.label());
  row.method = "witness";
  try {
    const auto wb = min ? thm32_witness(rs.label()) : thm41_witness(rs.label());
    row.computed_value = static_cast<int>(wb.cocardinality);
    row.certificates = {as_certificate(wb)};
    const auto v = verify(rs, wb);
    row.verified = {v.ok};
    row.detail = v.ok ? "" : v.detail;
    row.pass = v.ok && row.computed_value == row.table_value && (min || wb.complement_strongly_orthogonal);
  } catch (const Error& e) {
    row.method = "error";
    row.detail = e.what();
  }
  return row;
}

} // namespace

TableReport verify_tables(int max_classical_rank, const SolverBudget& budget, bool slow) {
  TableReport report;
  for (const auto& label : labels_up_to(max_classical_rank)) {
    const RootSystem rs(label);
    report.rows.push_back(report_row(rs, Quantity::MinBalancedCocardinality, budget));
    report.rows.push_back(report_row(rs, Quantity::MaxWellBalancedCocardinality, budget));
  }
  if (slow) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
      for (int n = max_classical_rank + 1; n <= 40; ++n) {
        if (!is_admissible({f, n})) continue;
        const RootSystem rs({f, n});
        report.rows.push_back(witness_row(rs, Quantity::MinBalancedCocardinality));
        report.rows.push_back(witness_row(rs, Quantity::MaxWellBalancedCocardinality));
      }
  }
  report.ab_tables_agree = true;
  for (Family f : {Family::A, Family::B})
    for (int n = 1; n <= 40; ++n)
      if (is_admissible({f, n}) && thm32_value({f, n}) != thm41_value({f, n})) report.ab_tables_agree = false;
  return report;
}

std::string to_csv(const TableReport& report) {
  std::ostringstream os;
  os << "label,quantity,table_value,computed_value,method,pass\n";
  for (const auto& r : report.rows)
    os << r.label.to_string() << ',' << r.quantity << ',' << r.table_value << ',' << r.computed_value << ','
       << r.method << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

C5RemarkReport c5_remark_check() {
  const RootSystem rs({Family::C, 5});
  const std::size_t d = rs.ambient_dim();
  const auto e = [d](std::size_t i, int k = 1) { return CoordVector::basis(d, i, k); };
  const std::size_t minus = rs.index_of(e(1) - e(5));
  const std::size_t plus = rs.index_of(e(1) + e(5));
  const std::size_t long_root = rs.index_of(e(5, 2));
  C5RemarkReport out;

  // (i) replace -(e1 - e5) + (e1 + e5) by 2e5 in the cocardinality-one signing
  auto base = thm32_witness(rs.label()).witness;
  auto sign_of = [&](const SignedCombination& s, std::size_t idx) {
    for (const auto& t : s.terms)
      if (t.index == idx) return t.sign;
    return 0;
  };
  if (sign_of(base, minus) == 1) base = base.negated();
  if (sign_of(base, minus) == -1 && sign_of(base, plus) == 1 && sign_of(base, long_root) == 0) {
    SignedCombination spliced{rs.label(), {}};
    for (const auto& t : base.terms)
      if (t.index != minus && t.index != plus) spliced.terms.push_back(t);
    spliced.terms.push_back({long_root, 1});
    std::sort(spliced.terms.begin(), spliced.terms.end(),
              [](const SignedTerm& a, const SignedTerm& b) { return a.index < b.index; });
    out.spliced = from_complement(rs, SubsetSelection::of(rs, {minus, plus}), spliced);
    out.spliced_ok = verify(rs, out.spliced).ok && out.spliced.witness.terms.size() == rs.size() - 2;
  }

  // (ii) <e5, .> is integral on R+ and odd on both single removals
  ParityFunctional e5{std::vector<long long>(d, 0), 2};
  e5.numerator[4] = 1;
  for (const auto& r : rs.positive_roots())
    if (r[4] == 2 || r[4] == -2) ++out.odd_e5_roots;
  out.single_removals_ok = true;
  for (std::size_t removed : {plus, minus}) {
    LatticeParityPayload p;
    p.subset = SubsetSelection::of(rs, {removed}).complement(rs);
    p.functional = e5;
    p.odd_total = functional_total(rs, p.subset.indices, e5).value_or(0);
    auto c = make(rs, 1, p);
    out.single_removals_ok = out.single_removals_ok && verify(rs, c).ok;
    out.single_removals.push_back(std::move(c));
  }

  // (iii)
  const auto full = pair_count_parity_bound(rs);
  out.full_set = full.certificate;
  out.full_set_ok = full.bound >= 1 && verify(rs, full.certificate).ok;
  return out;
}

} // namespace rootbalance
