#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootbalance/balance.hpp"
#include "rootbalance/certificate.hpp"
#include "rootbalance/root_system.hpp"
#include "rootbalance/witnesses.hpp"

namespace rootbalance {

/// Minimal cocardinality of a balanced subset, by n mod 4 for the
/// classical families.
int thm32_value(const DynkinLabel& label);
/// Maximal cocardinality of a well-balanced subset.
int thm41_value(const DynkinLabel& label);

enum class SearchMode { Auto, Exhaustive, Certified };
enum class ReportMethod { Exhaustive, Certified, Mixed };

std::string_view to_string(ReportMethod method);
ReportMethod report_method_from_string(std::string_view name);

struct ExtremalReport {
  DynkinLabel label;
  Quantity quantity = Quantity::MinBalancedCocardinality;
  int value = 0;
  Certificate lower_certificate;
  Certificate upper_certificate;
  ReportMethod method = ReportMethod::Exhaustive;
  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

/// Exhaustive mode tests strongly orthogonal complements by increasing size;
/// certified mode pairs the best lower bound with the explicit construction.
/// Auto picks exhaustive when |R+| fits the solver budget. When the certified
/// bounds do not meet, the loose side is searched exhaustively if possible
/// (method Mixed); otherwise BudgetExceeded.
ExtremalReport min_balanced_cocardinality(const RootSystem& rs, SearchMode mode = SearchMode::Auto,
                                          const SolverBudget& budget = {});
ExtremalReport max_wellbalanced_cocardinality(const RootSystem& rs,
                                              SearchMode mode = SearchMode::Auto,
                                              const SolverBudget& budget = {});

struct TableRow {
  DynkinLabel label;
  std::string quantity;  // "min_balanced_cocard", "max_wellbalanced_cocard" or "witness_*"
  int table_value = 0;
  int computed_value = 0;
  std::string method;
  bool pass = false;
  std::string detail;
  std::vector<Certificate> certificates;
  std::vector<bool> verified;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool ab_tables_agree = false;  // thm32 == thm41 on A and B up to rank 40
  bool all_pass() const;
};

/// Labels in canonical order: classical families by rank, then E6, E7, E8,
/// F4, G2.
std::vector<DynkinLabel> labels_up_to(int max_classical_rank);

/// Both quantities for every label up to the given classical rank plus the
/// exceptional ones, each certificate re-verified. With `slow`, explicit
/// constructions are additionally checked against the tables up to rank 40.
TableReport verify_tables(int max_classical_rank, const SolverBudget& budget = {}, bool slow = false);

/// label,quantity,table_value,computed_value,method,pass
std::string to_csv(const TableReport& report);

struct C5RemarkReport {
  WellBalancedCertificate spliced;       // R+ minus {e1 + e5, e1 - e5}
  bool spliced_ok = false;
  std::vector<Certificate> single_removals;  // e5 parity on R+ minus one of e1 +- e5
  std::size_t odd_e5_roots = 0;          // roots with <e5, alpha> = +-1
  bool single_removals_ok = false;
  Certificate full_set;                  // pair count parity on R+
  bool full_set_ok = false;
  bool ok() const { return spliced_ok && single_removals_ok && full_set_ok; }
};

/// A balanced subset of C5 that is maximal under inclusion but not of
/// minimal cocardinality.
C5RemarkReport c5_remark_check();

} // namespace rootbalance
