#include "rootbalance/cli.hpp"

#include <charconv>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "rootbalance/balance.hpp"
#include "rootbalance/errors.hpp"
#include "rootbalance/extremal.hpp"
#include "rootbalance/json_io.hpp"
#include "rootbalance/strong_orthogonality.hpp"
#include "rootbalance/witnesses.hpp"

namespace rootbalance {

SubsetSelection parse_subset_spec(std::string_view text, const RootSystem& rs) {
  if (text == "full") return SubsetSelection::full(rs);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw SpecParseError("expected full, indices:... or complement:...");
  const auto head = text.substr(0, colon);
  if (head != "indices" && head != "complement") throw SpecParseError("unknown subset form '" + std::string(head) + "'");
  std::vector<std::size_t> indices;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw SpecParseError("bad index '" + std::string(item) + "'");
    if (v >= rs.size())
      throw SpecParseError("index " + std::to_string(v) + " out of range for " + rs.label().to_string() + " (" +
                           std::to_string(rs.size()) + " positive roots)");
    indices.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw SpecParseError("trailing comma");
  }
  auto s = SubsetSelection::of(rs, std::move(indices));
  return head == "complement" ? s.complement(rs) : s;
}

namespace {

struct Options {
  std::string family;
  int rank = 0;
  std::string subset = "full";
  std::string table;
  std::string quantity = "both";
  std::string mode = "auto";
  bool json = false;
  bool csv = false;
  bool slow = false;
  int max_rank = 6;
  SolverBudget budget;
};

void add_label(CLI::App* cmd, Options& o) {
  cmd->add_option("family", o.family, "Root system family A-G")->required();
  cmd->add_option("rank", o.rank, "Rank")->required();
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget-size", o.budget.max_subset_size, "Largest subset for the exhaustive solver")
      ->check(CLI::Range(std::size_t{0}, std::size_t{60}));
  cmd->add_option("--budget-table", o.budget.max_table_entries, "Largest meet-in-the-middle table")
      ->check(CLI::PositiveNumber);
}

std::string signed_root(int sign, const CoordVector& v) {
  return std::string(sign > 0 ? "+ " : "- ") + "(" + v.expression() + ")";
}

void print_indices(std::ostream& out, const RootSystem& rs, const SubsetSelection& s) {
  out << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << (i ? ", " : "") << rs.root(s.indices[i]).expression();
  out << "}";
}

void print_certificate(std::ostream& out, const RootSystem& rs, const WellBalancedCertificate& wb) {
  out << "system: " << rs.label().to_string() << "\n";
  out << "subset size: " << wb.subset.size() << " of " << rs.size() << "\n";
  out << "signing:\n";
  for (const auto& t : wb.witness.terms) out << "  " << signed_root(t.sign, rs.root(t.index)) << "\n";
  out << "complement: ";
  print_indices(out, rs, wb.complement);
  out << "\ncomplement strongly orthogonal: " << std::boolalpha << wb.complement_strongly_orthogonal << "\n";
  out << "cocardinality: " << wb.cocardinality << "\n";
}

int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs(DynkinLabel::parse(o.family, o.rank));
  if (o.json) {
    out << to_json(rs).dump(2) << "\n";
    return exit_code::ok;
  }
  out << "# " << rs.label().to_string() << ": " << rs.size() << " positive roots in R^" << rs.ambient_dim() << "\n";
  for (std::size_t i = 0; i < rs.size(); ++i)
    out << std::setw(4) << i << "  " << rs.root(i).expression() << "  " << rs.root(i).to_string() << "\n";
  return exit_code::ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  const RootSystem rs(DynkinLabel::parse(o.family, o.rank));
  const auto s = parse_subset_spec(o.subset, rs);
  const auto complement = s.complement(rs);
  const bool so = strongly_orthogonal_set(rs, complement);
  std::optional<SignedCombination> witness;
  std::optional<Certificate> obstruction = lattice_membership_obstruction(rs, s);
  if (!obstruction) witness = find_zero_signing(rs, s, o.budget);
  const bool balanced = witness.has_value();

  if (o.json) {
    Json j{{"system", label_json(rs.label())},
           {"subset", to_json(rs.label(), s)},
           {"cocardinality", complement.size()},
           {"balanced", balanced},
           {"well_balanced", balanced && so},
           {"complement_strongly_orthogonal", so},
           {"witness", witness ? to_json(*witness) : Json(nullptr)},
           {"obstruction", obstruction ? to_json(*obstruction, verify(rs, *obstruction).ok) : Json(nullptr)}};
    out << j.dump(2) << "\n";
    return exit_code::ok;
  }
  out << std::boolalpha;
  out << "system: " << rs.label().to_string() << "\n";
  out << "subset size: " << s.size() << " of " << rs.size() << " (cocardinality " << complement.size() << ")\n";
  out << "balanced: " << balanced << "\n";
  if (witness) {
    out << "signing:";
    for (const auto& t : witness->terms) out << " " << signed_root(t.sign, rs.root(t.index));
    out << "\n";
  } else if (obstruction) {
    const auto& p = std::get<LatticeParityPayload>(obstruction->payload);
    out << "obstruction: lattice parity, functional (";
    for (std::size_t i = 0; i < p.functional.numerator.size(); ++i)
      out << (i ? "," : "") << p.functional.numerator[i];
    out << ")/" << p.functional.denominator << " is integral on the subset with odd total " << p.odd_total << "\n";
  } else {
    out << "obstruction: exhaustive search found no signing\n";
  }
  out << "complement strongly orthogonal: " << so << "\n";
  out << "well-balanced: " << (balanced && so) << "\n";
  return exit_code::ok;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  const DynkinLabel label = DynkinLabel::parse(o.family, o.rank);
  const RootSystem rs(label);
  const auto wb = o.table == "thm32" ? thm32_witness(label) : thm41_witness(label);
  const auto v = verify(rs, wb);
  if (o.json) {
    out << to_json(as_certificate(wb), v.ok).dump(2) << "\n";
  } else {
    print_certificate(out, rs, wb);
    out << "verified: " << std::boolalpha << v.ok << "\n";
  }
  if (!v.ok) {
    err << "verification failed: " << v.detail << "\n";
    return exit_code::verification_failure;
  }
  return exit_code::ok;
}

int cmd_extremal(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystem rs(DynkinLabel::parse(o.family, o.rank));
  const SearchMode mode = o.mode == "exhaustive" ? SearchMode::Exhaustive
                          : o.mode == "certified" ? SearchMode::Certified
                                                  : SearchMode::Auto;
  std::vector<ExtremalReport> reports;
  if (o.quantity != "max") reports.push_back(min_balanced_cocardinality(rs, mode, o.budget));
  if (o.quantity != "min") reports.push_back(max_wellbalanced_cocardinality(rs, mode, o.budget));

  bool all_ok = true;
  Json bundle = Json::array();
  for (const auto& r : reports) {
    const auto lo = verify(rs, r.lower_certificate);
    const auto hi = verify(rs, r.upper_certificate);
    const int table = r.quantity == Quantity::MinBalancedCocardinality ? thm32_value(r.label) : thm41_value(r.label);
    all_ok = all_ok && lo.ok && hi.ok;
    if (o.json) {
      bundle.push_back(to_json(r, lo.ok, hi.ok));
    } else {
      out << rs.label().to_string() << " " << to_string(r.quantity) << " = " << r.value << " (" << to_string(r.method)
          << "; table " << table << "; lower " << to_string(r.lower_certificate.kind()) << (lo.ok ? " verified" : " FAILED")
          << ", upper " << to_string(r.upper_certificate.kind()) << (hi.ok ? " verified" : " FAILED") << ")\n";
    }
    if (!lo.ok) err << "lower certificate: " << lo.detail << "\n";
    if (!hi.ok) err << "upper certificate: " << hi.detail << "\n";
  }
  if (o.json) out << bundle.dump(2) << "\n";
  return all_ok ? exit_code::ok : exit_code::verification_failure;
}

int cmd_verify_tables(const Options& o, std::ostream& out, std::ostream& err) {
  const auto report = verify_tables(o.max_rank, o.budget, o.slow);
  if (o.json)
    out << to_json(report).dump(2) << "\n";
  else
    out << to_csv(report);
  for (const auto& row : report.rows)
    if (!row.pass) err << row.label.to_string() << " " << row.quantity << ": " << row.detail << "\n";
  if (!report.ab_tables_agree) err << "A/B rows differ between the two tables\n";
  return report.all_pass() ? exit_code::ok : exit_code::verification_failure;
}

int cmd_remark_c5(const Options& o, std::ostream& out) {
  const auto r = c5_remark_check();
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << std::boolalpha;
    out << "(i)   R+ minus {e1+e5, e1-e5} balanced with " << r.spliced.witness.terms.size()
        << " terms: " << r.spliced_ok << "\n";
    out << "(ii)  R+ minus e1+e5 or e1-e5 not balanced (" << r.odd_e5_roots
        << " roots with <e5,a> = +-1): " << r.single_removals_ok << "\n";
    out << "(iii) R+ not balanced: " << r.full_set_ok << "\n";
    out << "remark holds: " << r.ok() << "\n";
  }
  return r.ok() ? exit_code::ok : exit_code::verification_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced and well-balanced subsets of positive roots"};
  app.name("rootbalance");
  app.require_subcommand(1);
  Options o;

  auto* roots = app.add_subcommand("roots", "List positive roots in canonical order");
  add_label(roots, o);
  roots->add_flag("--json", o.json, "Emit JSON");

  auto* check = app.add_subcommand("check", "Decide balanced and well-balanced for a subset");
  add_label(check, o);
  check->add_option("--subset", o.subset, "full | indices:i,j,... | complement:i,j,...");
  check->add_flag("--json", o.json, "Emit JSON");
  add_budget(check, o);

  auto* witness = app.add_subcommand("witness", "Emit an explicit construction");
  witness->add_option("table", o.table, "thm32 (minimal cocardinality) or thm41 (maximal)")
      ->required()
      ->check(CLI::IsMember({"thm32", "thm41"}));
  add_label(witness, o);
  witness->add_flag("--json", o.json, "Emit JSON");

  auto* extremal = app.add_subcommand("extremal", "Compute extremal cocardinalities with certificates");
  add_label(extremal, o);
  extremal->add_option("--quantity", o.quantity, "min | max | both")->check(CLI::IsMember({"min", "max", "both"}));
  extremal->add_option("--mode", o.mode, "auto | exhaustive | certified")
      ->check(CLI::IsMember({"auto", "exhaustive", "certified"}));
  extremal->add_flag("--json", o.json, "Emit JSON");
  add_budget(extremal, o);

  auto* tables = app.add_subcommand("verify-tables", "Reproduce both tables with verified certificates");
  tables->add_option("--max-rank", o.max_rank, "Largest classical rank")->check(CLI::Range(1, 40));
  tables->add_flag("--slow", o.slow, "Also check constructions up to rank 40");
  auto* csv = tables->add_flag("--csv", o.csv, "Emit CSV (default)");
  tables->add_flag("--json", o.json, "Emit the JSON bundle")->excludes(csv);
  add_budget(tables, o);

  auto* remark = app.add_subcommand("remark-c5", "Check the C5 inclusion-maximal balanced subset");
  remark->add_flag("--json", o.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << "run with --help for usage\n";
    return exit_code::usage;
  }

  try {
    if (roots->parsed()) return cmd_roots(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (witness->parsed()) return cmd_witness(o, out, err);
    if (extremal->parsed()) return cmd_extremal(o, out, err);
    if (tables->parsed()) return cmd_verify_tables(o, out, err);
    if (remark->parsed()) return cmd_remark_c5(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_code::budget;
  } catch (const InadmissibleRank& e) {
    err << e.what() << "\n";
    return exit_code::usage;
  } catch (const SpecParseError& e) {
    err << e.what() << "\n";
    return exit_code::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::verification_failure;
  }
  return exit_code::usage;
}

} // namespace rootbalance
