#include <doctest.h>

#include <sstream>

#include "rootbalance/cli.hpp"
#include "rootbalance/errors.hpp"
#include "rootbalance/extremal.hpp"
#include "rootbalance/json_io.hpp"

using namespace rootbalance;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void round_trip(const RootSystem& rs, const Certificate& c) {
  CAPTURE(std::string(to_string(c.kind())));
  const auto j = to_json(c);
  CHECK(j["verified"].is_null());
  const auto back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back == c);
  CHECK(verify(rs, back).ok == verify(rs, c).ok);
}

} // namespace

TEST_CASE("subset specs") {
  const RootSystem g2({Family::G, 2}), c5({Family::C, 5}), a2({Family::A, 2});
  CHECK(parse_subset_spec("full", g2).size() == 6);
  const auto long_root = c5.index_of(CoordVector::basis(5, 5, 2));
  const auto s = parse_subset_spec("complement:" + std::to_string(long_root), c5);
  CHECK(s.size() == 24);
  CHECK_FALSE(s.contains(long_root));
  CHECK(parse_subset_spec("indices:2,0", a2).indices == std::vector<std::size_t>{0, 2});
  CHECK(parse_subset_spec("indices:", a2).empty());
  CHECK_THROWS_AS(parse_subset_spec("indices:0,1,99", a2), SpecParseError);
  CHECK_THROWS_AS(parse_subset_spec("indices:0,,1", a2), SpecParseError);
  CHECK_THROWS_AS(parse_subset_spec("indices:x", a2), SpecParseError);
  CHECK_THROWS_AS(parse_subset_spec("some", a2), SpecParseError);
  CHECK_THROWS_AS(parse_subset_spec("range:1", a2), SpecParseError);
}

TEST_CASE("every certificate kind survives a JSON round trip") {
  const RootSystem a3({Family::A, 3}), c6({Family::C, 6}), d6({Family::D, 6}), e7({Family::E, 7}),
      b4({Family::B, 4}), e8({Family::E, 8});
  round_trip(a3, as_certificate(thm32_witness(a3.label())));
  round_trip(b4, coordinate_parity_bound(b4).certificate);
  round_trip(d6, pair_count_parity_bound(d6).certificate);
  round_trip(e7, e7_cocardinality_bound(e7).certificate);
  round_trip(c6, wellbalanced_upper_bound(c6).certificate);
  round_trip(a3, *lattice_membership_obstruction(a3, SubsetSelection::full(a3)));
  round_trip(a3, min_balanced_cocardinality(a3).lower_certificate);
  round_trip(a3, max_wellbalanced_cocardinality(a3).upper_certificate);
  round_trip(e8, balanced_lower_bound(e8).certificate);

  Json bad = to_json(as_certificate(thm32_witness(a3.label())));
  bad["kind"] = "Nonsense";
  CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
  bad = to_json(as_certificate(thm32_witness(a3.label())));
  bad["payload"].erase("witness");
  CHECK_THROWS_AS(certificate_from_json(bad), FormatError);
}

TEST_CASE("subset and signing JSON") {
  const RootSystem b2({Family::B, 2});
  const auto s = SubsetSelection::of(b2, {0, 3});
  const auto j = to_json(b2.label(), s);
  CHECK(j.dump() == R"({"system":{"family":"B","rank":2},"indices":[0,3]})");
  CHECK(subset_from_json(j, b2) == s);
  CHECK_THROWS_AS(subset_from_json(j, RootSystem({Family::C, 2})), FormatError);
  const auto w = thm32_witness(b2.label()).witness;
  CHECK(signed_combination_from_json(to_json(w)) == w);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({}).code == exit_code::usage);
  CHECK(cli({"roots"}).code == exit_code::usage);
  CHECK(cli({"roots", "A", "2", "--frobnicate"}).code == exit_code::usage);
  CHECK(cli({"roots", "D", "3"}).code == exit_code::usage);
  CHECK(cli({"check", "A", "2", "--subset", "indices:0,1,99"}).code == exit_code::usage);
  CHECK(cli({"witness", "thm99", "A", "2"}).code == exit_code::usage);
  CHECK(cli({"extremal", "E", "8", "--mode", "exhaustive"}).code == exit_code::budget);
  CHECK(cli({"check", "E", "8"}).code == exit_code::budget);
  CHECK(cli({"--help"}).code == exit_code::ok);
  CHECK(cli({"remark-c5"}).code == exit_code::ok);
}

TEST_CASE("cli output") {
  const auto roots = cli({"roots", "A", "2"});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("e1-e3") != std::string::npos);

  const auto check = cli({"check", "A", "3", "--subset", "full"});
  CHECK(check.code == 0);
  CHECK(check.out.find("balanced: false") != std::string::npos);
  CHECK(check.out.find("obstruction") != std::string::npos);

  const auto tables = cli({"verify-tables", "--max-rank", "3"});
  CHECK(tables.code == 0);
  CHECK(tables.out.rfind("label,quantity,table_value,computed_value,method,pass", 0) == 0);
  CHECK(tables.out.find(",false") == std::string::npos);
}

TEST_CASE("cli JSON artifacts re-parse and re-verify") {
  const RootSystem d4({Family::D, 4});
  const auto w = cli({"witness", "thm41", "D", "4", "--json"});
  REQUIRE(w.code == 0);
  const auto j = Json::parse(w.out);
  CHECK(j["verified"] == true);
  const auto cert = certificate_from_json(j);
  CHECK(verify(d4, cert).ok);
  const auto& wb = std::get<WitnessPayload>(cert.payload).certificate;
  CHECK(wb.cocardinality == 4);

  const auto ext = cli({"extremal", "B", "3", "--json"});
  REQUIRE(ext.code == 0);
  const RootSystem b3({Family::B, 3});
  for (const auto& r : Json::parse(ext.out)) {
    for (const char* side : {"lower_certificate", "upper_certificate"}) {
      CHECK(r[side]["verified"] == true);
      CHECK(verify(b3, certificate_from_json(r[side])).ok);
    }
  }

  const auto roots = cli({"roots", "E", "6", "--json"});
  CHECK(root_system_from_json(Json::parse(roots.out)).label() == DynkinLabel{Family::E, 6});

  const auto check = cli({"check", "G", "2", "--json"});
  const auto cj = Json::parse(check.out);
  CHECK(cj["balanced"] == true);
  CHECK(signed_combination_from_json(cj["witness"]).is_witness(RootSystem({Family::G, 2})));

  const auto tables = Json::parse(cli({"verify-tables", "--max-rank", "2", "--json"}).out);
  CHECK(tables["all_pass"] == true);
  for (const auto& row : tables["rows"])
    for (const auto& c : row["certificates"]) CHECK(c["verified"] == true);

  const auto remark = Json::parse(cli({"remark-c5", "--json"}).out);
  CHECK(remark["ok"] == true);
  CHECK(remark["spliced_terms"] == 23);
}
