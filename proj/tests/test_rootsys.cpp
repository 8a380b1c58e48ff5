#include <doctest.h>

#include <set>

#include "rootbalance/errors.hpp"
#include "rootbalance/json_io.hpp"
#include "rootbalance/root_system.hpp"

using namespace rootbalance;

namespace {

std::size_t expected_count(const DynkinLabel& l) {
  const auto n = static_cast<std::size_t>(l.rank);
  switch (l.family) {
  case Family::A: return n * (n + 1) / 2;
  case Family::B:
  case Family::C: return n * n;
  case Family::D: return n * (n - 1);
  case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

std::vector<DynkinLabel> all_labels(int max_rank) {
  std::vector<DynkinLabel> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (is_admissible({f, n})) out.push_back({f, n});
  return out;
}

CoordVector t(std::initializer_list<int> coords) { return CoordVector::from_true(coords); }

} // namespace

TEST_CASE("admissible ranks") {
  CHECK(is_admissible({Family::A, 1}));
  CHECK_FALSE(is_admissible({Family::B, 1}));
  CHECK_FALSE(is_admissible({Family::D, 3}));
  CHECK_FALSE(is_admissible({Family::E, 9}));
  CHECK_FALSE(is_admissible({Family::F, 5}));
  CHECK_THROWS_AS(RootSystem({Family::G, 3}), InadmissibleRank);
  CHECK_THROWS_AS(DynkinLabel::parse("Q", 2), InadmissibleRank);
  CHECK(DynkinLabel::parse("e", 7) == DynkinLabel{Family::E, 7});
}

TEST_CASE("positive root counts for every label up to rank 12") {
  for (const auto& l : all_labels(12)) {
    CAPTURE(l.to_string());
    CHECK(RootSystem(l).size() == expected_count(l));
  }
}

TEST_CASE("A2 and G2 roots") {
  const RootSystem a2({Family::A, 2});
  const std::set<CoordVector> got(a2.positive_roots().begin(), a2.positive_roots().end());
  CHECK(got == std::set<CoordVector>{t({1, -1, 0}), t({1, 0, -1}), t({0, 1, -1})});

  const RootSystem g2({Family::G, 2});
  REQUIRE(g2.size() == 6);
  const auto a1 = t({1, -1, 0});
  const auto a2v = t({-2, 1, 1});
  for (const auto& v : {a1, a2v, a1 + a2v, 2 * a1 + a2v, 3 * a1 + a2v, 3 * a1 + 2 * a2v})
    CHECK(g2.find(v) == RootRef{g2.index_of(v), 1});
}

TEST_CASE("E8 root shapes") {
  const RootSystem e8({Family::E, 8});
  std::size_t diff = 0, sum = 0, half = 0;
  for (const auto& r : e8.positive_roots()) {
    const auto s = support(r);
    if (s.size() == 8) {
      ++half;
      for (int x : r.doubled()) CHECK((x == 1 || x == -1));
    } else if (r[s[0] - 1] < 0) {
      ++diff;
    } else {
      ++sum;
    }
  }
  CHECK(diff == 28);
  CHECK(sum == 28);
  CHECK(half == 64);
}

TEST_CASE("entry parity per root") {
  for (const auto& l : all_labels(8)) {
    const RootSystem rs(l);
    for (const auto& r : rs.positive_roots()) {
      const auto d = r.doubled();
      const bool all_odd = std::all_of(d.begin(), d.end(), [](int x) { return x % 2 != 0; });
      const bool all_even = std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
      CHECK((all_odd || all_even));
      if (all_odd) CHECK((l.family == Family::E || l.family == Family::F));
    }
  }
}

TEST_CASE("scaled inner products") {
  CHECK(scaled_inner(t({1, -1}), t({1, 1})) == 0);
  CHECK(scaled_inner(t({1, -1}), t({1, -1})) == 8);
  const RootSystem e8({Family::E, 8});
  for (const auto& r : e8.positive_roots()) CHECK(scaled_inner(r, r) == 8);
  CHECK_THROWS_AS(scaled_inner(t({1}), t({1, 0})), DimensionMismatch);
}

TEST_CASE("membership") {
  const RootSystem a3({Family::A, 3});
  CHECK(is_root(a3, t({1, 0, -1, 0})).has_value());
  CHECK(is_root(a3, t({-1, 0, 1, 0}))->sign == -1);
  CHECK_FALSE(is_root(a3, t({1, 1, 0, 0})).has_value());
  CHECK_THROWS_AS(is_root(a3, t({1, -1})), DimensionMismatch);
  const RootSystem c3({Family::C, 3});
  CHECK(is_root(c3, t({2, 0, 0})).has_value());
  CHECK_THROWS(c3.index_of(t({1, 1, 1})));
}

TEST_CASE("R is closed under simple reflections and R+ and -R+ are disjoint") {
  for (const auto& l : all_labels(7)) {
    CAPTURE(l.to_string());
    const RootSystem rs(l);
    for (const auto& r : rs.positive_roots()) CHECK_FALSE(rs.find(-r)->sign == 1);
    for (const auto& b : rs.simple_roots()) {
      const long long bb = scaled_inner(b, b);
      for (const auto& r : rs.positive_roots()) {
        const long long num = 2 * scaled_inner(r, b);
        REQUIRE(num % bb == 0);
        const auto reflected = r - static_cast<int>(num / bb) * b;
        CHECK(is_root(rs, reflected).has_value());
      }
    }
  }
}

TEST_CASE("support") {
  CHECK(support(t({1, 0, -1})) == std::vector<std::size_t>{1, 3});
  CHECK(support(CoordVector(4)).empty());
  const RootSystem e8({Family::E, 8});
  for (const auto& r : e8.positive_roots())
    if (r[0] % 2 != 0) CHECK(support(r) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("positive sums") {
  CHECK(positive_sum(RootSystem({Family::E, 7})) == t({0, 2, 4, 6, 8, 10, -17, 17}));
  CHECK(positive_sum(RootSystem({Family::A, 1})) == t({1, -1}));
  CHECK(positive_sum(RootSystem({Family::B, 2})) == t({3, 1}));
}

TEST_CASE("simple roots pair with 2 rho to their squared length") {
  for (const auto& l : all_labels(10)) {
    CAPTURE(l.to_string());
    const RootSystem rs(l);
    CHECK(rs.simple_roots().size() == static_cast<std::size_t>(l.rank));
    for (const auto& b : rs.simple_roots()) {
      CHECK(rs.find(b)->sign == 1);
      CHECK(scaled_inner(b, rs.positive_sum()) == scaled_inner(b, b));
    }
  }
}

TEST_CASE("construction is deterministic and sorted") {
  for (const auto& l : all_labels(8)) {
    const RootSystem x(l), y(l);
    CHECK(std::equal(x.positive_roots().begin(), x.positive_roots().end(), y.positive_roots().begin(),
                     y.positive_roots().end()));
    CHECK(std::is_sorted(x.positive_roots().begin(), x.positive_roots().end()));
  }
}

TEST_CASE("B2 and C2 have the same length pattern") {
  const RootSystem b2({Family::B, 2}), c2({Family::C, 2});
  std::multiset<long long> lb, lc;
  for (const auto& r : b2.positive_roots()) lb.insert(scaled_inner(r, r));
  for (const auto& r : c2.positive_roots()) lc.insert(scaled_inner(r, r));
  CHECK(lb == std::multiset<long long>{4, 4, 8, 8});
  CHECK(lc == std::multiset<long long>{8, 8, 16, 16});
}

TEST_CASE("root system JSON round trip") {
  for (const auto& l : all_labels(9)) {
    const RootSystem rs(l);
    const auto j = to_json(rs);
    CHECK(j["scale"] == 2);
    const auto back = root_system_from_json(Json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
  }
  auto j = to_json(RootSystem({Family::A, 2}));
  j["positive_roots"][0][0] = 4;
  CHECK_THROWS_AS(root_system_from_json(j), FormatError);
}

TEST_CASE("expressions") {
  CHECK(t({1, 0, -1}).expression() == "e1-e3");
  CHECK(t({0, 0, 0, 2}).expression() == "2e4");
  CHECK(CoordVector({1, -1, 1, 1}).to_string() == "(1/2,-1/2,1/2,1/2)");
}
