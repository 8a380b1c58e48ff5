#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rootbalance/strong_orthogonality.hpp"

using namespace rootbalance;

namespace {

CoordVector t(std::initializer_list<int> coords) { return CoordVector::from_true(coords); }

} // namespace

TEST_CASE("A3 strongly orthogonal pairs are the three perfect matchings") {
  const RootSystem a3({Family::A, 3});
  std::set<std::vector<std::size_t>> got;
  enumerate_strongly_orthogonal(a3, 2, 2, [&](const SubsetSelection& s) {
    got.insert(s.indices);
    return true;
  });
  auto pair = [&](std::initializer_list<int> a, std::initializer_list<int> b) {
    std::vector<std::size_t> v{a3.index_of(t(a)), a3.index_of(t(b))};
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(got == std::set<std::vector<std::size_t>>{pair({1, -1, 0, 0}, {0, 0, 1, -1}),
                                                   pair({1, 0, -1, 0}, {0, 1, 0, -1}),
                                                   pair({1, 0, 0, -1}, {0, 1, -1, 0})});
}

TEST_CASE("enumeration visits exactly the strongly orthogonal subsets once") {
  for (DynkinLabel l : {DynkinLabel{Family::A, 4}, DynkinLabel{Family::B, 3}, DynkinLabel{Family::C, 3},
                        DynkinLabel{Family::D, 4}, DynkinLabel{Family::G, 2}}) {
    CAPTURE(l.to_string());
    const RootSystem rs(l);
    std::set<std::vector<std::size_t>> expected;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rs.size()); ++mask) {
      auto s = oracle::from_mask(mask, rs.size());
      if (oracle::naive_so_set(rs, s)) expected.insert(s);
    }
    std::set<std::vector<std::size_t>> got;
    std::size_t visits = 0;
    enumerate_strongly_orthogonal(rs, 0, rs.size(), [&](const SubsetSelection& s) {
      got.insert(s.indices);
      ++visits;
      return true;
    });
    CHECK(got == expected);
    CHECK(visits == expected.size());

    const StrongOrthogonalityGraph graph(rs);
    for (std::size_t k = 0; k <= 4; ++k) {
      std::size_t n = 0;
      enumerate_strongly_orthogonal_of_size(graph, k, [&](const SubsetSelection& s) {
        CHECK(s.size() == k);
        ++n;
        return true;
      });
      CHECK(n == static_cast<std::size_t>(std::count_if(expected.begin(), expected.end(),
                                                         [k](const auto& s) { return s.size() == k; })));
    }
  }
}

TEST_CASE("visitor can stop the enumeration") {
  const RootSystem a4({Family::A, 4});
  std::size_t n = 0;
  const bool finished = enumerate_strongly_orthogonal(a4, 1, 2, [&](const SubsetSelection&) { return ++n < 3; });
  CHECK_FALSE(finished);
  CHECK(n == 3);
}

TEST_CASE("maximum strongly orthogonal size") {
  for (DynkinLabel l : {DynkinLabel{Family::A, 4}, DynkinLabel{Family::A, 5}, DynkinLabel{Family::B, 3},
                        DynkinLabel{Family::C, 3}, DynkinLabel{Family::D, 4}, DynkinLabel{Family::G, 2}}) {
    CAPTURE(l.to_string());
    const RootSystem rs(l);
    const auto best = max_strongly_orthogonal(rs);
    CHECK(best.size == oracle::naive_max_so(rs));
    CHECK(best.attaining.size() == best.size);
    CHECK(oracle::naive_so_set(rs, best.attaining.indices));
  }
  CHECK(max_strongly_orthogonal(RootSystem({Family::G, 2})).size == 2);
  CHECK(max_strongly_orthogonal(RootSystem({Family::E, 6})).size == 4);
  CHECK(max_strongly_orthogonal(RootSystem({Family::F, 4})).size == 4);
  CHECK(max_strongly_orthogonal(RootSystem({Family::E, 7})).size == 7);
  CHECK(max_strongly_orthogonal(RootSystem({Family::E, 8})).size == 8);
}

TEST_CASE("number of maximum strongly orthogonal sets in E7 and E8") {
  for (auto [rank, expected] : {std::pair{7, std::size_t{135}}, std::pair{8, std::size_t{2025}}}) {
    const StrongOrthogonalityGraph graph(RootSystem({Family::E, rank}));
    std::size_t n = 0;
    enumerate_strongly_orthogonal_of_size(graph, static_cast<std::size_t>(rank), [&](const SubsetSelection&) {
      ++n;
      return true;
    });
    CHECK(n == expected);
  }
}

TEST_CASE("the maximum attaining set is the first one in enumeration order") {
  const RootSystem d4({Family::D, 4});
  const auto best = max_strongly_orthogonal(d4);
  const StrongOrthogonalityGraph graph(d4);
  SubsetSelection first;
  enumerate_strongly_orthogonal_of_size(graph, best.size, [&](const SubsetSelection& s) {
    first = s;
    return false;
  });
  CHECK(first == best.attaining);
}
