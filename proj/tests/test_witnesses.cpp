#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rootbalance/errors.hpp"
#include "rootbalance/extremal.hpp"
#include "rootbalance/witnesses.hpp"

using namespace rootbalance;

namespace {

CoordVector t(std::initializer_list<int> coords) { return CoordVector::from_true(coords); }

std::set<CoordVector> roots_of(const RootSystem& rs, const SubsetSelection& s) {
  std::set<CoordVector> out;
  for (std::size_t i : s.indices) out.insert(rs.root(i));
  return out;
}

std::vector<DynkinLabel> labels(int max_rank) {
  std::vector<DynkinLabel> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (is_admissible({f, n})) out.push_back({f, n});
  return out;
}

} // namespace

TEST_CASE("identity sums") {
  const auto plus_odd = identity_sum(IdentityKind::Plus, IdentityParity::Odd, 1);
  CHECK(plus_odd.terms.size() == 3);
  CHECK(plus_odd.rhs == -2 * CoordVector::basis(3, 2));
  CHECK(identity_sum(IdentityKind::Minus, IdentityParity::Odd, 1).rhs.is_zero());
  const auto minus_even = identity_sum(IdentityKind::Minus, IdentityParity::Even, 1);
  REQUIRE(minus_even.terms.size() == 1);
  CHECK(minus_even.terms[0].sign == -1);
  CHECK(minus_even.rhs == t({-1, 1}));
  for (int m = 1; m <= 20; ++m)
    for (auto k : {IdentityKind::Plus, IdentityKind::Minus})
      for (auto p : {IdentityParity::Even, IdentityParity::Odd}) {
        const auto id = identity_sum(k, p, m);
        const std::size_t n = p == IdentityParity::Even ? 2 * m : 2 * m + 1;
        CHECK(id.terms.size() == n * (n - 1) / 2);
        CHECK(id.verifies());
      }
}

TEST_CASE("minimal cocardinality constructions") {
  const RootSystem a3({Family::A, 3});
  const auto w = thm32_witness(a3.label());
  CHECK(w.cocardinality == 2);
  CHECK(roots_of(a3, w.complement) == std::set<CoordVector>{t({1, -1, 0, 0}), t({0, 0, 1, -1})});

  const RootSystem e7({Family::E, 7});
  const auto w7 = thm32_witness(e7.label());
  CHECK(w7.cocardinality == 3);
  const auto e = [](std::size_t i) { return CoordVector::basis(8, i); };
  CHECK(roots_of(e7, w7.complement) == std::set<CoordVector>{e(5) + e(6), e(6) - e(5), e(8) - e(7)});

  const auto f4 = thm32_witness({Family::F, 4});
  CHECK(f4.cocardinality == 0);
  CHECK(f4.witness.terms.size() == 24);
  CHECK(f4_full_signing(RootSystem({Family::F, 4})).is_witness(RootSystem({Family::F, 4})));
  CHECK_THROWS_AS(f4_full_signing(RootSystem({Family::G, 2})), NotApplicable);
}

TEST_CASE("maximal cocardinality constructions") {
  const RootSystem d4({Family::D, 4});
  CHECK(roots_of(d4, thm41_witness(d4.label()).complement) ==
        std::set<CoordVector>{t({1, 1, 0, 0}), t({1, -1, 0, 0}), t({0, 0, 1, 1}), t({0, 0, 1, -1})});

  const RootSystem c5({Family::C, 5});
  const auto w5 = thm41_witness(c5.label());
  CHECK(w5.cocardinality == 5);
  CHECK(roots_of(c5, w5.complement) ==
        std::set<CoordVector>{t({2, 0, 0, 0, 0}), t({0, 2, 0, 0, 0}), t({0, 0, 2, 0, 0}), t({0, 0, 0, 2, 0}),
                              t({0, 0, 0, 0, 2})});

  const RootSystem c6({Family::C, 6});
  const auto w6 = thm41_witness(c6.label());
  CHECK(w6.cocardinality == 5);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(roots_of(c6, w6.complement).count(CoordVector::basis(6, i, 2)) == 1);

  const RootSystem g2({Family::G, 2});
  const auto a1 = t({1, -1, 0});
  const auto a2 = t({-2, 1, 1});
  CHECK(roots_of(g2, thm41_witness(g2.label()).complement) == std::set<CoordVector>{a2, 2 * a1 + a2});
}

TEST_CASE("constructions verify and match both tables up to rank 12") {
  for (const auto& l : labels(12)) {
    CAPTURE(l.to_string());
    const RootSystem rs(l);
    const auto lo = thm32_witness(l);
    const auto hi = thm41_witness(l);
    CHECK(verify(rs, lo).ok);
    CHECK(verify(rs, hi).ok);
    CHECK(lo.cocardinality == static_cast<std::size_t>(thm32_value(l)));
    CHECK(hi.cocardinality == static_cast<std::size_t>(thm41_value(l)));
    CHECK(hi.complement_strongly_orthogonal);
    CHECK(oracle::naive_so_set(rs, hi.complement.indices));
    CHECK(lo.witness.resum(rs).is_zero());
  }
}

TEST_CASE("lower bounds") {
  CHECK(coordinate_parity_bound(RootSystem({Family::A, 3})).bound == 2);
  CHECK(coordinate_parity_bound(RootSystem({Family::B, 3})).bound == 2);
  CHECK(coordinate_parity_bound(RootSystem({Family::A, 2})).bound == 0);
  CHECK_THROWS_AS(coordinate_parity_bound(RootSystem({Family::C, 3})), NotApplicable);

  const auto c5 = pair_count_parity_bound(RootSystem({Family::C, 5}));
  CHECK(c5.bound == 1);
  CHECK(std::get<PairCountPayload>(c5.certificate.payload).term_count == 15);
  const auto d6 = pair_count_parity_bound(RootSystem({Family::D, 6}));
  CHECK(d6.bound == 2);
  CHECK(std::get<PairCountPayload>(d6.certificate.payload).term_count == 15);
  CHECK(pair_count_parity_bound(RootSystem({Family::C, 4})).bound == 0);
  CHECK_THROWS_AS(pair_count_parity_bound(RootSystem({Family::B, 4})), NotApplicable);

  const RootSystem e7({Family::E, 7});
  const auto scan = e7_cocardinality_bound(e7);
  CHECK(scan.bound == 3);
  const auto& p = std::get<E7PairScanPayload>(scan.certificate.payload);
  CHECK(p.v_dot_two_rho == 15);
  CHECK(p.pairs.size() == 63 * 62 / 2);
  CHECK(p.surviving_pairs == 0);
  CHECK(verify(e7, scan.certificate).ok);
  CHECK_THROWS_AS(e7_cocardinality_bound(RootSystem({Family::E, 6})), NotApplicable);
}

TEST_CASE("upper bounds") {
  CHECK(wellbalanced_upper_bound(RootSystem({Family::A, 4})).bound == 0);
  CHECK(wellbalanced_upper_bound(RootSystem({Family::B, 5})).bound == 3);
  CHECK(wellbalanced_upper_bound(RootSystem({Family::C, 6})).bound == 5);
  CHECK(wellbalanced_upper_bound(RootSystem({Family::D, 5})).bound == 4);
  CHECK(wellbalanced_upper_bound(RootSystem({Family::E, 6})).bound == 4);
  const RootSystem e8({Family::E, 8});
  const auto u8 = wellbalanced_upper_bound(e8);
  CHECK(u8.bound == 8);
  CHECK(std::get<SOSizePayload>(u8.certificate.payload).method == SOSizeMethod::Enumeration);
  CHECK(verify(e8, u8.certificate).ok);
}

TEST_CASE("support analysis") {
  const auto a = analyze_supports(RootSystem({Family::A, 5}));
  CHECK(a.applicable);
  CHECK(a.packing_bound == 3);
  const auto c = analyze_supports(RootSystem({Family::C, 4}));
  CHECK(c.singleton_classes_simple);
  CHECK(c.packing_bound == 4);
  CHECK_FALSE(analyze_supports(RootSystem({Family::E, 6})).applicable);
  CHECK_FALSE(analyze_supports(RootSystem({Family::G, 2})).applicable);
}

TEST_CASE("bounds sandwich the tables and verify") {
  for (const auto& l : labels(10)) {
    CAPTURE(l.to_string());
    const RootSystem rs(l);
    const auto lb = balanced_lower_bound(rs);
    const auto ub = wellbalanced_upper_bound(rs);
    CHECK(verify(rs, lb.certificate).ok);
    CHECK(verify(rs, ub.certificate).ok);
    CHECK(lb.bound == thm32_value(l));
    CHECK(ub.bound == thm41_value(l));
  }
}

TEST_CASE("tampered certificates are rejected") {
  const RootSystem d5({Family::D, 5});
  const auto good = thm41_witness(d5.label());
  REQUIRE(verify(d5, good).ok);

  auto flipped = good;
  flipped.witness.terms[0].sign = -flipped.witness.terms[0].sign;
  CHECK_FALSE(verify(d5, flipped).ok);

  auto wrong_count = good;
  wrong_count.cocardinality += 1;
  CHECK_FALSE(verify(d5, wrong_count).ok);

  auto wrong_flag = thm32_witness({Family::A, 3});
  wrong_flag.complement_strongly_orthogonal = !wrong_flag.complement_strongly_orthogonal;
  CHECK_FALSE(verify(RootSystem({Family::A, 3}), wrong_flag).ok);

  auto cert = as_certificate(good);
  cert.value += 1;
  CHECK_FALSE(verify(d5, cert).ok);
  CHECK_FALSE(verify(RootSystem({Family::D, 6}), as_certificate(good)).ok);

  auto parity = coordinate_parity_bound(RootSystem({Family::B, 4})).certificate;
  parity.value += 1;
  CHECK_FALSE(verify(RootSystem({Family::B, 4}), parity).ok);

  auto so = wellbalanced_upper_bound(RootSystem({Family::C, 7})).certificate;
  std::get<SOSizePayload>(so.payload).so_max += 1;
  CHECK_FALSE(verify(RootSystem({Family::C, 7}), so).ok);

  auto scan = e7_cocardinality_bound(RootSystem({Family::E, 7})).certificate;
  std::get<E7PairScanPayload>(scan.payload).surviving_pairs = 1;
  CHECK_FALSE(verify(RootSystem({Family::E, 7}), scan).ok);

  Certificate trivial{d5.label(), 1, TrivialBoundPayload{}};
  CHECK_FALSE(verify(d5, trivial).ok);
}
