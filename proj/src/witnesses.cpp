// Explicit balanced and well-balanced constructions, family by family.
#include "rootbalance/witnesses.hpp"

#include <algorithm>

#include "rootbalance/balance.hpp"
#include "rootbalance/errors.hpp"

namespace rootbalance {

CoordVector IdentitySum::lhs() const {
  CoordVector acc(rhs.dim());
  for (const auto& t : terms) acc += t.sign * t.vector;
  return acc;
}

namespace {

int alternating(std::size_t i, std::size_t j) { return (i + j) % 2 == 0 ? 1 : -1; }
int minus_one_pow(std::size_t i) { return i % 2 == 0 ? 1 : -1; }
bool is_excluded_pair(std::size_t i, std::size_t j) { return i % 2 == 1 && j == i + 1; }

class Terms {
public:
  explicit Terms(std::size_t dim) : dim_(dim) {}

  CoordVector e(std::size_t i, int k = 1) const { return CoordVector::basis(dim_, i, k); }
  void add(CoordVector v, int sign) { terms_.push_back({std::move(v), sign}); }
  void append(const Terms& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  }
  void remove(const CoordVector& v, int sign) {
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const FormalTerm& t) { return t.vector == v && t.sign == sign; });
    if (it == terms_.end()) throw Error("internal: term " + v.expression() + " not present");
    terms_.erase(it);
  }
  const std::vector<FormalTerm>& terms() const { return terms_; }
  std::size_t dim() const { return dim_; }

private:
  std::size_t dim_;
  std::vector<FormalTerm> terms_;
};

// Vanishing signing of the D_n-type roots e_i +- e_j on coordinates 1..n:
// all of them when n = 0, 1 mod 4, otherwise without e_{n-1} +- e_n.
Terms d_balanced(std::size_t dim, std::size_t n) {
  Terms t(dim);
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    for (std::size_t i = 1; i <= 2 * m - 1; ++i)
      for (std::size_t j = i + 1; j <= 2 * m - 1; ++j) {
        t.add(t.e(i) - t.e(j), alternating(i, j));
        t.add(t.e(i) + t.e(j), alternating(i, j));
      }
    for (std::size_t i = 1; i <= m - 1; ++i) {
      t.add(t.e(2 * i) - t.e(2 * m), 1);
      t.add(t.e(2 * i) + t.e(2 * m), 1);
    }
    for (std::size_t i = 1; i <= m; ++i) {
      t.add(t.e(2 * i - 1) - t.e(2 * m), minus_one_pow(i));
      t.add(t.e(2 * i - 1) + t.e(2 * m), -minus_one_pow(i));
    }
    // Left side equals (1 - (-1)^m) e_{2m}.
    if (m % 2 == 1) {
      t.remove(t.e(2 * m - 1) + t.e(2 * m), 1);
      t.remove(t.e(2 * m - 1) - t.e(2 * m), -1);
    }
  } else {
    const std::size_t m = n / 2;
    for (std::size_t i = 1; i <= 2 * m; ++i)
      for (std::size_t j = i + 1; j <= 2 * m; ++j) {
        t.add(t.e(i) - t.e(j), alternating(i, j));
        t.add(t.e(i) + t.e(j), alternating(i, j));
      }
    for (std::size_t i = 1; i <= m; ++i) {
      t.add(t.e(2 * i - 1) - t.e(2 * m + 1), 1);
      t.add(t.e(2 * i - 1) + t.e(2 * m + 1), 1);
    }
    for (std::size_t i = 1; i <= m; ++i) {
      t.add(t.e(2 * i) - t.e(2 * m + 1), minus_one_pow(i));
      t.add(t.e(2 * i) + t.e(2 * m + 1), -minus_one_pow(i));
    }
    if (m % 2 == 1) {
      t.remove(t.e(2 * m) + t.e(2 * m + 1), 1);
      t.remove(t.e(2 * m) - t.e(2 * m + 1), -1);
    }
  }
  return t;
}

// Vanishing signing of the D_n-type roots minus P = {e_1 +- e_2, e_3 +- e_4, ...}.
Terms d_without_pairs(std::size_t dim, std::size_t n) {
  Terms t(dim);
  const std::size_t m = n / 2;
  // For odd n the inner range runs over 1..2m; the last coordinate is the
  // only one outside P.
  const std::size_t inner = n % 2 == 0 ? 2 * m - 1 : 2 * m;
  const std::size_t last = n % 2 == 0 ? 2 * m : 2 * m + 1;
  for (std::size_t i = 1; i <= inner; ++i)
    for (std::size_t j = i + 1; j <= inner; ++j) {
      if (is_excluded_pair(i, j)) continue;
      t.add(t.e(i) - t.e(j), alternating(i, j));
      t.add(t.e(i) + t.e(j), alternating(i, j));
    }
  if (n % 2 == 0) {
    for (std::size_t i = 1; i <= 2 * m - 2; ++i) {
      t.add(t.e(i) + t.e(last), minus_one_pow(i));
      t.add(t.e(i) - t.e(last), minus_one_pow(i));
    }
  } else {
    for (std::size_t i = 1; i <= 2 * m; ++i) {
      t.add(t.e(i) + t.e(last), minus_one_pow(i));
      t.add(t.e(i) - t.e(last), -minus_one_pow(i));
    }
  }
  return t;
}

// Half-spin roots 1/2(sum_{i<=k} (-1)^nu(i) e_i + tail) with sum nu of the
// given parity, paired by nu <-> 1 - nu. Pairs are ordered by the
// representative with nu(1) = 0, read as a binary number with nu(1) most
// significant; the first half of the pairs is signed +, the rest -.
void add_half_spin_pairs(Terms& t, std::size_t k, int parity, const std::vector<int>& tail) {
  const unsigned reps = 1u << (k - 1);
  std::vector<unsigned> chosen;
  for (unsigned x = 0; x < reps; ++x)
    if (static_cast<int>(__builtin_popcount(x) % 2) == parity) chosen.push_back(x);
  auto vector_for = [&](unsigned x) {
    std::vector<int> c(t.dim(), 0);
    for (std::size_t i = 1; i <= k; ++i) c[i - 1] = (x >> (k - i)) & 1u ? -1 : 1;
    for (std::size_t i = 0; i < tail.size(); ++i) c[k + i] = tail[i];
    return CoordVector(std::move(c));
  };
  const unsigned flip = (1u << k) - 1;
  for (std::size_t p = 0; p < chosen.size(); ++p) {
    const int sign = p < chosen.size() / 2 ? 1 : -1;
    t.add(vector_for(chosen[p]), sign);
    t.add(vector_for(chosen[p] ^ flip), sign);
  }
}

void e6_half_spin(Terms& t) {
  add_half_spin_pairs(t, 4, 0, {1, -1, -1, 1});   // S+: +e5
  add_half_spin_pairs(t, 4, 1, {-1, -1, -1, 1});  // S-: -e5
}

void e7_half_spin(Terms& t) { add_half_spin_pairs(t, 6, 1, {-1, 1}); }

void e8_half_spin(Terms& t) {
  add_half_spin_pairs(t, 6, 0, {1, 1});   // S+: +e7
  add_half_spin_pairs(t, 6, 1, {-1, 1});  // S-: -e7
}

WellBalancedCertificate resolve(const RootSystem& rs, const Terms& t) {
  std::vector<int> sign(rs.size(), 0);
  for (const auto& term : t.terms()) {
    const auto ref = rs.find(term.vector);
    if (!ref) throw Error("internal: " + term.vector.expression() + " is not a root of " +
                          rs.label().to_string());
    if (sign[ref->index] != 0)
      throw Error("internal: root " + term.vector.expression() + " used twice");
    sign[ref->index] = term.sign * ref->sign;
  }
  WellBalancedCertificate out;
  out.system = rs.label();
  out.witness.system = rs.label();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (sign[i] == 0) continue;
    out.subset.indices.push_back(i);
    out.witness.terms.push_back({i, sign[i]});
  }
  out.complement = out.subset.complement(rs);
  out.cocardinality = out.complement.size();
  out.complement_strongly_orthogonal = strongly_orthogonal_set(rs, out.complement);
  if (!out.witness.is_witness(rs))
    throw Error("internal: construction for " + rs.label().to_string() + " does not vanish");
  return out;
}

Terms a_series(std::size_t n) {
  Terms t(n + 1);
  const bool odd = n % 2 == 1;
  for (std::size_t i = 1; i <= n + 1; ++i)
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      if (odd && is_excluded_pair(i, j)) continue;
      t.add(t.e(i) - t.e(j), alternating(i, j));
    }
  return t;
}

Terms b_series(std::size_t n) {
  Terms t(n);
  const bool odd = n % 2 == 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      t.add(t.e(i) + t.e(j), alternating(i, j));
      if (!is_excluded_pair(i, j)) t.add(t.e(i) - t.e(j), odd ? -alternating(i, j) : alternating(i, j));
    }
  const std::size_t shorts = odd ? n - 1 : n;
  for (std::size_t i = 1; i <= shorts; ++i) t.add(t.e(i), 1);
  return t;
}

Terms c_series_balanced(std::size_t n) {
  Terms t(n);
  const std::size_t m = n / 2;
  if (n % 2 == 0) {
    for (std::size_t i = 1; i <= 2 * m - 1; ++i)
      for (std::size_t j = i + 1; j <= 2 * m - 1; ++j) {
        t.add(t.e(i) + t.e(j), alternating(i, j));
        t.add(t.e(i) - t.e(j), alternating(i, j));
      }
    for (std::size_t i = 1; i <= 2 * m - 1; ++i) t.add(t.e(i, 2), minus_one_pow(i));
    for (std::size_t i = 1; i <= m; ++i) {
      t.add(t.e(2 * i - 1) - t.e(2 * m), 1);
      t.add(t.e(2 * i - 1) + t.e(2 * m), 1);
    }
    for (std::size_t i = 1; i <= m - 1; ++i) {
      t.add(t.e(2 * i) - t.e(2 * m), minus_one_pow(i));
      t.add(t.e(2 * i) + t.e(2 * m), -minus_one_pow(i));
    }
    // Left side equals (1 + (-1)^m) e_{2m}.
    if (m % 2 == 0) t.add(t.e(2 * m, 2), -1);
  } else {
    for (std::size_t i = 1; i <= 2 * m; ++i)
      for (std::size_t j = i + 1; j <= 2 * m; ++j) {
        t.add(t.e(i) + t.e(j), alternating(i, j));
        t.add(t.e(i) - t.e(j), alternating(i, j));
      }
    for (std::size_t i = 1; i <= 2 * m; ++i) t.add(t.e(i, 2), -minus_one_pow(i));
    for (std::size_t i = 1; i <= m; ++i) {
      t.add(t.e(2 * i) - t.e(2 * m + 1), 1);
      t.add(t.e(2 * i) + t.e(2 * m + 1), 1);
    }
    for (std::size_t i = 1; i <= m; ++i) {
      t.add(t.e(2 * i - 1) - t.e(2 * m + 1), minus_one_pow(i));
      t.add(t.e(2 * i - 1) + t.e(2 * m + 1), -minus_one_pow(i));
    }
    // Left side equals (1 + (-1)^{m+1}) e_{2m+1}.
    if (m % 2 == 1) t.add(t.e(2 * m + 1, 2), -1);
  }
  return t;
}

// Long roots 2e_1..2e_n (n = 0, 1 mod 4) or 2e_1..2e_{n-1} (n = 2, 3 mod 4)
// left out.
Terms c_series_well_balanced(std::size_t n) {
  Terms t = d_balanced(n, n);
  if (n % 4 == 2 || n % 4 == 3) {
    t.add(t.e(n - 1) + t.e(n), 1);
    t.add(t.e(n - 1) - t.e(n), -1);
    t.add(t.e(n, 2), -1);
  }
  return t;
}

Terms f4_without_pairs() {
  Terms t(4);
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
    t.add(t.e(i) - t.e(j), alternating(i, j));
    t.add(t.e(i) + t.e(j), alternating(i, j));
  }
  for (std::size_t i = 1; i <= 4; ++i) t.add(t.e(i), -1);
  // 1/2(e1 +- e2 +- e3 +- e4), signed - exactly when two signs are negative.
  for (unsigned mask = 0; mask < 8; ++mask) {
    const int minus = __builtin_popcount(mask);
    t.add(CoordVector({1, mask & 1u ? -1 : 1, mask & 2u ? -1 : 1, mask & 4u ? -1 : 1}),
          minus == 2 ? -1 : 1);
  }
  return t;
}

struct G2Basis {
  CoordVector a1 = CoordVector::from_true({1, -1, 0});
  CoordVector a2 = CoordVector::from_true({-2, 1, 1});
};

Terms g2_full() {
  const G2Basis g;
  Terms t(3);
  t.add(g.a1, 1);
  t.add(g.a1 + g.a2, 1);
  t.add(2 * g.a1 + g.a2, -1);
  t.add(g.a2, 1);
  t.add(3 * g.a1 + g.a2, 1);
  t.add(3 * g.a1 + 2 * g.a2, -1);
  return t;
}

Terms g2_four_terms() {
  const G2Basis g;
  Terms t(3);
  t.add(g.a1, 1);
  t.add(g.a1 + g.a2, -1);
  t.add(3 * g.a1 + g.a2, -1);
  t.add(3 * g.a1 + 2 * g.a2, 1);
  return t;
}

// Canonical-order signs of all 24 positive roots of F4, '+' or '-'.
constexpr std::string_view kF4Signs = "++++++++++++++---++-+---";

} // namespace

IdentitySum identity_sum(IdentityKind kind, IdentityParity parity, int m) {
  if (m < 1) throw Error("identity_sum needs m >= 1");
  const auto um = static_cast<std::size_t>(m);
  const std::size_t n = parity == IdentityParity::Even ? 2 * um : 2 * um + 1;
  IdentitySum out;
  out.rhs = CoordVector(n);
  auto e = [n](std::size_t i) { return CoordVector::basis(n, i); };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      out.terms.push_back({kind == IdentityKind::Plus ? e(i) + e(j) : e(i) - e(j), alternating(i, j)});
  if (kind == IdentityKind::Plus && parity == IdentityParity::Even)
    for (std::size_t i = 1; i <= 2 * um; ++i) out.rhs -= e(i);
  else if (kind == IdentityKind::Plus)
    for (std::size_t i = 1; i <= um; ++i) out.rhs -= 2 * e(2 * i);
  else if (parity == IdentityParity::Even)
    for (std::size_t i = 1; i <= 2 * um; ++i) out.rhs += minus_one_pow(i) * e(i);
  return out;
}

SignedCombination f4_full_signing(const RootSystem& f4) {
  if (f4.label() != DynkinLabel{Family::F, 4}) throw NotApplicable("F4 signing requested for " + f4.label().to_string());
  if (kF4Signs.size() != f4.size()) throw Error("stored F4 signing has the wrong length");
  SignedCombination out{f4.label(), {}};
  for (std::size_t i = 0; i < kF4Signs.size(); ++i) out.terms.push_back({i, kF4Signs[i] == '-' ? -1 : 1});
  if (!out.is_witness(f4)) throw InvalidWitness("stored F4 signing does not vanish");
  return out;
}

WellBalancedCertificate thm32_witness(const DynkinLabel& label) {
  const RootSystem rs(label);
  const auto n = static_cast<std::size_t>(label.rank);
  switch (label.family) {
  case Family::A: return resolve(rs, a_series(n));
  case Family::B: return resolve(rs, b_series(n));
  case Family::C: return resolve(rs, c_series_balanced(n));
  case Family::D: return resolve(rs, d_balanced(n, n));
  case Family::E: {
    if (n == 6) {
      Terms t = d_balanced(8, 5);
      e6_half_spin(t);
      return resolve(rs, t);
    }
    if (n == 7) {
      Terms t = d_balanced(8, 6);  // leaves out e5 +- e6
      e7_half_spin(t);             // -e7 + e8 stays outside
      return resolve(rs, t);
    }
    Terms t = d_balanced(8, 8);
    e8_half_spin(t);
    return resolve(rs, t);
  }
  case Family::F: {
    WellBalancedCertificate out;
    out.system = label;
    out.witness = f4_full_signing(rs);
    out.subset = out.witness.subset();
    out.complement = out.subset.complement(rs);
    out.cocardinality = out.complement.size();
    out.complement_strongly_orthogonal = true;
    return out;
  }
  case Family::G: return resolve(rs, g2_full());
  }
  throw InadmissibleRank(label.to_string());
}

WellBalancedCertificate thm41_witness(const DynkinLabel& label) {
  const RootSystem rs(label);
  const auto n = static_cast<std::size_t>(label.rank);
  switch (label.family) {
  case Family::A: return resolve(rs, a_series(n));
  case Family::B: return resolve(rs, b_series(n));
  case Family::C: return resolve(rs, c_series_well_balanced(n));
  case Family::D: return resolve(rs, d_without_pairs(n, n));
  case Family::E: {
    Terms t = d_without_pairs(8, n == 6 ? 5 : (n == 7 ? 6 : 8));
    if (n == 6) e6_half_spin(t);
    if (n == 7) e7_half_spin(t);
    if (n == 8) e8_half_spin(t);
    return resolve(rs, t);
  }
  case Family::F: return resolve(rs, f4_without_pairs());
  case Family::G: return resolve(rs, g2_four_terms());
  }
  throw InadmissibleRank(label.to_string());
}

Certificate as_certificate(const WellBalancedCertificate& wb) {
  Certificate c;
  c.system = wb.system;
  c.value = static_cast<int>(wb.cocardinality);
  c.payload = WitnessPayload{wb};
  return c;
}

} // namespace rootbalance
