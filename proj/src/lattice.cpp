// Integer row echelon form over Z and the parity obstruction derived from it.
#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootbalance/balance.hpp"
#include "rootbalance/errors.hpp"

namespace rootbalance {

namespace {

using Row = std::vector<long long>;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice reduction");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in lattice reduction");
  return r;
}

void axpy(Row& target, long long q, const Row& source) {
  for (std::size_t c = 0; c < target.size(); ++c)
    target[c] = checked_sub(target[c], checked_mul(q, source[c]));
}

struct Echelon {
  std::vector<Row> rows;              // nonzero rows, strictly increasing pivots
  std::vector<std::size_t> pivots;
};

// Euclid on each column: repeatedly reduce all rows below the pivot row by
// the row of smallest nonzero absolute value.
Echelon echelon(std::vector<Row> rows, std::size_t dim) {
  Echelon out;
  std::size_t top = 0;
  for (std::size_t c = 0; c < dim && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        axpy(rows[r], rows[r][c] / rows[top][c], rows[top]);
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[top][c] < 0)
          for (auto& x : rows[top]) x = -x;
        out.rows.push_back(rows[top]);
        out.pivots.push_back(c);
        ++top;
        break;
      }
    }
  }
  return out;
}

} // namespace

std::optional<Certificate> lattice_membership_obstruction(const RootSystem& rs,
                                                          const SubsetSelection& s) {
  const std::size_t dim = rs.ambient_dim();
  std::vector<Row> rows;
  Row total(dim, 0);
  for (std::size_t idx : s.indices) {
    const CoordVector& a = rs.root(idx);
    Row r(a.doubled().begin(), a.doubled().end());
    for (std::size_t c = 0; c < dim; ++c) total[c] += r[c];
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return std::nullopt;

  const Echelon ech = echelon(rows, dim);

  // Coordinates of the total in the echelon basis; the total lies in the
  // lattice, so every division is exact.
  std::vector<long long> coeff(ech.rows.size());
  Row rest = total;
  for (std::size_t j = 0; j < ech.rows.size(); ++j) {
    const long long p = ech.rows[j][ech.pivots[j]];
    if (rest[ech.pivots[j]] % p != 0) throw Error("internal: lattice total outside its lattice");
    coeff[j] = rest[ech.pivots[j]] / p;
    axpy(rest, coeff[j], ech.rows[j]);
  }
  if (std::any_of(rest.begin(), rest.end(), [](long long x) { return x != 0; }))
    throw Error("internal: lattice total not reduced to zero");

  std::size_t odd = ech.rows.size();
  for (std::size_t j = 0; j < coeff.size(); ++j)
    if (coeff[j] % 2 != 0) {
      odd = j;
      break;
    }
  if (odd == ech.rows.size()) return std::nullopt;

  // Dual vector: <w, b_j> = [j == odd], solved by back substitution with
  // zeros on non-pivot coordinates.
  std::vector<cpp_rational> w(dim, cpp_rational(0));
  for (std::size_t j = ech.rows.size(); j-- > 0;) {
    cpp_rational rhs = (j == odd) ? 1 : 0;
    for (std::size_t c = ech.pivots[j] + 1; c < dim; ++c) rhs -= w[c] * ech.rows[j][c];
    w[ech.pivots[j]] = rhs / ech.rows[j][ech.pivots[j]];
  }
  cpp_int den = 1;
  for (const auto& x : w) den = boost::multiprecision::lcm(den, denominator(x));
  ParityFunctional phi;
  phi.denominator = den.convert_to<long long>();
  for (const auto& x : w) phi.numerator.push_back(cpp_int(numerator(x) * (den / denominator(x))).convert_to<long long>());
  long long g = phi.denominator;
  for (long long x : phi.numerator) g = std::gcd(g, x);
  if (g > 1) {
    phi.denominator /= g;
    for (auto& x : phi.numerator) x /= g;
  }

  const auto odd_total = functional_total(rs, s.indices, phi);
  if (!odd_total || *odd_total % 2 == 0) throw Error("internal: dual functional check failed");

  Certificate cert;
  cert.system = rs.label();
  cert.value = static_cast<int>(rs.size() - s.size());
  cert.payload = LatticeParityPayload{s, phi, *odd_total};
  return cert;
}

} // namespace rootbalance
