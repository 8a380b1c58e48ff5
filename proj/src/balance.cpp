#include "rootbalance/balance.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "rootbalance/errors.hpp"
#include "rootbalance/strong_orthogonality.hpp"

namespace rootbalance {

// ---------------------------------------------------------------------------
// Subsets and signed combinations

SubsetSelection SubsetSelection::of(const RootSystem& rs, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= rs.size())
    throw Error("root index " + std::to_string(indices.back()) + " out of range for " +
                rs.label().to_string() + " (" + std::to_string(rs.size()) + " positive roots)");
  return SubsetSelection{std::move(indices)};
}

SubsetSelection SubsetSelection::full(const RootSystem& rs) {
  SubsetSelection s;
  s.indices.resize(rs.size());
  std::iota(s.indices.begin(), s.indices.end(), std::size_t{0});
  return s;
}

bool SubsetSelection::contains(std::size_t index) const {
  return std::binary_search(indices.begin(), indices.end(), index);
}

SubsetSelection SubsetSelection::complement(const RootSystem& rs) const {
  SubsetSelection out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    while (k < indices.size() && indices[k] < i) ++k;
    if (k < indices.size() && indices[k] == i) continue;
    out.indices.push_back(i);
  }
  return out;
}

CoordVector SignedCombination::resum(const RootSystem& rs) const {
  CoordVector acc(rs.ambient_dim());
  for (const auto& t : terms) {
    if (t.sign == 1)
      acc += rs.root(t.index);
    else
      acc -= rs.root(t.index);
  }
  return acc;
}

bool SignedCombination::is_witness(const RootSystem& rs) const {
  if (system != rs.label()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].sign != 1 && terms[i].sign != -1) return false;
    if (terms[i].index >= rs.size()) return false;
    if (i > 0 && terms[i - 1].index >= terms[i].index) return false;
  }
  return resum(rs).is_zero();
}

SubsetSelection SignedCombination::subset() const {
  SubsetSelection s;
  for (const auto& t : terms) s.indices.push_back(t.index);
  std::sort(s.indices.begin(), s.indices.end());
  return s;
}

SignedCombination SignedCombination::negated() const {
  SignedCombination out = *this;
  for (auto& t : out.terms) t.sign = -t.sign;
  return out;
}

// ---------------------------------------------------------------------------
// Strong orthogonality

bool strongly_orthogonal_pair(const RootSystem& rs, std::size_t a, std::size_t b) {
  if (a == b) throw IdenticalRoots("root " + std::to_string(a) + " paired with itself");
  const CoordVector& x = rs.root(a);
  const CoordVector& y = rs.root(b);
  return !rs.find(x + y) && !rs.find(x - y);
}

bool strongly_orthogonal_pair(const RootSystem& rs, const RootRef& a, const RootRef& b) {
  return strongly_orthogonal_pair(rs, a.index, b.index);
}

bool strongly_orthogonal_set(const RootSystem& rs, const SubsetSelection& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!strongly_orthogonal_pair(rs, s.indices[i], s.indices[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Meet-in-the-middle signing search

namespace {

// Sum_S a = 2 * sum over the negatively signed roots, so each coordinate
// total must be divisible by twice the gcd of that coordinate's entries.
bool passes_coordinate_divisibility(const RootSystem& rs, const SubsetSelection& s) {
  for (std::size_t c = 0; c < rs.ambient_dim(); ++c) {
    long long total = 0;
    long long g = 0;
    for (std::size_t idx : s.indices) {
      const int x = rs.root(idx)[c];
      total += x;
      g = std::gcd(g, static_cast<long long>(x < 0 ? -x : x));
    }
    if (g != 0 && total % (2 * g) != 0) return false;
  }
  return true;
}

// Linear hash into Z/2^64; collisions are resolved by exact re-summation.
std::vector<std::uint64_t> hash_weights(std::size_t dim) {
  std::vector<std::uint64_t> w(dim);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (auto& x : w) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    x = (z ^ (z >> 31)) | 1u;
  }
  return w;
}

std::uint64_t hash_of(const CoordVector& v, const std::vector<std::uint64_t>& w) {
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    h += static_cast<std::uint64_t>(static_cast<std::int64_t>(v[i])) * w[i];
  return h;
}

// Half of S: `count` roots starting at `first`. Bit p of a mask flips the
// sign of element first + offset + (bits - 1 - p), so increasing masks are
// lexicographically increasing sign vectors.
struct Half {
  std::size_t first = 0;
  std::size_t offset = 0;  // leading elements with fixed + sign
  std::size_t bits = 0;

  std::size_t element(unsigned p) const { return first + offset + (bits - 1 - p); }
};

std::vector<std::uint64_t> half_hashes(const std::vector<CoordVector>& roots, const Half& half,
                                       const std::vector<std::uint64_t>& w) {
  std::vector<std::uint64_t> lin(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) lin[i] = hash_of(roots[i], w);
  std::vector<std::uint64_t> out(std::size_t{1} << half.bits);
  std::uint64_t base = 0;
  for (std::size_t i = half.first; i < half.first + half.offset + half.bits; ++i) base += lin[i];
  out[0] = base;
  for (std::size_t m = 1; m < out.size(); ++m) {
    const unsigned p = static_cast<unsigned>(std::countr_zero(m));
    out[m] = out[m & (m - 1)] - 2 * lin[half.element(p)];
  }
  return out;
}

CoordVector half_sum(const std::vector<CoordVector>& roots, const Half& half, std::size_t mask,
                     std::size_t dim) {
  CoordVector acc(dim);
  for (std::size_t i = half.first; i < half.first + half.offset; ++i) acc += roots[i];
  for (unsigned p = 0; p < half.bits; ++p) {
    if (mask >> p & 1u)
      acc -= roots[half.element(p)];
    else
      acc += roots[half.element(p)];
  }
  return acc;
}

void check_clock(std::chrono::steady_clock::time_point start, const SolverBudget& budget) {
  if (std::chrono::steady_clock::now() - start > budget.wall_clock)
    throw BudgetExceeded("signing search exceeded the wall-clock budget");
}

} // namespace

std::optional<SignedCombination> find_zero_signing(const RootSystem& rs, const SubsetSelection& s,
                                                   const SolverBudget& budget) {
  const std::size_t k = s.size();
  if (k > budget.max_subset_size) {
    std::ostringstream os;
    os << "subset of size " << k << " exceeds the exhaustive budget of "
       << budget.max_subset_size;
    throw BudgetExceeded(os.str());
  }
  if (!s.empty() && s.indices.back() >= rs.size()) throw Error("subset index out of range");
  SignedCombination out{rs.label(), {}};
  if (k == 0) return out;
  if (!passes_coordinate_divisibility(rs, s)) return std::nullopt;

  const Half front{0, 1, (k + 1) / 2 - 1};
  const Half back{(k + 1) / 2, 0, k - (k + 1) / 2};
  if ((std::size_t{1} << front.bits) > budget.max_table_entries ||
      (std::size_t{1} << back.bits) > budget.max_table_entries)
    throw BudgetExceeded("meet-in-the-middle tables exceed " +
                         std::to_string(budget.max_table_entries) + " entries");

  const auto start = std::chrono::steady_clock::now();
  std::vector<CoordVector> roots;
  roots.reserve(k);
  for (std::size_t idx : s.indices) roots.push_back(rs.root(idx));
  const auto w = hash_weights(rs.ambient_dim());

  const auto front_hashes = half_hashes(roots, front, w);
  const auto back_hashes = half_hashes(roots, back, w);

  // (hash, mask) sorted: within a hash bucket masks ascend, so the first
  // exact match is the least completion.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> table(back_hashes.size());
  for (std::size_t m = 0; m < back_hashes.size(); ++m)
    table[m] = {back_hashes[m], static_cast<std::uint32_t>(m)};
  std::sort(table.begin(), table.end());
  check_clock(start, budget);

  for (std::size_t m = 0; m < front_hashes.size(); ++m) {
    if ((m & 0xfffu) == 0 && m != 0) check_clock(start, budget);
    const std::uint64_t target = std::uint64_t{0} - front_hashes[m];
    auto it = std::lower_bound(table.begin(), table.end(),
                               std::pair<std::uint64_t, std::uint32_t>{target, 0});
    if (it == table.end() || it->first != target) continue;
    const CoordVector need = -half_sum(roots, front, m, rs.ambient_dim());
    for (; it != table.end() && it->first == target; ++it) {
      if (half_sum(roots, back, it->second, rs.ambient_dim()) != need) continue;
      out.terms.reserve(k);
      out.terms.push_back({s.indices[0], 1});
      std::vector<int> signs(k, 1);
      for (unsigned p = 0; p < front.bits; ++p)
        if (m >> p & 1u) signs[front.element(p)] = -1;
      for (unsigned p = 0; p < back.bits; ++p)
        if (it->second >> p & 1u) signs[back.element(p)] = -1;
      for (std::size_t i = 1; i < k; ++i) out.terms.push_back({s.indices[i], signs[i]});
      return out;
    }
  }
  return std::nullopt;
}

bool is_balanced(const RootSystem& rs, const SubsetSelection& s, const SolverBudget& budget) {
  return find_zero_signing(rs, s, budget).has_value();
}

bool is_well_balanced(const RootSystem& rs, const SubsetSelection& s,
                      const SolverBudget& budget) {
  if (!strongly_orthogonal_set(rs, s.complement(rs))) return false;
  return is_balanced(rs, s, budget);
}

// ---------------------------------------------------------------------------
// Augmentation

Augmentation augment_balanced(const RootSystem& rs, const SubsetSelection& s,
                              const SignedCombination& signs) {
  if (signs.subset() != s || !signs.is_witness(rs))
    throw InvalidWitness("signing does not witness the given subset");

  const SubsetSelection rest = s.complement(rs);
  std::size_t b1 = 0, b2 = 0;
  bool found = false;
  for (std::size_t i = 0; i < rest.size() && !found; ++i)
    for (std::size_t j = i + 1; j < rest.size() && !found; ++j)
      if (!strongly_orthogonal_pair(rs, rest.indices[i], rest.indices[j])) {
        b1 = rest.indices[i];
        b2 = rest.indices[j];
        found = true;
      }
  if (!found) throw AlreadyWellBalanced("complement is already strongly orthogonal");

  // gamma is the positive root among b1 + b2, b1 - b2 (after ordering the
  // pair so that the difference is positive).
  bool sum_case = false;
  std::size_t gamma = 0;
  if (auto ref = rs.find(rs.root(b1) + rs.root(b2)); ref && ref->sign == 1) {
    sum_case = true;
    gamma = ref->index;
  } else {
    auto diff = rs.find(rs.root(b1) - rs.root(b2));
    if (!diff) throw Error("internal: non strongly orthogonal pair without a root");
    if (diff->sign == -1) std::swap(b1, b2);
    gamma = diff->index;
  }

  std::vector<int> sign(rs.size(), 0);
  for (const auto& t : signs.terms) sign[t.index] = t.sign;

  if (!s.contains(gamma)) {
    if (sum_case) {
      sign[b1] = 1;
      sign[b2] = 1;
      sign[gamma] = -1;
    } else {
      sign[b1] = 1;
      sign[b2] = -1;
      sign[gamma] = -1;
    }
  } else {
    const int sg = sign[gamma];
    sign[gamma] = 0;
    sign[b1] = sg;
    sign[b2] = sum_case ? sg : -sg;
  }

  Augmentation out;
  out.witness.system = rs.label();
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (sign[i] != 0) {
      out.subset.indices.push_back(i);
      out.witness.terms.push_back({i, sign[i]});
    }
  if (!out.witness.is_witness(rs)) throw Error("internal: augmented signing does not vanish");
  return out;
}

// ---------------------------------------------------------------------------

std::optional<long long> functional_total(const RootSystem& rs,
                                          std::span<const std::size_t> indices,
                                          const ParityFunctional& phi) {
  if (phi.denominator <= 0 || phi.numerator.size() != rs.ambient_dim()) return std::nullopt;
  long long total = 0;
  for (std::size_t idx : indices) {
    const CoordVector& a = rs.root(idx);
    long long dot = 0;
    for (std::size_t c = 0; c < a.dim(); ++c) dot += phi.numerator[c] * a[c];
    if (dot % phi.denominator != 0) return std::nullopt;
    total += dot / phi.denominator;
  }
  return total;
}

} // namespace rootbalance
