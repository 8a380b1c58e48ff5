#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "rootbalance/certificate.hpp"
#include "rootbalance/root_system.hpp"

namespace rootbalance {

struct SolverBudget {
  std::size_t max_subset_size = 36;
  std::size_t max_table_entries = std::size_t{1} << 20;
  std::chrono::milliseconds wall_clock{std::chrono::minutes(10)};
};

/// Neither a + b nor a - b is a root. Throws IdenticalRoots for a == b.
bool strongly_orthogonal_pair(const RootSystem& rs, std::size_t a, std::size_t b);
bool strongly_orthogonal_pair(const RootSystem& rs, const RootRef& a, const RootRef& b);

bool strongly_orthogonal_set(const RootSystem& rs, const SubsetSelection& s);

/// Exact meet-in-the-middle search for signs with sum_S s_a a = 0. The first
/// root of S is fixed to +1 and the result is the lexicographically least
/// witness (+ before -) in canonical root order. nullopt means no signing
/// exists; instances beyond the budget throw BudgetExceeded.
std::optional<SignedCombination> find_zero_signing(const RootSystem& rs, const SubsetSelection& s,
                                                   const SolverBudget& budget = {});

bool is_balanced(const RootSystem& rs, const SubsetSelection& s, const SolverBudget& budget = {});

/// Balanced, and the complement R+ \ S is strongly orthogonal.
bool is_well_balanced(const RootSystem& rs, const SubsetSelection& s,
                      const SolverBudget& budget = {});

struct Augmentation {
  SubsetSelection subset;
  SignedCombination witness;
};

/// One step of the maximal-cardinality argument: given a balanced,
/// non-well-balanced S with witness, returns a strictly larger balanced set
/// built from the first non strongly orthogonal pair of the complement.
Augmentation augment_balanced(const RootSystem& rs, const SubsetSelection& s,
                              const SignedCombination& signs);

/// Certificate that S is not balanced because sum_S a lies outside twice the
/// integer lattice spanned by S. Absence of an obstruction proves nothing.
std::optional<Certificate> lattice_membership_obstruction(const RootSystem& rs,
                                                          const SubsetSelection& s);

/// Sum of phi over the subset, or nullopt when phi is not integral on it.
std::optional<long long> functional_total(const RootSystem& rs,
                                          std::span<const std::size_t> indices,
                                          const ParityFunctional& phi);

} // namespace rootbalance
