#pragma once

#include <cstddef>
#include <functional>

#include <boost/dynamic_bitset.hpp>

#include "rootbalance/certificate.hpp"
#include "rootbalance/root_system.hpp"

namespace rootbalance {

/// Adjacency of the "strongly orthogonal" relation on R+.
class StrongOrthogonalityGraph {
public:
  explicit StrongOrthogonalityGraph(const RootSystem& rs);

  std::size_t size() const noexcept { return adjacency_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a][b]; }
  const boost::dynamic_bitset<>& neighbors(std::size_t a) const { return adjacency_[a]; }

private:
  std::vector<boost::dynamic_bitset<>> adjacency_;
};

/// Called once per strongly orthogonal subset; return false to stop.
using SubsetVisitor = std::function<bool(const SubsetSelection&)>;

/// Backtracking over canonical index order; each strongly orthogonal subset
/// with min_size <= |C| <= max_size is visited exactly once, smaller sets
/// first within a branch. Returns false when the visitor stopped early.
bool enumerate_strongly_orthogonal(const RootSystem& rs, std::size_t min_size,
                                   std::size_t max_size, const SubsetVisitor& visit);
bool enumerate_strongly_orthogonal(const StrongOrthogonalityGraph& graph, std::size_t min_size,
                                   std::size_t max_size, const SubsetVisitor& visit);

/// Visits only subsets of exactly `size` elements.
bool enumerate_strongly_orthogonal_of_size(const StrongOrthogonalityGraph& graph,
                                           std::size_t size, const SubsetVisitor& visit);

struct MaxStronglyOrthogonal {
  std::size_t size = 0;
  SubsetSelection attaining;  // lexicographically first maximum set
};

/// Branch and bound with a greedy colouring bound.
MaxStronglyOrthogonal max_strongly_orthogonal(const StrongOrthogonalityGraph& graph);
MaxStronglyOrthogonal max_strongly_orthogonal(const RootSystem& rs);

} // namespace rootbalance
