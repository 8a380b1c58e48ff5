#include "rootbalance/strong_orthogonality.hpp"

#include <algorithm>

#include "rootbalance/balance.hpp"

namespace rootbalance {

using Bits = boost::dynamic_bitset<>;

StrongOrthogonalityGraph::StrongOrthogonalityGraph(const RootSystem& rs)
    : adjacency_(rs.size(), Bits(rs.size())) {
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = a + 1; b < rs.size(); ++b)
      if (strongly_orthogonal_pair(rs, a, b)) {
        adjacency_[a].set(b);
        adjacency_[b].set(a);
      }
}

namespace {

class Enumerator {
public:
  Enumerator(const StrongOrthogonalityGraph& g, std::size_t min_size, std::size_t max_size,
             const SubsetVisitor& visit)
      : g_(g), min_(min_size), max_(max_size), visit_(visit) {}

  bool run() {
    Bits all(g_.size());
    all.set();
    return descend(all);
  }

private:
  bool descend(const Bits& candidates) {
    if (current_.size() >= min_ && !visit_(current_)) return false;
    if (current_.size() == max_) return true;
    // Nothing below this node can reach min_size.
    if (current_.size() + candidates.count() < min_) return true;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      Bits next = candidates & g_.neighbors(v);
      clear_through(next, v);
      current_.indices.push_back(v);
      const bool keep_going = descend(next);
      current_.indices.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  static void clear_through(Bits& bits, std::size_t v) {
    for (auto u = bits.find_first(); u != Bits::npos && u <= v; u = bits.find_next(u)) bits.reset(u);
  }

  const StrongOrthogonalityGraph& g_;
  std::size_t min_;
  std::size_t max_;
  const SubsetVisitor& visit_;
  SubsetSelection current_;
};

class MaxClique {
public:
  explicit MaxClique(const StrongOrthogonalityGraph& g) : g_(g) {}

  std::size_t run() {
    Bits all(g_.size());
    all.set();
    std::size_t depth = 0;
    expand(all, depth);
    return best_;
  }

private:
  // Greedy colouring of P; colour classes give an upper bound on any
  // clique inside P.
  void colour(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) {
    Bits uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bits q = uncoloured;
      while (q.any()) {
        const auto v = q.find_first();
        q.reset(v);
        q -= g_.neighbors(v);
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(Bits p, std::size_t depth) {
    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + bound[i] <= best_) return;
      const auto v = order[i];
      Bits next = p & g_.neighbors(v);
      if (next.none()) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(next, depth + 1);
      }
      p.reset(v);
    }
  }

  const StrongOrthogonalityGraph& g_;
  std::size_t best_ = 0;
};

} // namespace

bool enumerate_strongly_orthogonal(const StrongOrthogonalityGraph& graph, std::size_t min_size,
                                   std::size_t max_size, const SubsetVisitor& visit) {
  if (min_size > max_size) return true;
  return Enumerator(graph, min_size, max_size, visit).run();
}

bool enumerate_strongly_orthogonal(const RootSystem& rs, std::size_t min_size,
                                   std::size_t max_size, const SubsetVisitor& visit) {
  return enumerate_strongly_orthogonal(StrongOrthogonalityGraph(rs), min_size, max_size, visit);
}

bool enumerate_strongly_orthogonal_of_size(const StrongOrthogonalityGraph& graph,
                                           std::size_t size, const SubsetVisitor& visit) {
  return enumerate_strongly_orthogonal(graph, size, size, visit);
}

MaxStronglyOrthogonal max_strongly_orthogonal(const StrongOrthogonalityGraph& graph) {
  MaxStronglyOrthogonal out;
  out.size = MaxClique(graph).run();
  enumerate_strongly_orthogonal_of_size(graph, out.size, [&](const SubsetSelection& s) {
    out.attaining = s;
    return false;
  });
  return out;
}

MaxStronglyOrthogonal max_strongly_orthogonal(const RootSystem& rs) {
  return max_strongly_orthogonal(StrongOrthogonalityGraph(rs));
}

} // namespace rootbalance
