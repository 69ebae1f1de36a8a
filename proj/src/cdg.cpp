#include "polywalk/cdg.hpp"

#include <algorithm>

#include "polywalk/errors.hpp"

namespace polywalk {
namespace {

enum class Shape { None, Path, Cycle };

// Classify the transfer multigraph: a single directed path or single
// directed cycle through distinct clusters, anything else is None.
Shape transfer_shape(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (edges.empty()) return Shape::None;
  std::vector<std::size_t> in(k, 0), out(k, 0), comp(k);
  for (std::size_t i = 0; i < k; ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    ++out[a];
    ++in[b];
    comp[find(a)] = find(b);
  }
  std::size_t used = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (in[i] > 1 || out[i] > 1) return Shape::None;
    if (in[i] + out[i] > 0) ++used;
  }
  std::size_t root = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (in[i] + out[i] == 0) continue;
    if (root == k) root = find(i);
    if (find(i) != root) return Shape::None;  // disconnected pieces
  }
  if (edges.size() == used) return Shape::Cycle;  // all in = out = 1
  if (edges.size() + 1 == used) return Shape::Path;
  return Shape::None;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const ClusteringDifferenceGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges) out.emplace_back(e.from, e.to);
  return out;
}

}  // namespace

ClusteringDifferenceGraph build_cdg(const PartitionSpec& spec, const Assignment& y1,
                                    const Assignment& y2, bool fixed_size) {
  if (!assignment_feasible(spec, y1, fixed_size) || !assignment_feasible(spec, y2, fixed_size))
    throw invalid("InfeasibleClustering", "both clusterings must satisfy the size bounds");
  ClusteringDifferenceGraph g;
  g.k = spec.k;
  for (std::size_t j = 0; j < spec.n_items; ++j)
    if (y1[j] != y2[j]) g.edges.push_back({y1[j], y2[j], j});
  std::vector<long long> sizes(spec.k, 0);
  for (std::size_t c : y1) ++sizes[c];
  for (std::size_t i = 0; i < spec.k; ++i) {
    bool at_lower = sizes[i] == spec.lower[i];
    bool at_upper = sizes[i] == spec.upper[i];
    if (at_lower && at_upper)
      g.status.push_back(NodeStatus::Fixed);
    else if (at_upper)
      g.status.push_back(NodeStatus::Saturated);
    else if (at_lower)
      g.status.push_back(NodeStatus::Depleted);
    else
      g.status.push_back(NodeStatus::Free);
  }
  return g;
}

bool pp_bounded_edge_test(const PartitionSpec& spec, const Assignment& y1, const Assignment& y2) {
  if (y1 == y2) throw invalid("SameClustering", "adjacency needs distinct clusterings");
  ClusteringDifferenceGraph g = build_cdg(spec, y1, y2, false);
  Shape shape = transfer_shape(g.k, edge_pairs(g));
  if (shape == Shape::None) return false;
  std::vector<std::size_t> in(g.k, 0), out(g.k, 0);
  for (const auto& e : g.edges) {
    ++out[e.from];
    ++in[e.to];
  }
  if (shape == Shape::Path) {
    // interior nodes (both lose and gain an item) must not be free
    for (std::size_t i = 0; i < g.k; ++i)
      if (in[i] == 1 && out[i] == 1 && g.status[i] == NodeStatus::Free) return false;
    return true;
  }
  std::size_t free_count = 0;
  for (std::size_t i = 0; i < g.k; ++i)
    if (in[i] + out[i] > 0 && g.status[i] == NodeStatus::Free) ++free_count;
  return free_count <= 1;
}

bool pp_bounded_circuit_test(const PartitionSpec& spec, const Vec& g) {
  std::size_t k = spec.k, n = spec.n_items;
  if (g.size() != k * n) throw invalid("ShapeMismatch", "vector must have k*n entries");
  if (is_zero(g)) throw invalid("ZeroVector", "circuit candidate must be nonzero");
  std::vector<std::pair<std::size_t, std::size_t>> transfers;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t from = k, to = k, nz = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Rat& x = g[i * n + j];
      if (x == 0) continue;
      if (x == 1) {
        if (to != k) return false;
        to = i;
      } else if (x == -1) {
        if (from != k) return false;
        from = i;
      } else {
        return false;  // entry outside {0, 1, -1}
      }
      ++nz;
    }
    if (nz == 0) continue;
    if (nz != 2 || from == k || to == k) return false;  // column must sum to 0
    transfers.emplace_back(from, to);
  }
  return transfer_shape(k, transfers) != Shape::None;
}

bool pp_fixed_edge_test(const PartitionSpec& spec, const Assignment& y1, const Assignment& y2) {
  if (y1 == y2) throw invalid("SameClustering", "adjacency needs distinct clusterings");
  ClusteringDifferenceGraph g = build_cdg(spec, y1, y2, true);
  return transfer_shape(g.k, edge_pairs(g)) == Shape::Cycle;
}

}  // namespace polywalk
