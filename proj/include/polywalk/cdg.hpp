#ifndef POLYWALK_CDG_HPP
#define POLYWALK_CDG_HPP

#include <cstddef>
#include <vector>

#include "polywalk/families.hpp"
#include "polywalk/rational.hpp"

namespace polywalk {

// Cluster status relative to its size bounds, evaluated at the source
// clustering of a prospective move.
enum class NodeStatus { Free, Saturated, Depleted, Fixed };

struct CdgEdge {
  std::size_t from = 0;  // cluster losing the item
  std::size_t to = 0;    // cluster gaining the item
  std::size_t item = 0;
};

struct ClusteringDifferenceGraph {
  std::size_t k = 0;
  std::vector<CdgEdge> edges;
  std::vector<NodeStatus> status;  // per cluster, at y1
};

ClusteringDifferenceGraph build_cdg(const PartitionSpec& spec, const Assignment& y1,
                                    const Assignment& y2, bool fixed_size = false);

// Adjacency on the bounded partition polytope: single edge, directed path
// with no free interior node, or directed cycle with at most one free node.
bool pp_bounded_edge_test(const PartitionSpec& spec, const Assignment& y1, const Assignment& y2);

// Circuit shape on the bounded partition polytope: 0/+-1 vector, each moved
// item leaves one cluster and enters one, transfers forming a single directed
// path or cycle.
bool pp_bounded_circuit_test(const PartitionSpec& spec, const Vec& g);

// Adjacency on the fixed-size partition polytope: exactly one directed cycle.
bool pp_fixed_edge_test(const PartitionSpec& spec, const Assignment& y1, const Assignment& y2);

}  // namespace polywalk

#endif
