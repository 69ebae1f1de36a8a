#ifndef POLYWALK_FAMILIES_HPP
#define POLYWALK_FAMILIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polywalk/polyhedron.hpp"

namespace polywalk {

struct TransportationSpec {
  std::vector<long long> supplies;
  std::vector<long long> demands;
};

// Bounded clustering: lower[i] <= |cluster i| <= upper[i]. The fixed-size
// case uses lower == upper.
struct PartitionSpec {
  std::size_t n_items = 0;
  std::size_t k = 0;
  std::vector<long long> lower;
  std::vector<long long> upper;
};

struct MatroidSpec {
  std::size_t ground = 0;
  std::vector<long long> rank_table;  // indexed by subset bitmask

  static MatroidSpec uniform(long long r, std::size_t ground);
  static MatroidSpec graphic(std::size_t nodes,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges);
};

Polyhedron fig2(char which);  // 'a'..'d'
Polyhedron fig3_polytope();
Polyhedron transportation(const TransportationSpec& spec);
Polyhedron partition_bounded(const PartitionSpec& spec);
Polyhedron partition_fixed(const PartitionSpec& spec);
Polyhedron matroid_polytope(const MatroidSpec& spec);

// Product of an (n-d+1)-dimensional standard simplex with d-1 unit segments,
// optionally pushed through an invertible affine map. Self-checks against the
// recognizer before returning.
Polyhedron nd_parallelotope(std::size_t n, std::size_t d,
                            const std::optional<AffineMap>& skew = std::nullopt);

// Random invertible integer map (unimodular basis, small offset).
AffineMap random_unimodular_skew(std::size_t n, unsigned seed);

// Combinatorial clustering helpers (shared with the difference-graph code).
using Assignment = std::vector<std::size_t>;  // item -> cluster index

// 0/1 vector y_ij in row-major order, cluster index outer.
Vec assignment_vector(std::size_t k, const Assignment& asg);
bool assignment_feasible(const PartitionSpec& spec, const Assignment& asg, bool fixed_size);
std::vector<Assignment> feasible_assignments(const PartitionSpec& spec, bool fixed_size);

// Vertex records of a partition polytope without generic basis enumeration:
// the vertices are exactly the feasible clustering vectors.
std::vector<Vertex> partition_vertices(const Polyhedron& p, const PartitionSpec& spec,
                                       bool fixed_size);

}  // namespace polywalk

#endif
