#ifndef POLYWALK_POLYHEDRON_HPP
#define POLYWALK_POLYHEDRON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polywalk/linalg.hpp"
#include "polywalk/rational.hpp"

namespace polywalk {

// H-representation P = {x : Ax = b, Bx <= d}.
struct Polyhedron {
  std::size_t n = 0;
  Mat A;
  Vec b;
  Mat B;
  Vec d;
  std::string name;
};

struct Vertex {
  Vec point;
  std::vector<std::size_t> tight;  // all tight inequality rows, ascending
};

struct Face {
  std::vector<std::size_t> tight_rows;
  std::size_t dim = 0;
};

// Apex-relative cone given by extreme-ray directions, coprime-integer
// normalized and sorted lexicographically.
struct Cone {
  std::vector<Vec> generators;
};

struct ValidationReport {
  bool shape_ok = true;
  std::vector<std::string> problems;
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_rows;
  bool pointed = false;
  bool empty = false;
  bool bounded = false;
  bool bounded_known = false;
};

struct MinimalityReport {
  bool minimal = false;
  std::vector<std::size_t> redundant_rows;
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_rows;
};

// y -> offset + basis * y, embedding reduced coordinates back into R^n.
struct AffineMap {
  Mat basis;  // n x k, columns are kernel directions of A
  Vec offset;
  Vec apply(const Vec& y) const;
};

ValidationReport validate(const Polyhedron& p);

std::pair<Polyhedron, AffineMap> reduce_to_full_dimension(const Polyhedron& p);

std::vector<Vertex> enumerate_vertices(const Polyhedron& p);

bool contains(const Polyhedron& p, const Vec& x);
std::vector<std::size_t> tight_rows_at(const Polyhedron& p, const Vec& x);
// Vertex test for an arbitrary point of P.
bool is_vertex_point(const Polyhedron& p, const Vec& x);
// Build the Vertex record for a point known to be in P; throws NotAVertex.
Vertex make_vertex(const Polyhedron& p, const Vec& x);

bool are_adjacent(const Polyhedron& p, const Vertex& u, const Vertex& v);

Face minimal_face(const Polyhedron& p, const Vertex& u, const Vertex& v);

bool is_simple(const Polyhedron& p);

MinimalityReport is_minimal(const Polyhedron& p);

// Brute-force hull for dim <= 4, |V| <= 32.
Polyhedron facets_from_vertices(const std::vector<Vec>& V);

Cone inner_cone(const Polyhedron& p, const std::vector<Vertex>& verts, const Vertex& v,
                const std::optional<Face>& face = std::nullopt);
Cone inner_cone(const Polyhedron& p, const Vertex& v,
                const std::optional<Face>& face = std::nullopt);

// Stack A on top of the selected inequality rows.
Mat stack_tight(const Polyhedron& p, const std::vector<std::size_t>& rows);

}  // namespace polywalk

#endif
