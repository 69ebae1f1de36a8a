#ifndef POLYWALK_ECW_HPP
#define POLYWALK_ECW_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polywalk/polyhedron.hpp"

namespace polywalk {

struct ElementaryConeResult {
  bool holds = false;
  // On failure: the vertex whose inner cone is split, and the splitting row.
  std::optional<Vec> witness_vertex;
  std::optional<std::size_t> witness_row;
};

struct SymmetricConeResult {
  bool holds = false;
  std::optional<std::pair<Vec, Vec>> witness_pair;  // offending vertex pair
};

struct VertexFaceCertificate {
  Vec vertex;
  std::vector<std::size_t> face_rows;  // tight rows cutting out the face
  std::vector<Vec> face_vertices;
};

struct RecognitionResult {
  bool is_ndp = false;
  std::size_t d = 0;
  std::vector<VertexFaceCertificate> certificates;
  std::string failure;
  std::optional<std::pair<Vec, Vec>> witness_pair;
};

// No row of B may separate the generators of any vertex's inner cone.
ElementaryConeResult elementary_cone_condition(const Polyhedron& p);

// For every vertex pair u, v: the inner cone of u within their minimal face
// is the negation of the inner cone of v within that face.
SymmetricConeResult symmetric_inner_cone_condition(const Polyhedron& p);

RecognitionResult recognize_nd_parallelotope(const Polyhedron& p);

// Full-dimensional cells of the central arrangement {B_i x = 0}, as extreme
// ray lists; <= 12 distinct hyperplanes.
std::vector<Cone> elementary_cones_enumerate(const Polyhedron& p);

}  // namespace polywalk

#endif
