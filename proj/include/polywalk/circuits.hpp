#ifndef POLYWALK_CIRCUITS_HPP
#define POLYWALK_CIRCUITS_HPP

#include <utility>
#include <vector>

#include "polywalk/polyhedron.hpp"

namespace polywalk {

// One canonical record per +-pair: g has coprime integer entries and first
// nonzero entry positive; image = B g.
struct Circuit {
  Vec g;
  Vec image;
};

struct NormalizedCircuit {
  Circuit circuit;
  int sign;  // orientation of the input relative to the canonical record
};

// Normalize a kernel direction of A to a canonical circuit record.
NormalizedCircuit normalize_circuit(const Polyhedron& p, const Vec& v);

// All circuits via the rank-(n-1) tight-submatrix certificate.
std::vector<Circuit> circuits_rank_method(const Polyhedron& p);

// Independent brute force via support-minimality of B g over candidate
// kernel directions; identical output contract.
std::vector<Circuit> circuits_support_oracle(const Polyhedron& p);

// Oriented circuit directions feasible at x (x + eps*g stays in P).
std::vector<Vec> feasible_circuits_at(const Polyhedron& p, const std::vector<Circuit>& circuits,
                                      const Vec& x);
std::vector<Vec> feasible_circuits_at(const Polyhedron& p, const Vec& x);

// Maximal step: y = x + alpha*g with alpha the exact ratio-test minimum.
std::pair<Vec, Rat> maximal_step(const Polyhedron& p, const Vec& x, const Vec& g);

}  // namespace polywalk

#endif
