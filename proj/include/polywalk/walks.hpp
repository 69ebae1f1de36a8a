#ifndef POLYWALK_WALKS_HPP
#define POLYWALK_WALKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "polywalk/circuits.hpp"
#include "polywalk/polyhedron.hpp"

namespace polywalk {

struct WalkStep {
  Vec direction;  // oriented circuit direction actually taken
  Rat alpha;
};

struct CircuitWalk {
  std::vector<Vec> points;     // k+1 points, points[0] = start
  std::vector<WalkStep> steps;  // k steps; points[i+1] = points[i] + alpha*dir
};

enum class Level { GCW, ICW, VCW, ECW, Unknown };
std::string level_name(Level level);

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Vec direction;
  Rat alpha;
};

struct StepGraph {
  std::vector<Vec> points;  // BFS insertion order; vertices of P come first
  std::size_t n_vertices = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;  // node -> arc indices
  bool complete = false;                       // closure reached within budget
  std::optional<std::size_t> noninteger_node;  // set under stop_on_noninteger
};

struct StepGraphOptions {
  bool stop_on_noninteger = false;
  std::size_t max_points = 50000;
};

StepGraph reachable_step_graph(const Polyhedron& p, const std::vector<Circuit>& circuits,
                               const StepGraphOptions& opt = {});
StepGraph reachable_step_graph(const Polyhedron& p, const StepGraphOptions& opt = {});

// Apply the given oriented circuit directions in order, taking maximal steps.
CircuitWalk walk(const Polyhedron& p, const Vec& start, const std::vector<Vec>& directives);

// Adjacency-greedy rule: at each point pick the feasible circuit step whose
// endpoint is exactly-closest to target (squared Euclidean, lex tiebreak).
CircuitWalk greedy_walk(const Polyhedron& p, const std::vector<Circuit>& circuits,
                        const Vec& start, const Vec& target, std::size_t max_steps = 1000);

struct Classification {
  Level level = Level::Unknown;
  // GCW: walk reaching a non-integral point; ICW: walk to an integral
  // non-vertex; VCW: single step to a non-adjacent vertex.
  std::optional<CircuitWalk> witness_walk;
  std::optional<Vec> witness_point;
  std::string detail;
};

Classification classify_hierarchy(const Polyhedron& p, std::size_t budget_points = 50000);
// Overload for callers that already hold the vertex list (e.g. combinatorial
// enumerations much cheaper than the generic basis-subset route).
Classification classify_hierarchy(const Polyhedron& p, const std::vector<Vertex>& verts,
                                  std::size_t budget_points = 50000);
// Circuits depend only on (A, B); suites over many right-hand sides can
// compute them once and pass them in.
Classification classify_hierarchy(const Polyhedron& p, const std::vector<Vertex>& verts,
                                  const std::vector<Circuit>& circuits,
                                  std::size_t budget_points = 50000);

// Edge-walk one-step test alone; no integrality requirement on vertices.
bool is_ecw_one_step(const Polyhedron& p);
bool is_ecw_one_step(const Polyhedron& p, const std::vector<Vertex>& verts);

struct ReversibilityReport {
  bool reversible = false;
  bool decided = false;  // false only when the budget ran out first
  std::optional<CircuitWalk> witness;  // offending forward step as a 1-step walk
};

ReversibilityReport all_steps_reversible(const Polyhedron& p, std::size_t budget_points = 50000);
ReversibilityReport all_steps_reversible(const Polyhedron& p, const std::vector<Vertex>& verts,
                                         std::size_t budget_points = 50000);
ReversibilityReport all_steps_reversible(const Polyhedron& p, const std::vector<Vertex>& verts,
                                         const std::vector<Circuit>& circuits,
                                         std::size_t budget_points = 50000);

enum class DistanceKind { Combinatorial, Circuit };

struct DistanceReport {
  std::vector<Vec> vertices;             // lex-sorted vertex points
  std::vector<std::vector<long>> dist;   // -1 = unreachable
  long diameter = 0;
};

DistanceReport distances_and_diameters(const Polyhedron& p, DistanceKind kind,
                                       std::size_t budget_points = 50000);

}  // namespace polywalk

#endif
