#include <doctest.h>

#include "polywalk/errors.hpp"
#include "polywalk/families.hpp"
#include "polywalk/walks.hpp"

using namespace polywalk;

namespace {

Polyhedron unit_square() {
  Polyhedron p;
  p.n = 2;
  p.A = Mat(0, 2);
  p.B = Mat{{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  p.d = Vec{Rat(0), Rat(1), Rat(0), Rat(1)};
  return p;
}

Polyhedron unit_cube() {
  Polyhedron p;
  p.n = 3;
  p.A = Mat(0, 3);
  p.B = Mat{{-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1}};
  p.d = Vec{Rat(0), Rat(1), Rat(0), Rat(1), Rat(0), Rat(1)};
  return p;
}

Vec pt(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

void check_replay(const Polyhedron& p, const CircuitWalk& w) {
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    auto [y, alpha] = maximal_step(p, w.points[i], w.steps[i].direction);
    CHECK(y == w.points[i + 1]);
    CHECK(alpha == w.steps[i].alpha);
  }
}

}  // namespace

TEST_CASE("square walk along the diagonal") {
  Polyhedron p = unit_square();
  CircuitWalk w = walk(p, pt({0, 0}), {pt({1, 1})});
  REQUIRE(w.points.size() == 2);
  CHECK(w.points[1] == pt({1, 1}));
  CHECK(w.steps[0].alpha == 1);
  check_replay(p, w);

  CHECK_THROWS_AS((void)walk(p, pt({1, 0}), {pt({1, 0})}), Error);  // infeasible directive
  CHECK_THROWS_AS((void)walk(p, Vec{Rat(1, 2), Rat(0)}, {pt({1, 0})}), Error);  // non-vertex start
}

TEST_CASE("octagon walk reproduces the labeled point sequence") {
  Polyhedron p = fig2('c');
  CircuitWalk w = walk(p, pt({0, -1}),
                       {pt({1, 0}), pt({-1, 1}), pt({1, 0}), pt({0, -1})});
  REQUIRE(w.points.size() == 5);
  CHECK(w.points[1] == pt({6, -1}));
  CHECK(w.points[2] == pt({2, 3}));
  CHECK(w.points[3] == pt({4, 3}));
  CHECK(w.points[4] == pt({4, -3}));
  check_replay(p, w);
}

TEST_CASE("fig2b first maximal step") {
  CircuitWalk w = walk(fig2('b'), pt({0, -1}), {pt({1, 1})});
  CHECK(w.points[1] == pt({4, 3}));
}

TEST_CASE("step graph closures") {
  StepGraph sq = reachable_step_graph(unit_square());
  CHECK(sq.points.size() == 4);  // rectangle: only feasible steps travel edges
  CHECK(sq.complete);

  StepGraph rect = reachable_step_graph(fig2('d'));
  CHECK(rect.points.size() == 4);

  StepGraph oct = reachable_step_graph(fig2('b'));
  CHECK(oct.complete);
  CHECK(oct.points.size() > 8);  // reaches integral non-vertices
  bool has43 = false;
  for (const auto& q : oct.points) has43 |= (q == pt({4, 3}));
  CHECK(has43);
  for (const auto& q : oct.points) CHECK(is_integral(q));

  StepGraphOptions stop;
  stop.stop_on_noninteger = true;
  StepGraph hex = reachable_step_graph(fig2('a'), stop);
  REQUIRE(hex.noninteger_node.has_value());
  CHECK(!is_integral(hex.points[*hex.noninteger_node]));
}

TEST_CASE("classification of the small battery") {
  CHECK(classify_hierarchy(unit_square()).level == Level::ECW);
  CHECK(classify_hierarchy(fig2('a')).level == Level::GCW);
  CHECK(classify_hierarchy(fig2('b')).level == Level::ICW);
  CHECK(classify_hierarchy(fig2('c')).level == Level::VCW);
  CHECK(classify_hierarchy(fig2('d')).level == Level::ECW);

  // witnesses replay through maximal_step
  Classification g = classify_hierarchy(fig2('a'));
  REQUIRE(g.witness_walk.has_value());
  check_replay(fig2('a'), *g.witness_walk);
  CHECK(!is_integral(g.witness_walk->points.back()));

  Classification i = classify_hierarchy(fig2('b'));
  REQUIRE(i.witness_walk.has_value());
  check_replay(fig2('b'), *i.witness_walk);
  const Vec& end = i.witness_walk->points.back();
  CHECK(is_integral(end));
  CHECK(!is_vertex_point(fig2('b'), end));

  Classification v = classify_hierarchy(fig2('c'));
  REQUIRE(v.witness_walk.has_value());
  check_replay(fig2('c'), *v.witness_walk);
  Vertex from = make_vertex(fig2('c'), v.witness_walk->points.front());
  Vertex to = make_vertex(fig2('c'), v.witness_walk->points.back());
  CHECK(!are_adjacent(fig2('c'), from, to));
}

TEST_CASE("classification rejects non-integral polytopes") {
  Polyhedron p;
  p.n = 2;
  p.A = Mat(0, 2);
  p.B = Mat{{-1, 0}, {0, -1}, {2, 2}};
  p.d = Vec{Rat(0), Rat(0), Rat(1)};  // vertices at (1/2,0), (0,1/2)
  CHECK_THROWS_AS((void)classify_hierarchy(p), Error);
  CHECK(is_ecw_one_step(p));  // the integrality-free check still works
}

TEST_CASE("reversibility") {
  CHECK(all_steps_reversible(unit_square()).reversible);
  CHECK(all_steps_reversible(fig2('c')).reversible);
  ReversibilityReport hex = all_steps_reversible(fig2('a'));
  CHECK(!hex.reversible);
  REQUIRE(hex.witness.has_value());
  // the offending forward step replays, its reversal does not return
  const CircuitWalk& w = *hex.witness;
  auto [y, alpha] = maximal_step(fig2('a'), w.points[0], w.steps[0].direction);
  CHECK(y == w.points[1]);
  bool returns = false;
  try {
    auto [z, beta] = maximal_step(fig2('a'), y, scale(w.steps[0].direction, Rat(-1)));
    returns = (z == w.points[0]) && (beta == alpha);
  } catch (const Error&) {
  }
  CHECK(!returns);
}

TEST_CASE("distances and diameters") {
  DistanceReport sq_c = distances_and_diameters(unit_square(), DistanceKind::Combinatorial);
  CHECK(sq_c.diameter == 2);
  DistanceReport sq_g = distances_and_diameters(unit_square(), DistanceKind::Circuit);
  CHECK(sq_g.diameter == 2);

  CHECK(distances_and_diameters(unit_cube(), DistanceKind::Combinatorial).diameter == 3);

  DistanceReport oc = distances_and_diameters(fig2('c'), DistanceKind::Circuit);
  DistanceReport oc_c = distances_and_diameters(fig2('c'), DistanceKind::Combinatorial);
  REQUIRE(oc.vertices == oc_c.vertices);
  for (std::size_t i = 0; i < oc.vertices.size(); ++i)
    for (std::size_t j = 0; j < oc.vertices.size(); ++j) {
      REQUIRE(oc.dist[i][j] >= 0);
      CHECK(oc.dist[i][j] <= oc_c.dist[i][j]);  // circuit walks generalize edge walks
    }

  CHECK_THROWS_AS((void)distances_and_diameters(fig2('a'), DistanceKind::Circuit), Error);
}

TEST_CASE("greedy walk reaches a target corner") {
  Polyhedron p = unit_square();
  auto cs = circuits_rank_method(p);
  CircuitWalk w = greedy_walk(p, cs, pt({0, 0}), pt({1, 1}));
  CHECK(w.points.back() == pt({1, 1}));
  CHECK(w.steps.size() <= 2);
  check_replay(p, w);
}
