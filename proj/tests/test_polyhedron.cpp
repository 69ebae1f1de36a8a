#include <doctest.h>

#include <algorithm>

#include "polywalk/errors.hpp"
#include "polywalk/polyhedron.hpp"

using namespace polywalk;

namespace {

Polyhedron unit_square() {
  Polyhedron p;
  p.n = 2;
  p.A = Mat(0, 2);
  p.B = Mat{{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  p.d = Vec{Rat(0), Rat(1), Rat(0), Rat(1)};
  p.name = "square";
  return p;
}

Polyhedron square_pyramid() {
  // apex (0,0,1) over the square [-1,1]^2: four slanted facets + base
  Polyhedron p;
  p.n = 3;
  p.A = Mat(0, 3);
  p.B = Mat{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {0, 0, -1}};
  p.d = Vec{Rat(1), Rat(1), Rat(1), Rat(1), Rat(0)};
  return p;
}

Vec pt(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

}  // namespace

TEST_CASE("unit square basics") {
  Polyhedron p = unit_square();
  auto verts = enumerate_vertices(p);
  REQUIRE(verts.size() == 4);
  CHECK(verts[0].point == pt({0, 0}));  // lex order
  CHECK(verts[3].point == pt({1, 1}));
  CHECK(verts[0].tight == std::vector<std::size_t>{0, 2});

  CHECK(contains(p, Vec{Rat(1, 2), Rat(1, 2)}));
  CHECK(!contains(p, pt({2, 0})));
  CHECK(is_vertex_point(p, pt({1, 0})));
  CHECK(!is_vertex_point(p, Vec{Rat(1, 2), Rat(0)}));
  CHECK_THROWS_AS((void)make_vertex(p, Vec{Rat(1, 2), Rat(1, 2)}), Error);

  Vertex a = make_vertex(p, pt({0, 0})), b = make_vertex(p, pt({1, 0})),
         c = make_vertex(p, pt({1, 1}));
  CHECK(are_adjacent(p, a, b));
  CHECK(!are_adjacent(p, a, c));  // diagonal
  CHECK_THROWS_AS((void)are_adjacent(p, a, a), Error);
  CHECK(minimal_face(p, a, b).dim == 1);
  CHECK(minimal_face(p, a, c).dim == 2);
}

TEST_CASE("validation and boundedness") {
  Polyhedron p = unit_square();
  ValidationReport rep = validate(p);
  CHECK(rep.shape_ok);
  CHECK(rep.pointed);
  CHECK(rep.bounded_known);
  CHECK(rep.bounded);
  CHECK(!rep.empty);
  CHECK(rep.duplicate_rows.empty());

  // positive orthant: pointed but unbounded
  Polyhedron cone;
  cone.n = 2;
  cone.A = Mat(0, 2);
  cone.B = Mat{{-1, 0}, {0, -1}};
  cone.d = Vec{Rat(0), Rat(0)};
  ValidationReport crep = validate(cone);
  CHECK(crep.pointed);
  CHECK(crep.bounded_known);
  CHECK(!crep.bounded);

  // duplicated facet (scaled copy)
  Polyhedron dup = unit_square();
  dup.B.push_row(Vec{Rat(2), Rat(0)});
  dup.d.push_back(Rat(2));
  ValidationReport drep = validate(dup);
  REQUIRE(drep.duplicate_rows.size() == 1);
  CHECK(drep.duplicate_rows[0] == std::pair<std::size_t, std::size_t>{1, 4});

  // empty: x <= -1, x >= 0
  Polyhedron empty;
  empty.n = 1;
  empty.A = Mat(0, 1);
  empty.B = Mat{{1}, {-1}};
  empty.d = Vec{Rat(-1), Rat(0)};
  CHECK(validate(empty).empty);
}

TEST_CASE("vertex enumeration requires pointedness") {
  Polyhedron half;
  half.n = 2;
  half.A = Mat(0, 2);
  half.B = Mat{{1, 0}};
  half.d = Vec{Rat(1)};
  CHECK_THROWS_AS((void)enumerate_vertices(half), Error);
}

TEST_CASE("reduction to full dimension") {
  // segment {x + y = 1, x,y >= 0} in the plane
  Polyhedron p;
  p.n = 2;
  p.A = Mat{{1, 1}};
  p.b = Vec{Rat(1)};
  p.B = Mat{{-1, 0}, {0, -1}};
  p.d = Vec{Rat(0), Rat(0)};
  auto [q, map] = reduce_to_full_dimension(p);
  CHECK(q.n == 1);
  CHECK(q.B.nrows() == 2);
  auto verts = enumerate_vertices(q);
  REQUIRE(verts.size() == 2);
  for (const auto& v : verts) {
    Vec back = map.apply(v.point);
    CHECK(contains(p, back));
    CHECK(is_vertex_point(p, back));
  }
}

TEST_CASE("minimality and redundancy") {
  Polyhedron p = unit_square();
  CHECK(is_minimal(p).minimal);

  Polyhedron red = unit_square();
  red.B.push_row(Vec{Rat(1), Rat(1)});
  red.d.push_back(Rat(5));  // slack everywhere
  MinimalityReport rep = is_minimal(red);
  CHECK(!rep.minimal);
  CHECK(rep.redundant_rows == std::vector<std::size_t>{4});

  Polyhedron lower;  // equality present
  lower.n = 2;
  lower.A = Mat{{1, 1}};
  lower.b = Vec{Rat(1)};
  lower.B = Mat{{-1, 0}, {0, -1}};
  lower.d = Vec{Rat(0), Rat(0)};
  CHECK_THROWS_AS((void)is_minimal(lower), Error);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(unit_square()));
  CHECK(!is_simple(square_pyramid()));  // apex sits on four facets
  Polyhedron red = unit_square();
  red.B.push_row(Vec{Rat(1), Rat(1)});
  red.d.push_back(Rat(5));
  CHECK_THROWS_AS((void)is_simple(red), Error);
}

TEST_CASE("hull from vertices round-trips the square") {
  std::vector<Vec> pts{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  Polyhedron hull = facets_from_vertices(pts);
  CHECK(hull.B.nrows() == 4);
  auto verts = enumerate_vertices(hull);
  REQUIRE(verts.size() == 4);
  std::vector<Vec> got;
  for (const auto& v : verts) got.push_back(v.point);
  std::sort(pts.begin(), pts.end(), &lex_less);
  CHECK(got == pts);

  CHECK_THROWS_AS((void)facets_from_vertices({pt({0, 0}), pt({1, 1})}), Error);  // degenerate
}

TEST_CASE("hull of a 3d simplex") {
  std::vector<Vec> pts{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  Polyhedron hull = facets_from_vertices(pts);
  CHECK(hull.B.nrows() == 4);
  CHECK(enumerate_vertices(hull).size() == 4);
  CHECK(is_minimal(hull).minimal);
}

TEST_CASE("inner cones") {
  Polyhedron p = unit_square();
  auto verts = enumerate_vertices(p);
  Cone c = inner_cone(p, verts, verts[0]);  // corner (0,0)
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0] == pt({0, 1}));
  CHECK(c.generators[1] == pt({1, 0}));

  // restricted to the bottom edge, only the horizontal direction remains
  Vertex a = make_vertex(p, pt({0, 0})), b = make_vertex(p, pt({1, 0}));
  Face edge = minimal_face(p, a, b);
  Cone ce = inner_cone(p, verts, a, edge);
  REQUIRE(ce.generators.size() == 1);
  CHECK(ce.generators[0] == pt({1, 0}));
}
