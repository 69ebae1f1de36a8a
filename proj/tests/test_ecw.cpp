#include <doctest.h>

#include <algorithm>
#include <set>

#include "polywalk/circuits.hpp"
#include "polywalk/ecw.hpp"
#include "polywalk/errors.hpp"
#include "polywalk/families.hpp"

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

Polyhedron square_pyramid() {
  Polyhedron p;
  p.n = 3;
  p.A = Mat(0, 3);
  p.B = Mat{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {0, 0, -1}};
  p.d = Vec{Rat(1), Rat(1), Rat(1), Rat(1), Rat(0)};
  return p;
}

using VecSet = std::set<Vec, bool (*)(const Vec&, const Vec&)>;

VecSet circuit_directions(const Polyhedron& p) {
  VecSet s(&lex_less);
  for (const auto& c : circuits_rank_method(p)) {
    s.insert(c.g);
    s.insert(scale(c.g, Rat(-1)));
  }
  return s;
}

}  // namespace

TEST_CASE("three characterizations agree on the positive fixtures") {
  for (const Polyhedron& p :
       {unit_square(), fig2('d'), nd_parallelotope(2, 1), nd_parallelotope(3, 1),
        nd_parallelotope(3, 2), nd_parallelotope(3, 3)}) {
    CHECK(elementary_cone_condition(p).holds);
    CHECK(symmetric_inner_cone_condition(p).holds);
    RecognitionResult rec = recognize_nd_parallelotope(p);
    CHECK(rec.is_ndp);
    CHECK(rec.d == p.B.nrows() - p.n);
    CHECK(rec.certificates.size() == enumerate_vertices(p).size());
  }
}

TEST_CASE("three characterizations agree on the negative fixtures") {
  for (char w : {'a', 'b', 'c'}) {
    Polyhedron p = fig2(w);
    CHECK(!elementary_cone_condition(p).holds);
    CHECK(!symmetric_inner_cone_condition(p).holds);
    CHECK(!recognize_nd_parallelotope(p).is_ndp);
  }
}

TEST_CASE("failure witnesses replay") {
  Polyhedron p = fig2('a');
  ElementaryConeResult el = elementary_cone_condition(p);
  REQUIRE(el.witness_vertex.has_value());
  REQUIRE(el.witness_row.has_value());
  auto verts = enumerate_vertices(p);
  auto it = std::find_if(verts.begin(), verts.end(),
                         [&](const Vertex& v) { return v.point == *el.witness_vertex; });
  REQUIRE(it != verts.end());
  Cone cone = inner_cone(p, verts, *it);
  bool pos = false, neg = false;
  for (const auto& g : cone.generators) {
    Rat s = dot(p.B.row(*el.witness_row), g);
    pos |= (s > 0);
    neg |= (s < 0);
  }
  CHECK(pos);
  CHECK(neg);  // the flagged hyperplane really splits the cone

  SymmetricConeResult sym = symmetric_inner_cone_condition(fig2('c'));
  REQUIRE(sym.witness_pair.has_value());
  CHECK(is_vertex_point(fig2('c'), sym.witness_pair->first));
  CHECK(is_vertex_point(fig2('c'), sym.witness_pair->second));

  RecognitionResult rec = recognize_nd_parallelotope(fig2('c'));
  CHECK(rec.failure == "facet count 8 outside (n, 2n]");
}

TEST_CASE("skewed parallelotopes are still recognized") {
  Polyhedron p = nd_parallelotope(3, 2, random_unimodular_skew(3, 11));
  RecognitionResult rec = recognize_nd_parallelotope(p);
  CHECK(rec.is_ndp);
  CHECK(rec.d == 2);
  CHECK(elementary_cone_condition(p).holds);
  CHECK(symmetric_inner_cone_condition(p).holds);
}

TEST_CASE("precondition errors are distinguished") {
  auto error_code = [](auto&& fn) -> std::string {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return "";
  };
  CHECK(error_code([] { (void)elementary_cone_condition(square_pyramid()); }) == "NotSimple");

  Polyhedron red = unit_square();
  red.B.push_row(Vec{Rat(1), Rat(1)});
  red.d.push_back(Rat(5));
  CHECK(error_code([&] { (void)symmetric_inner_cone_condition(red); }) == "NotMinimal");

  Polyhedron wedge;  // unbounded along (1,1); rejected before any cone analysis
  wedge.n = 2;
  wedge.A = Mat(0, 2);
  wedge.B = Mat{{-1, 0}, {0, -1}, {1, -1}, {-1, 1}};
  wedge.d = Vec{Rat(0), Rat(0), Rat(1), Rat(1)};
  CHECK_THROWS_AS((void)recognize_nd_parallelotope(wedge), Error);
}

TEST_CASE("arrangement cells of the axis square") {
  auto cells = elementary_cones_enumerate(unit_square());
  REQUIRE(cells.size() == 4);  // the four quadrants
  for (const auto& c : cells) CHECK(c.generators.size() == 2);
}

TEST_CASE("arrangement cells of the four-line fixture") {
  auto cells = elementary_cones_enumerate(fig2('a'));
  CHECK(cells.size() == 8);  // 4 concurrent lines split the plane into 8 sectors
  // cells come in opposite pairs
  auto key = [](std::vector<Vec> gens) {
    std::sort(gens.begin(), gens.end(), &lex_less);
    return gens;
  };
  std::set<std::vector<Vec>> keys;
  for (const auto& c : cells) keys.insert(key(c.generators));
  for (const auto& c : cells) {
    std::vector<Vec> neg;
    for (const auto& g : c.generators) neg.push_back(scale(g, Rat(-1)));
    CHECK(keys.count(key(neg)) == 1);
  }
}

TEST_CASE("arrangement rays and circuits coincide on small fixtures") {
  for (const Polyhedron& p : {unit_square(), fig2('a'), nd_parallelotope(3, 2)}) {
    VecSet circuits = circuit_directions(p);
    VecSet rays(&lex_less);
    for (const auto& cell : elementary_cones_enumerate(p))
      for (const auto& g : cell.generators) rays.insert(g);
    CHECK(rays == circuits);  // extreme rays <-> oriented circuit set
  }
}

TEST_CASE("degenerate arrangements are rejected") {
  Polyhedron slab;
  slab.n = 2;
  slab.A = Mat(0, 2);
  slab.B = Mat{{1, 0}, {-1, 0}};
  slab.d = Vec{Rat(1), Rat(0)};
  try {
    (void)elementary_cones_enumerate(slab);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "DegenerateArrangement");
  }

  Polyhedron lower;
  lower.n = 2;
  lower.A = Mat{{1, 1}};
  lower.b = Vec{Rat(1)};
  lower.B = Mat{{-1, 0}, {0, -1}};
  lower.d = Vec{Rat(0), Rat(0)};
  CHECK_THROWS_AS((void)elementary_cones_enumerate(lower), Error);
}

TEST_CASE("2-faces of recognized fixtures are triangles or parallelograms") {
  for (const Polyhedron& p : {nd_parallelotope(3, 2), nd_parallelotope(3, 3)}) {
    auto verts = enumerate_vertices(p);
    // each facet of these 3-polytopes is a 2-face
    for (std::size_t i = 0; i < p.B.nrows(); ++i) {
      std::vector<Vec> on;
      for (const auto& v : verts)
        if (std::binary_search(v.tight.begin(), v.tight.end(), i)) on.push_back(v.point);
      REQUIRE(affine_rank(on) == 2);
      if (on.size() == 3) continue;  // triangle
      REQUIRE(on.size() == 4);  // parallelogram: diagonals share their midpoint
      std::sort(on.begin(), on.end(), &lex_less);
      CHECK(on[0] + on[3] == on[1] + on[2]);
    }
  }
}
