#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "polywalk/circuits.hpp"
#include "polywalk/errors.hpp"

using namespace polywalk;

namespace {

unsigned test_seed() {
  if (const char* s = std::getenv("POLYWALK_SEED")) return (unsigned)std::strtoul(s, nullptr, 10);
  return 20240815u;
}

Polyhedron unit_square() {
  Polyhedron p;
  p.n = 2;
  p.A = Mat(0, 2);
  p.B = Mat{{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  p.d = Vec{Rat(0), Rat(1), Rat(0), Rat(1)};
  return p;
}

Vec pt(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

std::set<Vec, bool (*)(const Vec&, const Vec&)> circuit_set(const std::vector<Circuit>& cs) {
  std::set<Vec, bool (*)(const Vec&, const Vec&)> s(&lex_less);
  for (const auto& c : cs) s.insert(c.g);
  return s;
}

}  // namespace

TEST_CASE("square circuits are the axis directions") {
  auto cs = circuits_rank_method(unit_square());
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].g == pt({0, 1}));
  CHECK(cs[1].g == pt({1, 0}));
  CHECK(cs[1].image == pt({-1, 1, 0, 0}));
}

TEST_CASE("equality systems restrict circuits to the kernel") {
  // x + y + z = 1 simplex: circuits are the edge directions
  Polyhedron p;
  p.n = 3;
  p.A = Mat{{1, 1, 1}};
  p.b = Vec{Rat(1)};
  p.B = Mat{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  p.d = Vec{Rat(0), Rat(0), Rat(0)};
  auto cs = circuits_rank_method(p);
  auto got = circuit_set(cs);
  std::set<Vec, bool (*)(const Vec&, const Vec&)> want(&lex_less);
  want.insert(pt({0, 1, -1}));
  want.insert(pt({1, 0, -1}));
  want.insert(pt({1, -1, 0}));
  CHECK(got == want);
  for (const auto& c : cs) CHECK(is_zero(mat_vec(p.A, c.g)));
}

TEST_CASE("normalize_circuit reports the orientation") {
  Polyhedron p = unit_square();
  NormalizedCircuit nc = normalize_circuit(p, Vec{Rat(0), Rat(-2)});
  CHECK(nc.circuit.g == pt({0, 1}));
  CHECK(nc.sign == -1);
  CHECK_THROWS_AS((void)normalize_circuit(p, pt({0, 0})), Error);

  Polyhedron q;
  q.n = 2;
  q.A = Mat{{1, 1}};
  q.b = Vec{Rat(0)};
  q.B = Mat{{-1, 0}};
  q.d = Vec{Rat(0)};
  CHECK_THROWS_AS((void)normalize_circuit(q, pt({1, 1})), Error);  // not in ker(A)
}

TEST_CASE("support oracle agrees with the rank method") {
  std::mt19937 rng(test_seed() + 7);
  std::uniform_int_distribution<int> entry(-3, 3);
  int tested = 0;
  while (tested < 50) {
    std::size_t n = 2 + rng() % 3;
    std::size_t m = n + 1 + rng() % (9 - n);
    Polyhedron p;
    p.n = n;
    p.A = Mat(0, n);
    p.B = Mat(0, n);
    for (std::size_t i = 0; i < m; ++i) {
      Vec row(n);
      for (auto& x : row) x = entry(rng);
      if (is_zero(row)) continue;
      p.B.push_row(std::move(row));
      p.d.push_back(Rat(1 + (int)(rng() % 4)));
    }
    Mat stacked = p.B;
    if (stacked.nrows() == 0 || rank(stacked) < n) continue;  // need pointedness
    auto a = circuits_rank_method(p);
    auto b = circuits_support_oracle(p);
    CHECK(circuit_set(a) == circuit_set(b));
    ++tested;
  }
}

TEST_CASE("feasible circuit directions at points of the square") {
  Polyhedron p = unit_square();
  auto cs = circuits_rank_method(p);
  auto at_corner = feasible_circuits_at(p, cs, pt({0, 0}));
  REQUIRE(at_corner.size() == 2);
  CHECK(at_corner[0] == pt({0, 1}));
  CHECK(at_corner[1] == pt({1, 0}));

  auto inside = feasible_circuits_at(p, cs, Vec{Rat(1, 2), Rat(1, 2)});
  CHECK(inside.size() == 4);  // both orientations of both circuits

  CHECK_THROWS_AS((void)feasible_circuits_at(p, cs, pt({3, 3})), Error);
}

TEST_CASE("maximal steps") {
  Polyhedron p = unit_square();
  auto [y, alpha] = maximal_step(p, pt({0, 0}), pt({1, 1}));
  CHECK(y == pt({1, 1}));
  CHECK(alpha == 1);

  auto [y2, alpha2] = maximal_step(p, pt({0, 0}), pt({2, 0}));
  CHECK(y2 == pt({1, 0}));  // direction scaling cancels in the endpoint
  CHECK(alpha2 == Rat(1, 2));

  CHECK_THROWS_AS((void)maximal_step(p, pt({1, 0}), pt({1, 0})), Error);   // infeasible
  CHECK_THROWS_AS((void)maximal_step(p, pt({0, 0}), pt({0, 0})), Error);   // zero
  Polyhedron orthant;
  orthant.n = 2;
  orthant.A = Mat(0, 2);
  orthant.B = Mat{{-1, 0}, {0, -1}};
  orthant.d = Vec{Rat(0), Rat(0)};
  CHECK_THROWS_AS((void)maximal_step(orthant, pt({0, 0}), pt({1, 1})), Error);  // unbounded
}

TEST_CASE("circuit images vanish exactly on a rank n-1 row set") {
  Polyhedron p = unit_square();
  for (const auto& c : circuits_rank_method(p)) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.B.nrows(); ++i)
      if (c.image[i] == 0) tight.push_back(i);
    Mat sub(0, p.n);
    for (auto i : tight) sub.push_row(p.B.row(i));
    CHECK(rank(sub) + 1 == p.n);
  }
}
