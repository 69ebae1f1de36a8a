#include <doctest.h>

#include <cstdlib>
#include <random>

#include "polywalk/errors.hpp"
#include "polywalk/linalg.hpp"

using namespace polywalk;

namespace {

unsigned test_seed() {
  if (const char* s = std::getenv("POLYWALK_SEED")) return (unsigned)std::strtoul(s, nullptr, 10);
  return 20240815u;
}

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

// independent 3x3 determinant oracle: cofactor expansion
Rat det3(const Mat& m) {
  auto a = [&](int i, int j) { return m.at(i, j); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("rank of hand matrices") {
  CHECK(rank(Mat{{1, 0}, {0, 1}}) == 2);
  CHECK(rank(Mat{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Mat{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);  // rows in arithmetic progression
  CHECK(rank(Mat(0, 3)) == 0);
  Mat frac(2, 2);
  frac.at(0, 0) = Rat(1, 2);
  frac.at(0, 1) = Rat(1, 3);
  frac.at(1, 0) = Rat(3, 2);
  frac.at(1, 1) = 1;
  CHECK(rank(frac) == 1);  // second row = 3 * first
}

TEST_CASE("kernel basis vectors are canonical and annihilated") {
  Mat m{{1, 1, 1}};
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 2);
  for (const auto& v : kb) {
    CHECK(is_zero(mat_vec(m, v)));
    // coprime integers with positive leading entry
    for (const auto& x : v) CHECK(is_integer(x));
    std::size_t first = 0;
    while (first < v.size() && v[first] == 0) ++first;
    CHECK(v[first] > 0);
  }
  CHECK(kernel_basis(Mat{{1, 0}, {0, 1}}).empty());
}

TEST_CASE("rank-nullity on random integer matrices") {
  std::mt19937 rng(test_seed());
  for (int trial = 0; trial < 40; ++trial) {
    Mat m = random_mat(rng, 2 + trial % 4, 2 + (trial / 2) % 4, -4, 4);
    auto kb = kernel_basis(m);
    CHECK(rank(m) + kb.size() == m.ncols());
    for (const auto& v : kb) CHECK(is_zero(mat_vec(m, v)));
  }
}

TEST_CASE("solve: unique, inconsistent, underdetermined") {
  Mat m{{2, 1}, {1, 3}};
  LinSolve s = solve(m, Vec{Rat(5), Rat(10)});
  REQUIRE(s.status == SolveStatus::Unique);
  CHECK(s.x == Vec{Rat(1), Rat(3)});

  CHECK(solve(Mat{{1, 1}, {2, 2}}, Vec{Rat(1), Rat(3)}).status == SolveStatus::Inconsistent);

  LinSolve u = solve(Mat{{1, 1, 1}}, Vec{Rat(4)});
  REQUIRE(u.status == SolveStatus::Underdetermined);
  CHECK(dot(Vec{Rat(1), Rat(1), Rat(1)}, u.x) == 4);  // particular solution still valid

  CHECK(!solve_square(Mat{{1, 2}, {2, 4}}, Vec{Rat(1), Rat(2)}).has_value());
}

TEST_CASE("determinant matches cofactor oracle") {
  CHECK(determinant(Mat{{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(Mat{{0, 1}, {1, 0}}) == -1);
  std::mt19937 rng(test_seed() + 1);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m = random_mat(rng, 3, 3, -5, 5);
    CHECK(determinant(m) == det3(m));
  }
}

TEST_CASE("max_abs_subdeterminant") {
  CHECK(max_abs_subdeterminant(Mat{{1, 2}, {3, 4}}) == 4);  // entries beat |det| = 2
  CHECK(max_abs_subdeterminant(Mat{{3, 5}, {1, 2}}) == 5);
  CHECK(max_abs_subdeterminant(Mat{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);  // odd cycle
  CHECK_THROWS_AS((void)max_abs_subdeterminant(Mat(2, 13)), Error);
}

TEST_CASE("total unimodularity") {
  // bipartite incidence structure
  Mat inc{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  CHECK(is_totally_unimodular(inc).tu);

  TUReport bad = is_totally_unimodular(Mat{{1, 1}, {-1, 1}});
  CHECK(!bad.tu);
  REQUIRE(bad.witness_rows.size() == 2);
  // witness replays: the flagged submatrix really has |det| > 1
  Mat wit(2, 2);
  Mat orig{{1, 1}, {-1, 1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      wit.at(i, j) = orig.at(bad.witness_rows[i], bad.witness_cols[j]);
  Rat d = determinant(wit);
  CHECK((d > 1 || d < -1));

  TUReport entry = is_totally_unimodular(Mat{{1, 2}});
  CHECK(!entry.tu);
  CHECK(entry.witness_cols == std::vector<std::size_t>{1});

  // interval matrix (consecutive ones)
  CHECK(is_totally_unimodular(Mat{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}).tu);
  // odd cycle incidence: det = 2
  CHECK(!is_totally_unimodular(Mat{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}).tu);
}

TEST_CASE("TU survives the line-reduction preprocessing on padded matrices") {
  // pad a known matrix with unit/duplicate rows that the reducer must strip
  Mat base{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};  // not TU
  Mat padded(0, 3);
  for (const auto& r : base.rows()) padded.push_row(r);
  padded.push_row(Vec{Rat(1), Rat(0), Rat(0)});
  padded.push_row(Vec{Rat(0), Rat(-1), Rat(0)});
  padded.push_row(base.row(0));
  CHECK(!is_totally_unimodular(padded).tu);

  Mat good{{1, 1, 0}, {0, 1, 1}};
  Mat padded2(0, 3);
  for (const auto& r : good.rows()) padded2.push_row(r);
  padded2.push_row(Vec{Rat(0), Rat(0), Rat(1)});
  CHECK(is_totally_unimodular(padded2).tu);
}

TEST_CASE("IntRowView agrees with rational kernel computation") {
  std::mt19937 rng(test_seed() + 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + trial % 2;
    Mat m = random_mat(rng, n - 1, n, -3, 3);
    auto view = IntRowView::make(m);
    REQUIRE(view.has_value());
    std::vector<std::size_t> all(m.nrows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto fast = view->kernel_if_line(all);
    auto kb = kernel_basis(m);
    if (kb.size() == 1) {
      REQUIRE(fast.has_value());
      CHECK(*fast == kb[0]);
    } else {
      CHECK(!fast.has_value());
    }
  }
}

TEST_CASE("affine rank") {
  std::vector<Vec> tri{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(affine_rank(tri) == 2);
  std::vector<Vec> seg{{Rat(0), Rat(0)}, {Rat(2), Rat(2)}, {Rat(5), Rat(5)}};
  CHECK(affine_rank(seg) == 1);
  CHECK(affine_rank({Vec{Rat(7)}}) == 0);
}

TEST_CASE("binomial estimate") {
  CHECK(binom_estimate(52, 5) == doctest::Approx(2598960));
  CHECK(binom_estimate(4, 6) == 0);
}
