#include "polywalk/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polywalk/ecw.hpp"
#include "polywalk/errors.hpp"

namespace polywalk {
namespace {

Polyhedron hull_of(std::vector<std::vector<long long>> pts, std::string name) {
  std::vector<Vec> v;
  for (const auto& pt : pts) {
    Vec x;
    for (long long c : pt) x.push_back(Rat(c));
    v.push_back(std::move(x));
  }
  Polyhedron p = facets_from_vertices(v);
  p.name = std::move(name);
  return p;
}

std::size_t popcount(std::size_t s) {
  std::size_t c = 0;
  while (s) {
    c += s & 1;
    s >>= 1;
  }
  return c;
}

void append_nonneg(Polyhedron& p, std::size_t nvars) {
  for (std::size_t j = 0; j < nvars; ++j) {
    Vec row(nvars, Rat(0));
    row[j] = -1;
    p.B.push_row(std::move(row));
    p.d.push_back(0);
  }
}

}  // namespace

Polyhedron fig2(char which) {
  switch (which) {
    case 'a':
      return hull_of({{0, 1}, {1, 2}, {2, 2}, {4, 0}, {2, -2}, {0, 0}}, "fig2a");
    case 'b':
      return hull_of({{0, 1}, {2, 3}, {6, 3}, {8, 1}, {8, -1}, {6, -3}, {2, -3}, {0, -1}},
                     "fig2b");
    case 'c':
      return hull_of({{0, 1}, {2, 3}, {4, 3}, {6, 1}, {6, -1}, {4, -3}, {2, -3}, {0, -1}},
                     "fig2c");
    case 'd':
      return hull_of({{1, 2}, {5, 2}, {5, -1}, {1, -1}}, "fig2d");
    default:
      throw invalid("InvalidSpec", "fig2 selector must be one of a, b, c, d");
  }
}

Polyhedron fig3_polytope() {
  return hull_of({{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {0, 0, 1}, {0, 1, 0}}, "fig3");
}

Polyhedron transportation(const TransportationSpec& spec) {
  std::size_t m = spec.supplies.size(), n = spec.demands.size();
  if (m == 0 || n == 0) throw invalid("InvalidSpec", "transportation needs supplies and demands");
  long long su = 0, sv = 0;
  for (long long x : spec.supplies) {
    if (x <= 0) throw invalid("InvalidSpec", "supplies must be positive");
    su += x;
  }
  for (long long x : spec.demands) {
    if (x <= 0) throw invalid("InvalidSpec", "demands must be positive");
    sv += x;
  }
  if (su != sv) throw invalid("InvalidSpec", "total supply must equal total demand");
  std::size_t nvars = m * n;  // y_ij, i outer
  Polyhedron p;
  p.n = nvars;
  p.A = Mat(0, nvars);
  p.B = Mat(0, nvars);
  for (std::size_t i = 0; i < m; ++i) {
    Vec row(nvars, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1;
    p.A.push_row(std::move(row));
    p.b.push_back(Rat(spec.supplies[i]));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(nvars, Rat(0));
    for (std::size_t i = 0; i < m; ++i) row[i * n + j] = 1;
    p.A.push_row(std::move(row));
    p.b.push_back(Rat(spec.demands[j]));
  }
  append_nonneg(p, nvars);
  p.name = "transportation";
  return p;
}

static void check_partition_spec(const PartitionSpec& spec) {
  if (spec.n_items == 0 || spec.k == 0) throw invalid("InvalidSpec", "need items and clusters");
  if (spec.lower.size() != spec.k || spec.upper.size() != spec.k)
    throw invalid("InvalidSpec", "size bound lists must have length k");
  long long lo = 0, hi = 0;
  for (std::size_t i = 0; i < spec.k; ++i) {
    if (spec.lower[i] < 0 || spec.lower[i] > spec.upper[i])
      throw invalid("InvalidSpec", "need 0 <= lower <= upper per cluster");
    lo += spec.lower[i];
    hi += spec.upper[i];
  }
  if (lo > (long long)spec.n_items || hi < (long long)spec.n_items)
    throw invalid("InvalidSpec", "size bounds exclude every clustering");
}

Polyhedron partition_bounded(const PartitionSpec& spec) {
  check_partition_spec(spec);
  std::size_t k = spec.k, n = spec.n_items, nvars = k * n;
  Polyhedron p;
  p.n = nvars;
  p.A = Mat(0, nvars);
  p.B = Mat(0, nvars);
  for (std::size_t j = 0; j < n; ++j) {  // each item in exactly one cluster
    Vec row(nvars, Rat(0));
    for (std::size_t i = 0; i < k; ++i) row[i * n + j] = 1;
    p.A.push_row(std::move(row));
    p.b.push_back(1);
  }
  for (std::size_t i = 0; i < k; ++i) {  // cluster size caps
    Vec row(nvars, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1;
    p.B.push_row(std::move(row));
    p.d.push_back(Rat(spec.upper[i]));
  }
  for (std::size_t i = 0; i < k; ++i) {  // cluster size floors
    Vec row(nvars, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = -1;
    p.B.push_row(std::move(row));
    p.d.push_back(Rat(-spec.lower[i]));
  }
  append_nonneg(p, nvars);
  p.name = "partition-bounded";
  return p;
}

Polyhedron partition_fixed(const PartitionSpec& spec) {
  check_partition_spec(spec);
  if (spec.lower != spec.upper)
    throw invalid("InvalidSpec", "fixed-size spec needs lower == upper");
  std::size_t k = spec.k, n = spec.n_items, nvars = k * n;
  Polyhedron p;
  p.n = nvars;
  p.A = Mat(0, nvars);
  p.B = Mat(0, nvars);
  for (std::size_t i = 0; i < k; ++i) {  // exact cluster sizes
    Vec row(nvars, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1;
    p.A.push_row(std::move(row));
    p.b.push_back(Rat(spec.lower[i]));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(nvars, Rat(0));
    for (std::size_t i = 0; i < k; ++i) row[i * n + j] = 1;
    p.A.push_row(std::move(row));
    p.b.push_back(1);
  }
  append_nonneg(p, nvars);
  p.name = "partition-fixed";
  return p;
}

MatroidSpec MatroidSpec::uniform(long long r, std::size_t ground) {
  MatroidSpec s;
  s.ground = ground;
  s.rank_table.resize(std::size_t(1) << ground);
  for (std::size_t mask = 0; mask < s.rank_table.size(); ++mask)
    s.rank_table[mask] = std::min<long long>(r, (long long)popcount(mask));
  return s;
}

MatroidSpec MatroidSpec::graphic(std::size_t nodes,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  MatroidSpec s;
  s.ground = edges.size();
  s.rank_table.resize(std::size_t(1) << s.ground);
  for (std::size_t mask = 0; mask < s.rank_table.size(); ++mask) {
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    long long r = 0;
    for (std::size_t e = 0; e < s.ground; ++e) {
      if (!(mask & (std::size_t(1) << e))) continue;
      auto [a, b] = edges[e];
      if (a >= nodes || b >= nodes) throw invalid("InvalidSpec", "edge endpoint out of range");
      std::size_t ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        ++r;
      }
    }
    s.rank_table[mask] = r;
  }
  return s;
}

Polyhedron matroid_polytope(const MatroidSpec& spec) {
  std::size_t g = spec.ground;
  if (g == 0 || g > 6) throw unsupported("SizeLimitExceeded", "ground set must have 1..6 elements");
  std::size_t nsub = std::size_t(1) << g;
  if (spec.rank_table.size() != nsub)
    throw invalid("InvalidRankFunction", "rank table must cover all subsets");
  if (spec.rank_table[0] != 0) throw invalid("InvalidRankFunction", "rank of the empty set must be 0");
  for (std::size_t s = 0; s < nsub; ++s) {
    if (spec.rank_table[s] < 0 || spec.rank_table[s] > (long long)popcount(s))
      throw invalid("InvalidRankFunction", "need 0 <= f(S) <= |S|");
    for (std::size_t e = 0; e < g; ++e) {
      std::size_t bit = std::size_t(1) << e;
      if (!(s & bit) && spec.rank_table[s] > spec.rank_table[s | bit])
        throw invalid("InvalidRankFunction", "rank function must be monotone");
    }
  }
  for (std::size_t s = 0; s < nsub; ++s)
    for (std::size_t t = 0; t < nsub; ++t)
      if (spec.rank_table[s | t] + spec.rank_table[s & t] >
          spec.rank_table[s] + spec.rank_table[t])
        throw invalid("InvalidRankFunction", "rank function must be submodular");

  Polyhedron p;
  p.n = g;
  p.A = Mat(0, g);
  p.B = Mat(0, g);
  append_nonneg(p, g);
  for (std::size_t s = 1; s < nsub; ++s) {  // deliberately unreduced
    Vec row(g, Rat(0));
    for (std::size_t e = 0; e < g; ++e)
      if (s & (std::size_t(1) << e)) row[e] = 1;
    p.B.push_row(std::move(row));
    p.d.push_back(Rat(spec.rank_table[s]));
  }
  p.name = "matroid";
  return p;
}

Polyhedron nd_parallelotope(std::size_t n, std::size_t d, const std::optional<AffineMap>& skew) {
  if (d < 1 || d > n || n > 6) throw invalid("InvalidSpec", "need 1 <= d <= n <= 6");
  std::size_t s = n - d + 1;  // simplex block dimension
  Polyhedron p;
  p.n = n;
  p.A = Mat(0, n);
  p.B = Mat(0, n);
  for (std::size_t j = 0; j < s; ++j) {
    Vec row(n, Rat(0));
    row[j] = -1;
    p.B.push_row(std::move(row));
    p.d.push_back(0);
  }
  {
    Vec row(n, Rat(0));
    for (std::size_t j = 0; j < s; ++j) row[j] = 1;
    p.B.push_row(std::move(row));
    p.d.push_back(1);
  }
  for (std::size_t j = s; j < n; ++j) {  // unit segment factors
    Vec lo(n, Rat(0)), hi(n, Rat(0));
    lo[j] = -1;
    hi[j] = 1;
    p.B.push_row(std::move(lo));
    p.d.push_back(0);
    p.B.push_row(std::move(hi));
    p.d.push_back(1);
  }
  if (skew) {
    const AffineMap& m = *skew;
    if (m.basis.nrows() != n || m.basis.ncols() != n || m.offset.size() != n)
      throw invalid("InvalidSpec", "skew map must be n x n with an n-offset");
    // x = basis^{-1} (z - offset): rewrite B x <= d in z coordinates.
    Mat binv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, Rat(0));
      e[j] = 1;
      auto col = solve_square(m.basis, e);
      if (!col) throw invalid("InvalidSpec", "skew map must be invertible");
      for (std::size_t i = 0; i < n; ++i) binv.at(i, j) = (*col)[i];
    }
    Mat nb(0, n);
    Vec nd_vec;
    for (std::size_t i = 0; i < p.B.nrows(); ++i) {
      Vec row(n, Rat(0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) row[j] += p.B.at(i, l) * binv.at(l, j);
      nd_vec.push_back(p.d[i] + dot(row, m.offset));
      nb.push_row(std::move(row));
    }
    p.B = std::move(nb);
    p.d = std::move(nd_vec);
  }
  p.name = "ndp-" + std::to_string(n) + "-" + std::to_string(d);
  RecognitionResult rec = recognize_nd_parallelotope(p);
  if (!rec.is_ndp || rec.d != d)
    throw unsupported("RecognitionSelfCheckFailed", "constructed polytope failed recognition");
  return p;
}

AffineMap random_unimodular_skew(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  AffineMap m;
  m.basis = Mat(n, n);
  for (std::size_t i = 0; i < n; ++i) m.basis.at(i, i) = 1;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t step = 0; step < 2 * n; ++step) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      int c = coeff(rng);
      if (c == 0) c = 1;
      for (std::size_t l = 0; l < n; ++l) m.basis.at(i, l) += Rat(c) * m.basis.at(j, l);
    }
  }
  std::uniform_int_distribution<int> off(-2, 2);
  for (std::size_t i = 0; i < n; ++i) m.offset.push_back(Rat(off(rng)));
  return m;
}

Vec assignment_vector(std::size_t k, const Assignment& asg) {
  std::size_t n = asg.size();
  Vec y(k * n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) y[asg[j] * n + j] = 1;
  return y;
}

bool assignment_feasible(const PartitionSpec& spec, const Assignment& asg, bool fixed_size) {
  if (asg.size() != spec.n_items) return false;
  std::vector<long long> sizes(spec.k, 0);
  for (std::size_t c : asg) {
    if (c >= spec.k) return false;
    ++sizes[c];
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    if (fixed_size) {
      if (sizes[i] != spec.lower[i]) return false;
    } else if (sizes[i] < spec.lower[i] || sizes[i] > spec.upper[i]) {
      return false;
    }
  }
  return true;
}

std::vector<Assignment> feasible_assignments(const PartitionSpec& spec, bool fixed_size) {
  std::vector<Assignment> out;
  Assignment asg(spec.n_items, 0);
  while (true) {
    if (assignment_feasible(spec, asg, fixed_size)) out.push_back(asg);
    std::size_t j = 0;
    while (j < spec.n_items && asg[j] + 1 == spec.k) asg[j++] = 0;
    if (j == spec.n_items) break;
    ++asg[j];
  }
  return out;
}

std::vector<Vertex> partition_vertices(const Polyhedron& p, const PartitionSpec& spec,
                                       bool fixed_size) {
  std::vector<Vertex> out;
  for (const auto& asg : feasible_assignments(spec, fixed_size))
    out.push_back(make_vertex(p, assignment_vector(spec.k, asg)));
  std::sort(out.begin(), out.end(),
            [](const Vertex& a, const Vertex& b) { return lex_less(a.point, b.point); });
  return out;
}

}  // namespace polywalk
