#include "polywalk/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polywalk/errors.hpp"

namespace polywalk {
namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void check_shape(const Polyhedron& p, std::vector<std::string>* problems) {
  auto bad = [&](const std::string& s) {
    if (problems)
      problems->push_back(s);
    else
      throw invalid("ShapeMismatch", s);
  };
  if (p.A.nrows() > 0 && p.A.ncols() != p.n) bad("A column count != n");
  if (p.B.nrows() > 0 && p.B.ncols() != p.n) bad("B column count != n");
  if (p.b.size() != p.A.nrows()) bad("|b| != rows(A)");
  if (p.d.size() != p.B.nrows()) bad("|d| != rows(B)");
}

// Recession direction g != 0 with Ag = 0, Bg <= 0 (or the cone contains a
// line). Returns nullopt when the recession cone is {0}.
std::optional<Vec> recession_direction(const Polyhedron& p) {
  Mat stacked = p.A;
  for (const auto& r : p.B.rows()) stacked.push_row(r);
  if (stacked.nrows() == 0 || rank(stacked) < p.n) {
    // contains a line (or whole space)
    Mat a = p.A;
    if (a.nrows() == 0) {
      Vec g(p.n, Rat(0));
      g[0] = 1;
      if (p.B.nrows() == 0) return g;
    }
    auto kb = kernel_basis(stacked.nrows() ? stacked : Mat(0, p.n));
    if (!kb.empty()) return kb[0];
    // stacked has rank < n, kernel nonempty unless n == 0
    return std::nullopt;
  }
  std::size_t r_a = rank(p.A);
  if (r_a + 1 > p.n) return std::nullopt;  // P is at most a point
  std::size_t k = p.n - 1 - r_a;
  std::size_t m = p.B.nrows();
  if (k > m) return std::nullopt;
  if (binom_estimate(m, k) > 2e6) throw unsupported("SizeLimitExceeded", "recession ray enumeration too large");
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) {
    auto kb = kernel_basis(p.A.nrows() ? p.A : Mat(0, p.n));
    for (const auto& g : kb) {
      bool neg_ok = true, pos_ok = true;
      for (const auto& row : p.B.rows()) {
        Rat s = dot(row, g);
        if (s > 0) pos_ok = false;
        if (s < 0) neg_ok = false;
      }
      if (pos_ok) return g;
      if (neg_ok) return scale(g, Rat(-1));
    }
    return std::nullopt;
  }
  do {
    Mat stackedS = stack_tight(p, idx);
    auto kb = kernel_basis(stackedS);
    if (kb.size() != 1) continue;
    const Vec& g = kb[0];
    bool pos_ok = true, neg_ok = true;
    for (const auto& row : p.B.rows()) {
      Rat s = dot(row, g);
      if (s > 0) pos_ok = false;
      if (s < 0) neg_ok = false;
      if (!pos_ok && !neg_ok) break;
    }
    if (pos_ok) return g;
    if (neg_ok) return scale(g, Rat(-1));
  } while (next_combination(idx, m));
  return std::nullopt;
}

}  // namespace

Vec AffineMap::apply(const Vec& y) const {
  Vec x = offset;
  for (std::size_t j = 0; j < basis.ncols(); ++j)
    if (y[j] != 0)
      for (std::size_t i = 0; i < basis.nrows(); ++i) x[i] += basis.at(i, j) * y[j];
  return x;
}

Mat stack_tight(const Polyhedron& p, const std::vector<std::size_t>& rows) {
  Mat m(0, p.n);
  for (const auto& r : p.A.rows()) m.push_row(r);
  for (auto i : rows) m.push_row(p.B.row(i));
  return m;
}

bool contains(const Polyhedron& p, const Vec& x) {
  if (x.size() != p.n) return false;
  for (std::size_t i = 0; i < p.A.nrows(); ++i)
    if (dot(p.A.row(i), x) != p.b[i]) return false;
  for (std::size_t i = 0; i < p.B.nrows(); ++i)
    if (dot(p.B.row(i), x) > p.d[i]) return false;
  return true;
}

std::vector<std::size_t> tight_rows_at(const Polyhedron& p, const Vec& x) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < p.B.nrows(); ++i)
    if (dot(p.B.row(i), x) == p.d[i]) t.push_back(i);
  return t;
}

bool is_vertex_point(const Polyhedron& p, const Vec& x) {
  if (!contains(p, x)) return false;
  return rank(stack_tight(p, tight_rows_at(p, x))) == p.n;
}

Vertex make_vertex(const Polyhedron& p, const Vec& x) {
  if (!contains(p, x)) throw invalid("PointNotInPolyhedron", "point outside P: " + vec_to_string(x));
  Vertex v{x, tight_rows_at(p, x)};
  if (rank(stack_tight(p, v.tight)) != p.n)
    throw invalid("NotAVertex", "point is not a vertex: " + vec_to_string(x));
  return v;
}

ValidationReport validate(const Polyhedron& p) {
  ValidationReport rep;
  check_shape(p, &rep.problems);
  rep.shape_ok = rep.problems.empty();
  if (!rep.shape_ok) return rep;

  // duplicate inequality rows (same halfspace up to positive scaling)
  std::map<std::pair<Vec, Rat>, std::size_t, bool (*)(const std::pair<Vec, Rat>&, const std::pair<Vec, Rat>&)>
      seen(+[](const std::pair<Vec, Rat>& a, const std::pair<Vec, Rat>& b) {
        if (lex_less(a.first, b.first)) return true;
        if (lex_less(b.first, a.first)) return false;
        return a.second < b.second;
      });
  for (std::size_t i = 0; i < p.B.nrows(); ++i) {
    if (is_zero(p.B.row(i))) continue;
    Vec g = integer_direction(p.B.row(i));
    // scale rhs by the same factor
    Rat factor;
    for (std::size_t j = 0; j < p.n; ++j)
      if (g[j] != 0) {
        factor = g[j] / p.B.at(i, j);
        break;
      }
    auto key = std::make_pair(g, p.d[i] * factor);
    auto it = seen.find(key);
    if (it != seen.end())
      rep.duplicate_rows.emplace_back(it->second, i);
    else
      seen.emplace(key, i);
  }
  if (!rep.duplicate_rows.empty()) rep.problems.push_back("DuplicateRows");

  Mat stacked = p.A;
  for (const auto& r : p.B.rows()) stacked.push_row(r);
  rep.pointed = stacked.nrows() > 0 && rank(stacked) == p.n;
  try {
    auto dir = recession_direction(p);
    rep.bounded_known = true;
    rep.bounded = !dir.has_value();
  } catch (const Error&) {
    rep.bounded_known = false;
  }
  if (rep.pointed) {
    try {
      rep.empty = enumerate_vertices(p).empty();
    } catch (const Error&) {
      // leave empty=false when enumeration is infeasible
    }
  } else {
    // check at least the equality system
    if (p.A.nrows() > 0 && solve(p.A, p.b).status == SolveStatus::Inconsistent) rep.empty = true;
  }
  return rep;
}

std::vector<Vertex> enumerate_vertices(const Polyhedron& p) {
  check_shape(p, nullptr);
  Mat stacked = p.A;
  for (const auto& r : p.B.rows()) stacked.push_row(r);
  if (stacked.nrows() == 0 || rank(stacked) < p.n) throw unsupported("NotPointed", "polyhedron is not pointed");
  std::size_t r_a = rank(p.A);
  std::size_t k = p.n - r_a;
  std::size_t m = p.B.nrows();
  if (binom_estimate(m, k) > 1e7) throw unsupported("SizeLimitExceeded", "vertex enumeration guard exceeded");

  std::map<Vec, Vertex, bool (*)(const Vec&, const Vec&)> found(&lex_less);
  if (k > m) return {};
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  bool more = true;
  while (more) {
    Mat sys = stack_tight(p, idx);
    if (rank(sys) == p.n) {
      Vec rhs = p.b;
      for (auto i : idx) rhs.push_back(p.d[i]);
      LinSolve s = solve(sys, rhs);
      if (s.status == SolveStatus::Unique && contains(p, s.x)) {
        if (!found.count(s.x)) {
          Vertex v{s.x, tight_rows_at(p, s.x)};
          found.emplace(v.point, std::move(v));
        }
      }
    }
    more = k > 0 && next_combination(idx, m);
    if (k == 0) more = false;
  }
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

std::pair<Polyhedron, AffineMap> reduce_to_full_dimension(const Polyhedron& p) {
  check_shape(p, nullptr);
  if (p.A.nrows() == 0) {
    AffineMap id;
    id.basis = Mat(p.n, p.n);
    for (std::size_t i = 0; i < p.n; ++i) id.basis.at(i, i) = 1;
    id.offset = Vec(p.n, Rat(0));
    return {p, id};
  }
  LinSolve s = solve(p.A, p.b);
  if (s.status == SolveStatus::Inconsistent) throw invalid("EmptyPolyhedron", "equality system is inconsistent");
  Vec x0 = s.x;
  std::vector<Vec> kb = kernel_basis(p.A);
  std::size_t k = kb.size();
  Polyhedron q;
  q.n = k;
  q.name = p.name;
  AffineMap map;
  map.offset = x0;
  map.basis = Mat(p.n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < p.n; ++i) map.basis.at(i, j) = kb[j][i];
  for (std::size_t i = 0; i < p.B.nrows(); ++i) {
    Vec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(p.B.row(i), kb[j]);
    Rat rhs = p.d[i] - dot(p.B.row(i), x0);
    if (is_zero(row)) {
      if (rhs < 0) throw invalid("EmptyPolyhedron", "trivially infeasible inequality after reduction");
      continue;  // constraint holds identically on the affine hull
    }
    q.B.push_row(std::move(row));
    q.d.push_back(rhs);
  }
  q.A = Mat(0, k);
  return {q, map};
}

bool are_adjacent(const Polyhedron& p, const Vertex& u, const Vertex& v) {
  if (u.point == v.point) throw invalid("SameVertex", "are_adjacent needs distinct vertices");
  std::vector<std::size_t> common;
  std::set_intersection(u.tight.begin(), u.tight.end(), v.tight.begin(), v.tight.end(),
                        std::back_inserter(common));
  return rank(stack_tight(p, common)) + 1 == p.n;
}

Face minimal_face(const Polyhedron& p, const Vertex& u, const Vertex& v) {
  Face f;
  std::set_intersection(u.tight.begin(), u.tight.end(), v.tight.begin(), v.tight.end(),
                        std::back_inserter(f.tight_rows));
  f.dim = p.n - rank(stack_tight(p, f.tight_rows));
  return f;
}

MinimalityReport is_minimal(const Polyhedron& p) {
  check_shape(p, nullptr);
  if (p.A.nrows() != 0) throw invalid("NotFullDimensional", "is_minimal expects no equality rows");
  auto verts = enumerate_vertices(p);
  std::vector<Vec> pts;
  for (const auto& v : verts) pts.push_back(v.point);
  if (affine_rank(pts) != p.n) throw invalid("NotFullDimensional", "polytope does not span R^n");

  MinimalityReport rep;
  // duplicates, distinct from redundancy
  ValidationReport vr = validate(p);
  rep.duplicate_rows = vr.duplicate_rows;
  for (std::size_t i = 0; i < p.B.nrows(); ++i) {
    std::vector<Vec> tight_pts;
    for (const auto& v : verts)
      if (std::binary_search(v.tight.begin(), v.tight.end(), i)) tight_pts.push_back(v.point);
    bool facet = !tight_pts.empty() && affine_rank(tight_pts) + 1 == p.n;
    if (!facet) rep.redundant_rows.push_back(i);
  }
  rep.minimal = rep.redundant_rows.empty() && rep.duplicate_rows.empty();
  return rep;
}

bool is_simple(const Polyhedron& p) {
  MinimalityReport mr = is_minimal(p);  // throws NotFullDimensional as needed
  if (!mr.redundant_rows.empty() || !mr.duplicate_rows.empty())
    throw invalid("NotMinimal", "is_simple expects a minimal representation");
  for (const auto& v : enumerate_vertices(p))
    if (v.tight.size() != p.n) return false;
  return true;
}

Polyhedron facets_from_vertices(const std::vector<Vec>& V) {
  if (V.empty()) throw invalid("DegenerateInput", "no points");
  std::size_t n = V[0].size();
  if (n < 1 || n > 4) throw unsupported("DimensionTooHigh", "hull supports 1 <= dim <= 4");
  if (V.size() > 32) throw unsupported("SizeLimitExceeded", "hull supports at most 32 points");
  if (affine_rank(V) != n) throw invalid("DegenerateInput", "points do not affinely span R^n");

  std::set<std::pair<Vec, Rat>, bool (*)(const std::pair<Vec, Rat>&, const std::pair<Vec, Rat>&)> facets(
      +[](const std::pair<Vec, Rat>& a, const std::pair<Vec, Rat>& b) {
        if (lex_less(a.first, b.first)) return true;
        if (lex_less(b.first, a.first)) return false;
        return a.second < b.second;
      });

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  bool more = true;
  while (more) {
    std::vector<Vec> sub;
    for (auto i : idx) sub.push_back(V[i]);
    if (affine_rank(sub) + 1 == n) {
      Mat diffs(0, n);
      for (std::size_t i = 1; i < sub.size(); ++i) diffs.push_row(sub[i] - sub[0]);
      auto kb = kernel_basis(diffs);
      if (kb.size() == 1) {
        Vec g = kb[0];
        Rat off = dot(g, sub[0]);
        bool below = true, above = true;
        for (const auto& v : V) {
          Rat s = dot(g, v);
          if (s > off) below = false;
          if (s < off) above = false;
        }
        if (below || above) {
          if (!below) {
            for (auto& x : g) x = -x;
            off = -off;
          }
          facets.emplace(std::move(g), std::move(off));
        }
      }
    }
    more = next_combination(idx, V.size());
  }
  Polyhedron p;
  p.n = n;
  p.A = Mat(0, n);
  p.B = Mat(0, n);
  for (const auto& f : facets) {
    p.B.push_row(f.first);
    p.d.push_back(f.second);
  }
  if (p.B.nrows() == 0) throw invalid("DegenerateInput", "no facets found");
  return p;
}

Cone inner_cone(const Polyhedron& p, const std::vector<Vertex>& verts, const Vertex& v,
                const std::optional<Face>& face) {
  Cone cone;
  std::set<Vec, bool (*)(const Vec&, const Vec&)> gens(&lex_less);
  for (const auto& w : verts) {
    if (w.point == v.point) continue;
    if (face) {
      bool in_face = std::includes(w.tight.begin(), w.tight.end(), face->tight_rows.begin(),
                                   face->tight_rows.end());
      if (!in_face) continue;
    }
    if (are_adjacent(p, v, w)) gens.insert(integer_direction(w.point - v.point));
  }
  cone.generators.assign(gens.begin(), gens.end());
  return cone;
}

Cone inner_cone(const Polyhedron& p, const Vertex& v, const std::optional<Face>& face) {
  return inner_cone(p, enumerate_vertices(p), v, face);
}

}  // namespace polywalk
