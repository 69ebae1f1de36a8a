#include "polywalk/ecw.hpp"

#include <algorithm>
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

// Bounded + full-dimensional + minimal + simple, with distinct errors.
std::vector<Vertex> checked_vertices(const Polyhedron& p) {
  MinimalityReport mr = is_minimal(p);  // throws NotFullDimensional
  if (!mr.minimal) throw invalid("NotMinimal", "representation has redundant or duplicate rows");
  if (!is_simple(p)) throw invalid("NotSimple", "polytope has a degenerate vertex");
  ValidationReport vr = validate(p);
  if (!vr.bounded_known || !vr.bounded) throw unsupported("Unbounded", "polytope must be bounded");
  return enumerate_vertices(p);
}

std::vector<Vec> negated_sorted(const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(scale(g, Rat(-1)));
  std::sort(out.begin(), out.end(), &lex_less);
  return out;
}

SymmetricConeResult symmetric_condition(const Polyhedron& p, const std::vector<Vertex>& verts) {
  SymmetricConeResult res;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      Face f = minimal_face(p, verts[a], verts[b]);
      std::vector<Vec> gu = inner_cone(p, verts, verts[a], f).generators;
      std::vector<Vec> gv = inner_cone(p, verts, verts[b], f).generators;
      if (gu != negated_sorted(gv)) {
        res.holds = false;
        res.witness_pair = {verts[a].point, verts[b].point};
        return res;
      }
    }
  res.holds = true;
  return res;
}

}  // namespace

ElementaryConeResult elementary_cone_condition(const Polyhedron& p) {
  std::vector<Vertex> verts = checked_vertices(p);
  ElementaryConeResult res;
  for (const auto& v : verts) {
    Cone cone = inner_cone(p, verts, v);
    for (std::size_t i = 0; i < p.B.nrows(); ++i) {
      bool pos = false, neg = false;
      for (const auto& g : cone.generators) {
        Rat s = dot(p.B.row(i), g);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (pos && neg) {  // hyperplane B_i x = 0 splits the cone interior
        res.holds = false;
        res.witness_vertex = v.point;
        res.witness_row = i;
        return res;
      }
    }
  }
  res.holds = true;
  return res;
}

SymmetricConeResult symmetric_inner_cone_condition(const Polyhedron& p) {
  return symmetric_condition(p, checked_vertices(p));
}

RecognitionResult recognize_nd_parallelotope(const Polyhedron& p) {
  std::vector<Vertex> verts = checked_vertices(p);
  RecognitionResult res;
  std::size_t f = p.B.nrows();
  if (f <= p.n || f > 2 * p.n) {
    res.failure = "facet count " + std::to_string(f) + " outside (n, 2n]";
    return res;
  }
  std::size_t d = f - p.n;

  SymmetricConeResult sym = symmetric_condition(p, verts);
  if (!sym.holds) {
    res.failure = "symmetric inner cone condition fails";
    res.witness_pair = sym.witness_pair;
    return res;
  }

  for (const auto& v : verts) {
    bool found = false;
    std::size_t keep = p.n - d;  // rows kept tight cut out a candidate d-face
    std::vector<std::size_t> sel(keep);
    std::iota(sel.begin(), sel.end(), 0);
    bool more = true;
    while (more && !found) {
      std::vector<std::size_t> rows;
      for (auto i : sel) rows.push_back(v.tight[i]);
      Mat sub(0, p.n);
      for (auto i : rows) sub.push_row(p.B.row(i));
      if (keep == 0 || rank(sub) == keep) {
        std::vector<const Vertex*> face;
        for (const auto& w : verts)
          if (std::includes(w.tight.begin(), w.tight.end(), rows.begin(), rows.end()))
            face.push_back(&w);
        if (face.size() == (std::size_t(1) << d)) {
          std::vector<Vec> pts;
          for (auto* w : face) pts.push_back(w->point);
          if (affine_rank(pts) == d) {
            // corner-sum test: v plus each subset of its edge steps in the
            // face must reproduce exactly the face's vertex set
            std::vector<Vec> steps;
            for (auto* w : face)
              if (w->point != v.point && are_adjacent(p, v, *w))
                steps.push_back(w->point - v.point);
            if (steps.size() == d) {
              std::set<Vec, bool (*)(const Vec&, const Vec&)> want(&lex_less);
              for (const auto& x : pts) want.insert(x);
              bool all_hit = true;
              std::set<Vec, bool (*)(const Vec&, const Vec&)> got(&lex_less);
              for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
                Vec x = v.point;
                for (std::size_t i = 0; i < d; ++i)
                  if (mask & (std::size_t(1) << i)) x = x + steps[i];
                if (!want.count(x)) {
                  all_hit = false;
                  break;
                }
                got.insert(x);
              }
              if (all_hit && got.size() == want.size()) {
                res.certificates.push_back({v.point, rows, pts});
                found = true;
              }
            }
          }
        }
      }
      more = keep > 0 && next_combination(sel, v.tight.size());
      if (keep == 0) more = false;
    }
    if (!found) {
      res.failure = "vertex " + vec_to_string(v.point) + " lies on no d-parallelotope face";
      res.certificates.clear();
      return res;
    }
  }
  res.is_ndp = true;
  res.d = d;
  return res;
}

std::vector<Cone> elementary_cones_enumerate(const Polyhedron& p) {
  if (p.A.nrows() > 0) throw invalid("NotFullDimensional", "arrangement needs no equality rows");
  std::set<Vec, bool (*)(const Vec&, const Vec&)> normal_set(&lex_less);
  for (const auto& row : p.B.rows())
    if (!is_zero(row)) normal_set.insert(canonical_direction(row));
  std::vector<Vec> normals(normal_set.begin(), normal_set.end());
  std::size_t h = normals.size();
  if (h > 12) throw unsupported("SizeLimitExceeded", "at most 12 distinct hyperplanes");
  Mat nm(0, p.n);
  for (const auto& nrm : normals) nm.push_row(nrm);
  if (rank(nm) != p.n)
    throw unsupported("DegenerateArrangement", "normals must span R^n for pointed cells");

  // 1-dimensional arrangement faces = candidate extreme rays.
  std::set<Vec, bool (*)(const Vec&, const Vec&)> ray_set(&lex_less);
  std::size_t k = p.n - 1;
  if (k == 0) {
    Vec e{Rat(1)};
    ray_set.insert(e);
    ray_set.insert(scale(e, Rat(-1)));
  } else if (k <= h) {
    std::vector<std::size_t> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    do {
      Mat sub(0, p.n);
      for (auto i : sel) sub.push_row(normals[i]);
      auto kb = kernel_basis(sub);
      if (kb.size() == 1) {
        ray_set.insert(kb[0]);
        ray_set.insert(scale(kb[0], Rat(-1)));
      }
    } while (next_combination(sel, h));
  }
  std::vector<Vec> rays(ray_set.begin(), ray_set.end());

  std::vector<Cone> cells;
  for (std::size_t sigma = 0; sigma < (std::size_t(1) << h); ++sigma) {
    std::vector<int> sign(h);
    for (std::size_t i = 0; i < h; ++i) sign[i] = (sigma >> i) & 1 ? 1 : -1;
    std::vector<Vec> contained;
    for (const auto& r : rays) {
      bool ok = true;
      for (std::size_t i = 0; i < h && ok; ++i)
        if (Rat(sign[i]) * dot(normals[i], r) < 0) ok = false;
      if (ok) contained.push_back(r);
    }
    if (contained.empty()) continue;
    Vec sum(p.n, Rat(0));
    for (const auto& r : contained) sum = sum + r;
    bool interior = true;
    for (std::size_t i = 0; i < h && interior; ++i)
      if (Rat(sign[i]) * dot(normals[i], sum) <= 0) interior = false;
    if (!interior) continue;  // lower-dimensional sign cell
    cells.push_back(Cone{std::move(contained)});
  }
  return cells;
}

}  // namespace polywalk
