#include "polywalk/circuits.hpp"

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

// Kernel generators of (A; B_S) over all S of the minimal size that can
// reach rank n-1. Every generator is a circuit (rank certificate), so the
// two public enumeration routes differ only in the final filter.
std::vector<Circuit> candidate_generators(const Polyhedron& p) {
  Mat stacked = p.A;
  for (const auto& r : p.B.rows()) stacked.push_row(r);
  if (stacked.nrows() == 0 || rank(stacked) < p.n) throw unsupported("NotPointed", "polyhedron is not pointed");
  std::size_t r_a = rank(p.A);
  std::map<Vec, Circuit, bool (*)(const Vec&, const Vec&)> found(&lex_less);
  if (r_a + 1 <= p.n) {
    std::size_t k = p.n - 1 - r_a;
    std::size_t m = p.B.nrows();
    if (binom_estimate(m, k) > 5e6) throw unsupported("SizeLimitExceeded", "circuit enumeration guard exceeded");
    if (k <= m) {
      auto fast = IntRowView::make(stacked);
      std::size_t ma = p.A.nrows();
      std::vector<std::size_t> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      bool more = true;
      while (more) {
        std::optional<Vec> g;
        if (fast) {
          std::vector<std::size_t> sel(ma);
          std::iota(sel.begin(), sel.end(), 0);
          for (auto i : idx) sel.push_back(ma + i);
          g = fast->kernel_if_line(sel);
        } else {
          auto kb = kernel_basis(stack_tight(p, idx));
          if (kb.size() == 1) g = kb[0];
        }
        if (g && !found.count(*g)) found.emplace(*g, Circuit{*g, mat_vec(p.B, *g)});
        more = k > 0 && next_combination(idx, m);
        if (k == 0) more = false;
      }
    }
  }
  std::vector<Circuit> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

std::vector<std::size_t> support(const Vec& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

bool strict_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

NormalizedCircuit normalize_circuit(const Polyhedron& p, const Vec& v) {
  if (is_zero(v)) throw invalid("ZeroVector", "cannot normalize the zero vector");
  if (p.A.nrows() > 0 && !is_zero(mat_vec(p.A, v)))
    throw invalid("NotInKernel", "vector is not in ker(A)");
  int sign = 1;
  Vec g = canonical_direction(v, &sign);
  return {Circuit{g, mat_vec(p.B, g)}, sign};
}

std::vector<Circuit> circuits_rank_method(const Polyhedron& p) {
  // Rank certificate: the maximal tight submatrix B' for each
  // generator already contains a rank-(n-1) subset, so the rank condition
  // holds for every candidate by construction. Assert it anyway.
  std::vector<Circuit> cands = candidate_generators(p);
  std::vector<Circuit> out;
  for (auto& c : cands) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.B.nrows(); ++i)
      if (c.image[i] == 0) tight.push_back(i);
    if (rank(stack_tight(p, tight)) + 1 == p.n) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Circuit> circuits_support_oracle(const Polyhedron& p) {
  std::vector<Circuit> cands = candidate_generators(p);
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(cands.size());
  for (const auto& c : cands) supports.push_back(support(c.image));
  std::vector<Circuit> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size() && minimal; ++j)
      if (j != i && strict_subset(supports[j], supports[i])) minimal = false;
    if (minimal) out.push_back(cands[i]);
  }
  return out;
}

std::vector<Vec> feasible_circuits_at(const Polyhedron& p, const std::vector<Circuit>& circuits,
                                      const Vec& x) {
  if (!contains(p, x)) throw invalid("PointNotInPolyhedron", "point outside P: " + vec_to_string(x));
  std::vector<std::size_t> tight = tight_rows_at(p, x);
  std::vector<Vec> out;
  for (const auto& c : circuits) {
    for (int s : {+1, -1}) {
      bool ok = true;
      for (auto i : tight) {
        Rat v = s > 0 ? c.image[i] : Rat(-c.image[i]);
        if (v > 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(s > 0 ? c.g : scale(c.g, Rat(-1)));
    }
  }
  std::sort(out.begin(), out.end(), &lex_less);
  return out;
}

std::vector<Vec> feasible_circuits_at(const Polyhedron& p, const Vec& x) {
  return feasible_circuits_at(p, circuits_rank_method(p), x);
}

std::pair<Vec, Rat> maximal_step(const Polyhedron& p, const Vec& x, const Vec& g) {
  if (!contains(p, x)) throw invalid("PointNotInPolyhedron", "point outside P: " + vec_to_string(x));
  if (is_zero(g)) throw invalid("ZeroVector", "step direction is zero");
  bool any_pos = false;
  Rat alpha;
  for (std::size_t i = 0; i < p.B.nrows(); ++i) {
    Rat prod = dot(p.B.row(i), g);
    if (prod <= 0) continue;
    Rat slack = p.d[i] - dot(p.B.row(i), x);
    Rat ratio = slack / prod;
    if (!any_pos || ratio < alpha) alpha = ratio;
    any_pos = true;
  }
  if (!any_pos) throw unsupported("UnboundedDirection", "no inequality bounds the step");
  if (alpha <= 0) throw invalid("InfeasibleDirection", "direction infeasible at " + vec_to_string(x));
  Vec y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * g[i];
  return {std::move(y), std::move(alpha)};
}

}  // namespace polywalk
