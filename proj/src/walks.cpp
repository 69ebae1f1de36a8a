#include "polywalk/walks.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "polywalk/errors.hpp"

namespace polywalk {
namespace {

using NodeMap = std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)>;

void require_bounded(const Polyhedron& p, const std::vector<Circuit>& circuits) {
  // P is bounded iff no circuit orientation is a recession direction.
  for (const auto& c : circuits) {
    for (int s : {+1, -1}) {
      bool recede = true;
      for (const auto& v : c.image) {
        Rat q = s > 0 ? v : Rat(-v);
        if (q > 0) {
          recede = false;
          break;
        }
      }
      if (recede) throw unsupported("Unbounded", "polyhedron has a recession circuit");
    }
  }
}

struct Expansion {
  Vec direction;
  Vec point;
  Rat alpha;
};

// Equivalent to feasible_circuits_at + maximal_step per direction, but reuses
// B x and the stored circuit images instead of re-deriving dot products.
std::vector<Expansion> expand(const Polyhedron& p, const std::vector<Circuit>& circuits,
                              const Vec& x) {
  Vec bx = mat_vec(p.B, x);
  std::size_t m = p.B.nrows();
  std::vector<Expansion> out;
  for (const auto& c : circuits) {
    for (int s : {+1, -1}) {
      bool feasible = true;
      for (std::size_t j = 0; j < m && feasible; ++j)
        if (bx[j] == p.d[j] && (s > 0 ? c.image[j] > 0 : c.image[j] < 0)) feasible = false;
      if (!feasible) continue;
      bool any = false;
      Rat alpha;
      for (std::size_t j = 0; j < m; ++j) {
        Rat v = s > 0 ? c.image[j] : Rat(-c.image[j]);
        if (v <= 0) continue;
        Rat r = (p.d[j] - bx[j]) / v;
        if (!any || r < alpha) alpha = r;
        any = true;
      }
      if (!any) throw unsupported("Unbounded", "unbounded circuit direction during expansion");
      Vec dir = s > 0 ? c.g : scale(c.g, Rat(-1));
      Vec y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + alpha * dir[i];
      out.push_back({std::move(dir), std::move(y), std::move(alpha)});
    }
  }
  return out;
}

struct Bfs {
  StepGraph graph;
  std::vector<std::optional<std::size_t>> parent_arc;  // arc leading into node
};

Bfs closure(const Polyhedron& p, const std::vector<Circuit>& circuits,
            const std::vector<Vertex>& verts, const StepGraphOptions& opt) {
  require_bounded(p, circuits);
  Bfs bfs;
  StepGraph& g = bfs.graph;
  NodeMap ids(&lex_less);
  auto add_node = [&](const Vec& pt) {
    auto it = ids.find(pt);
    if (it != ids.end()) return it->second;
    std::size_t id = g.points.size();
    ids.emplace(pt, id);
    g.points.push_back(pt);
    g.out.emplace_back();
    bfs.parent_arc.emplace_back();
    return id;
  };
  for (const auto& v : verts) add_node(v.point);
  g.n_vertices = g.points.size();
  if (opt.stop_on_noninteger) {
    for (std::size_t i = 0; i < g.n_vertices; ++i)
      if (!is_integral(g.points[i])) {
        g.noninteger_node = i;
        return bfs;
      }
  }
  std::deque<std::size_t> frontier;
  for (std::size_t i = 0; i < g.n_vertices; ++i) frontier.push_back(i);
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    for (auto& e : expand(p, circuits, g.points[u])) {
      bool fresh = !ids.count(e.point);
      if (fresh && g.points.size() >= opt.max_points) return bfs;  // budget hit, incomplete
      std::size_t v = add_node(e.point);
      std::size_t arc_id = g.arcs.size();
      g.arcs.push_back({u, v, std::move(e.direction), std::move(e.alpha)});
      g.out[u].push_back(arc_id);
      if (fresh) {
        bfs.parent_arc[v] = arc_id;
        if (opt.stop_on_noninteger && !is_integral(g.points[v])) {
          g.noninteger_node = v;
          return bfs;
        }
        frontier.push_back(v);
      }
    }
  }
  g.complete = true;
  return bfs;
}

CircuitWalk path_from_root(const Bfs& bfs, std::size_t node) {
  std::vector<std::size_t> arcs;
  std::size_t cur = node;
  while (bfs.parent_arc[cur]) {
    arcs.push_back(*bfs.parent_arc[cur]);
    cur = bfs.graph.arcs[*bfs.parent_arc[cur]].from;
  }
  std::reverse(arcs.begin(), arcs.end());
  CircuitWalk w;
  w.points.push_back(bfs.graph.points[cur]);
  for (auto a : arcs) {
    const Arc& arc = bfs.graph.arcs[a];
    w.steps.push_back({arc.direction, arc.alpha});
    w.points.push_back(bfs.graph.points[arc.to]);
  }
  return w;
}

Rat sq_dist(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

std::string level_name(Level level) {
  switch (level) {
    case Level::GCW: return "GCW";
    case Level::ICW: return "ICW";
    case Level::VCW: return "VCW";
    case Level::ECW: return "ECW";
    default: return "Unknown";
  }
}

StepGraph reachable_step_graph(const Polyhedron& p, const std::vector<Circuit>& circuits,
                               const StepGraphOptions& opt) {
  Bfs bfs = closure(p, circuits, enumerate_vertices(p), opt);
  if (!bfs.graph.complete && !bfs.graph.noninteger_node)
    throw unsupported("BudgetExceeded", "step graph exceeded max_points");
  return std::move(bfs.graph);
}

StepGraph reachable_step_graph(const Polyhedron& p, const StepGraphOptions& opt) {
  return reachable_step_graph(p, circuits_rank_method(p), opt);
}

CircuitWalk walk(const Polyhedron& p, const Vec& start, const std::vector<Vec>& directives) {
  if (!is_vertex_point(p, start)) throw invalid("NotAVertex", "walk must start at a vertex");
  CircuitWalk w;
  w.points.push_back(start);
  for (std::size_t i = 0; i < directives.size(); ++i) {
    const Vec& x = w.points.back();
    std::vector<std::size_t> tight = tight_rows_at(p, x);
    Vec image = mat_vec(p.B, directives[i]);
    for (auto j : tight)
      if (image[j] > 0)
        throw invalid("InfeasibleDirection",
                      "directive " + std::to_string(i) + " infeasible at " + vec_to_string(x));
    auto [y, alpha] = maximal_step(p, x, directives[i]);
    w.steps.push_back({directives[i], std::move(alpha)});
    w.points.push_back(std::move(y));
  }
  return w;
}

CircuitWalk greedy_walk(const Polyhedron& p, const std::vector<Circuit>& circuits,
                        const Vec& start, const Vec& target, std::size_t max_steps) {
  CircuitWalk w;
  w.points.push_back(start);
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Vec x = w.points.back();
    if (x == target) break;
    std::optional<Expansion> best;
    for (auto& e : expand(p, circuits, x)) {
      if (!best || sq_dist(e.point, target) < sq_dist(best->point, target) ||
          (sq_dist(e.point, target) == sq_dist(best->point, target) &&
           lex_less(e.point, best->point)))
        best = std::move(e);
    }
    if (!best || sq_dist(best->point, target) >= sq_dist(x, target)) break;  // no progress
    w.steps.push_back({best->direction, best->alpha});
    w.points.push_back(best->point);
  }
  return w;
}

bool is_ecw_one_step(const Polyhedron& p, const std::vector<Vertex>& verts) {
  std::vector<Circuit> circuits = circuits_rank_method(p);
  require_bounded(p, circuits);
  for (const auto& v : verts) {
    for (auto& e : expand(p, circuits, v.point)) {
      if (!is_vertex_point(p, e.point)) return false;
      if (!are_adjacent(p, v, make_vertex(p, e.point))) return false;
    }
  }
  return true;
}

bool is_ecw_one_step(const Polyhedron& p) { return is_ecw_one_step(p, enumerate_vertices(p)); }

Classification classify_hierarchy(const Polyhedron& p, const std::vector<Vertex>& verts,
                                  std::size_t budget_points) {
  return classify_hierarchy(p, verts, circuits_rank_method(p), budget_points);
}

Classification classify_hierarchy(const Polyhedron& p, const std::vector<Vertex>& verts,
                                  const std::vector<Circuit>& circuits,
                                  std::size_t budget_points) {
  require_bounded(p, circuits);
  for (const auto& v : verts)
    if (!is_integral(v.point))
      throw invalid("NotIntegralPolytope", "vertex " + vec_to_string(v.point) + " is not integral");

  // One-step analysis from the vertices decides ECW and VCW by induction.
  bool all_vertex = true;
  bool all_edge = true;
  std::optional<CircuitWalk> vcw_witness;  // a vertex step to a non-adjacent vertex
  for (const auto& v : verts) {
    for (auto& e : expand(p, circuits, v.point)) {
      if (!is_vertex_point(p, e.point)) {
        all_vertex = false;
        all_edge = false;
      } else if (all_edge && !are_adjacent(p, v, make_vertex(p, e.point))) {
        all_edge = false;
        CircuitWalk w;
        w.points = {v.point, e.point};
        w.steps = {{e.direction, e.alpha}};
        vcw_witness = std::move(w);
      }
      if (!all_vertex) break;
    }
    if (!all_vertex) break;
  }
  Classification c;
  if (all_vertex) {
    if (all_edge) {
      c.level = Level::ECW;
      c.detail = "every maximal step from every vertex travels along an edge";
    } else {
      c.level = Level::VCW;
      c.witness_walk = std::move(vcw_witness);
      c.witness_point = c.witness_walk->points.back();
      c.detail = "all vertex steps land on vertices; shown step skips to a non-adjacent one";
    }
    return c;
  }

  StepGraphOptions opt;
  opt.stop_on_noninteger = true;
  opt.max_points = budget_points;
  Bfs bfs = closure(p, circuits, verts, opt);
  if (bfs.graph.noninteger_node) {
    c.level = Level::GCW;
    c.witness_walk = path_from_root(bfs, *bfs.graph.noninteger_node);
    c.witness_point = bfs.graph.points[*bfs.graph.noninteger_node];
    c.detail = "walk reaches a non-integral point";
    return c;
  }
  if (!bfs.graph.complete) {
    c.level = Level::Unknown;
    c.detail = "budget exhausted before closure; ICW vs GCW undecided";
    return c;
  }
  c.level = Level::ICW;
  for (std::size_t i = bfs.graph.n_vertices; i < bfs.graph.points.size(); ++i) {
    if (!is_vertex_point(p, bfs.graph.points[i])) {
      c.witness_walk = path_from_root(bfs, i);
      c.witness_point = bfs.graph.points[i];
      break;
    }
  }
  c.detail = "closure is integral; shown walk reaches an integral non-vertex";
  return c;
}

Classification classify_hierarchy(const Polyhedron& p, std::size_t budget_points) {
  return classify_hierarchy(p, enumerate_vertices(p), budget_points);
}

ReversibilityReport all_steps_reversible(const Polyhedron& p, const std::vector<Vertex>& verts,
                                         std::size_t budget_points) {
  return all_steps_reversible(p, verts, circuits_rank_method(p), budget_points);
}

ReversibilityReport all_steps_reversible(const Polyhedron& p, const std::vector<Vertex>& verts,
                                         const std::vector<Circuit>& circuits,
                                         std::size_t budget_points) {
  require_bounded(p, circuits);
  ReversibilityReport rep;
  NodeMap ids(&lex_less);
  std::vector<Vec> points;
  auto add = [&](const Vec& pt) {
    auto it = ids.find(pt);
    if (it != ids.end()) return std::pair<std::size_t, bool>{it->second, false};
    std::size_t id = points.size();
    ids.emplace(pt, id);
    points.push_back(pt);
    return std::pair<std::size_t, bool>{id, true};
  };
  std::deque<std::size_t> frontier;
  for (const auto& v : verts) frontier.push_back(add(v.point).first);
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    for (auto& e : expand(p, circuits, points[u])) {
      // Local reversal check on the arc just produced.
      Vec back = scale(e.direction, Rat(-1));
      bool ok = false;
      try {
        auto [z, beta] = maximal_step(p, e.point, back);
        ok = (z == points[u]) && (beta == e.alpha);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        rep.reversible = false;
        rep.decided = true;
        CircuitWalk w;
        w.points = {points[u], e.point};
        w.steps = {{e.direction, e.alpha}};
        rep.witness = std::move(w);
        return rep;
      }
      auto [v, fresh] = add(e.point);
      if (fresh) {
        if (points.size() > budget_points) {
          rep.decided = false;
          return rep;
        }
        frontier.push_back(v);
      }
    }
  }
  rep.reversible = true;
  rep.decided = true;
  return rep;
}

ReversibilityReport all_steps_reversible(const Polyhedron& p, std::size_t budget_points) {
  return all_steps_reversible(p, enumerate_vertices(p), budget_points);
}

DistanceReport distances_and_diameters(const Polyhedron& p, DistanceKind kind,
                                       std::size_t budget_points) {
  DistanceReport rep;
  if (kind == DistanceKind::Combinatorial) {
    std::vector<Vertex> verts = enumerate_vertices(p);
    std::size_t nv = verts.size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j)
        if (are_adjacent(p, verts[i], verts[j])) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
    rep.dist.assign(nv, std::vector<long>(nv, -1));
    for (std::size_t s = 0; s < nv; ++s) {
      rep.dist[s][s] = 0;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (auto v : adj[u])
          if (rep.dist[s][v] < 0) {
            rep.dist[s][v] = rep.dist[s][u] + 1;
            q.push_back(v);
          }
      }
    }
    for (const auto& v : verts) rep.vertices.push_back(v.point);
  } else {
    std::vector<Circuit> circuits = circuits_rank_method(p);
    StepGraphOptions opt;
    opt.stop_on_noninteger = true;
    opt.max_points = budget_points;
    Bfs bfs = closure(p, circuits, enumerate_vertices(p), opt);
    if (bfs.graph.noninteger_node)
      throw unsupported("GCWUnsupported", "circuit distances need an integral step graph");
    if (!bfs.graph.complete) throw unsupported("BudgetExceeded", "step graph exceeded budget");
    const StepGraph& g = bfs.graph;
    std::size_t nv = g.n_vertices;
    std::size_t nn = g.points.size();
    rep.dist.assign(nv, std::vector<long>(nv, -1));
    for (std::size_t s = 0; s < nv; ++s) {
      std::vector<long> d(nn, -1);
      d[s] = 0;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (auto a : g.out[u]) {
          std::size_t v = g.arcs[a].to;
          if (d[v] < 0) {
            d[v] = d[u] + 1;
            q.push_back(v);
          }
        }
      }
      for (std::size_t t = 0; t < nv; ++t) rep.dist[s][t] = d[t];
    }
    rep.vertices.assign(g.points.begin(), g.points.begin() + nv);
  }
  for (const auto& row : rep.dist)
    for (long v : row)
      if (v > rep.diameter) rep.diameter = v;
  return rep;
}

}  // namespace polywalk
