// Python bindings. Polyhedra travel as JSON strings (same schema as the CLI);
// exact rationals cross the boundary as "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "polywalk/cdg.hpp"
#include "polywalk/circuits.hpp"
#include "polywalk/ecw.hpp"
#include "polywalk/errors.hpp"
#include "polywalk/families.hpp"
#include "polywalk/json_io.hpp"
#include "polywalk/linalg.hpp"
#include "polywalk/walks.hpp"

namespace py = pybind11;
using namespace polywalk;

namespace {

Polyhedron load(const std::string& text) { return polyhedron_from_json(Json::parse(text)); }

std::string dump(const Polyhedron& p) { return dump_json(polyhedron_to_json(p)); }

Vec to_vec(const std::vector<std::string>& xs) {
  Vec v;
  for (const auto& s : xs) v.push_back(rat_from_string(s));
  return v;
}

std::vector<std::string> from_vec(const Vec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(rat_to_string(x));
  return out;
}

Mat stacked(const Polyhedron& p) {
  Mat m(0, p.n);
  for (const auto& r : p.A.rows()) m.push_row(r);
  for (const auto& r : p.B.rows()) m.push_row(r);
  return m;
}

}  // namespace

PYBIND11_MODULE(polywalk_core, m) {
  m.doc() = "exact circuit walks on rational polyhedra";

  py::register_exception<Error>(m, "PolywalkError");

  // ---- families ----------------------------------------------------------
  m.def("fig2", [](const std::string& which) { return dump(fig2(which.at(0))); }, py::arg("which"));
  m.def("fig3", [] { return dump(fig3_polytope()); });
  m.def(
      "transportation",
      [](std::vector<long long> u, std::vector<long long> v) {
        return dump(transportation({std::move(u), std::move(v)}));
      },
      py::arg("supplies"), py::arg("demands"));
  m.def(
      "partition_bounded",
      [](std::size_t n, std::size_t k, std::vector<long long> lower,
         std::vector<long long> upper) {
        return dump(partition_bounded({n, k, std::move(lower), std::move(upper)}));
      },
      py::arg("n_items"), py::arg("k"), py::arg("lower"), py::arg("upper"));
  m.def(
      "partition_fixed",
      [](std::size_t n, std::size_t k, std::vector<long long> sizes) {
        return dump(partition_fixed({n, k, sizes, sizes}));
      },
      py::arg("n_items"), py::arg("k"), py::arg("sizes"));
  m.def(
      "matroid_uniform",
      [](long long rank, std::size_t ground) {
        return dump(matroid_polytope(MatroidSpec::uniform(rank, ground)));
      },
      py::arg("rank"), py::arg("ground"));
  m.def(
      "matroid_graphic",
      [](std::size_t nodes, std::vector<std::pair<std::size_t, std::size_t>> edges) {
        return dump(matroid_polytope(MatroidSpec::graphic(nodes, edges)));
      },
      py::arg("nodes"), py::arg("edges"));
  m.def(
      "nd_parallelotope",
      [](std::size_t n, std::size_t d, std::optional<unsigned> skew_seed) {
        std::optional<AffineMap> skew;
        if (skew_seed) skew = random_unimodular_skew(n, *skew_seed);
        return dump(nd_parallelotope(n, d, skew));
      },
      py::arg("n"), py::arg("d"), py::arg("skew_seed") = std::nullopt);

  // ---- analysis ----------------------------------------------------------
  m.def(
      "vertices",
      [](const std::string& poly) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : enumerate_vertices(load(poly))) out.push_back(from_vec(v.point));
        return out;
      },
      py::arg("polyhedron_json"));
  m.def(
      "circuits",
      [](const std::string& poly, const std::string& method) {
        Polyhedron p = load(poly);
        auto cs = method == "oracle" ? circuits_support_oracle(p) : circuits_rank_method(p);
        std::vector<std::vector<std::string>> out;
        for (const auto& c : cs) out.push_back(from_vec(c.g));
        return out;
      },
      py::arg("polyhedron_json"), py::arg("method") = "rank");
  m.def(
      "maximal_step",
      [](const std::string& poly, const std::vector<std::string>& x,
         const std::vector<std::string>& g) {
        auto [y, alpha] = maximal_step(load(poly), to_vec(x), to_vec(g));
        return py::make_tuple(from_vec(y), rat_to_string(alpha));
      },
      py::arg("polyhedron_json"), py::arg("point"), py::arg("direction"));
  m.def(
      "walk",
      [](const std::string& poly, const std::vector<std::string>& start,
         const std::vector<std::vector<std::string>>& dirs) {
        std::vector<Vec> directives;
        for (const auto& d : dirs) directives.push_back(to_vec(d));
        return dump_json(walk_to_json(walk(load(poly), to_vec(start), directives)));
      },
      py::arg("polyhedron_json"), py::arg("start"), py::arg("directions"));
  m.def(
      "classify",
      [](const std::string& poly, std::size_t budget) {
        return dump_json(classification_to_json(classify_hierarchy(load(poly), budget)));
      },
      py::arg("polyhedron_json"), py::arg("budget_points") = 50000);
  m.def(
      "check_tu", [](const std::string& poly) { return is_totally_unimodular(stacked(load(poly))).tu; },
      py::arg("polyhedron_json"));
  m.def(
      "check_ecw",
      [](const std::string& poly) {
        Polyhedron p = load(poly);
        py::dict out;
        out["elementary"] = elementary_cone_condition(p).holds;
        out["symmetric"] = symmetric_inner_cone_condition(p).holds;
        auto rec = recognize_nd_parallelotope(p);
        out["is_ndp"] = rec.is_ndp;
        if (rec.is_ndp) out["d"] = rec.d;
        return out;
      },
      py::arg("polyhedron_json"));
  m.def(
      "diameter",
      [](const std::string& poly, const std::string& kind) {
        DistanceKind k =
            kind == "circuit" ? DistanceKind::Circuit : DistanceKind::Combinatorial;
        return distances_and_diameters(load(poly), k).diameter;
      },
      py::arg("polyhedron_json"), py::arg("kind") = "combinatorial");

  // ---- clustering graph tests -------------------------------------------
  m.def(
      "pp_edge_test",
      [](std::size_t n, std::size_t k, std::vector<long long> lower, std::vector<long long> upper,
         Assignment y1, Assignment y2, bool fixed_size) {
        PartitionSpec spec{n, k, std::move(lower), std::move(upper)};
        return fixed_size ? pp_fixed_edge_test(spec, y1, y2) : pp_bounded_edge_test(spec, y1, y2);
      },
      py::arg("n_items"), py::arg("k"), py::arg("lower"), py::arg("upper"), py::arg("y1"),
      py::arg("y2"), py::arg("fixed_size") = false);
  m.def(
      "pp_circuit_test",
      [](std::size_t n, std::size_t k, const std::vector<std::string>& g) {
        PartitionSpec spec{n, k, std::vector<long long>(k, 0),
                           std::vector<long long>(k, (long long)n)};
        return pp_bounded_circuit_test(spec, to_vec(g));
      },
      py::arg("n_items"), py::arg("k"), py::arg("g"));
}
