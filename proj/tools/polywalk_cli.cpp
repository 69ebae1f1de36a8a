// polywalk: generate polytope families and run exact circuit-walk analyses.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polywalk/cdg.hpp"
#include "polywalk/circuits.hpp"
#include "polywalk/ecw.hpp"
#include "polywalk/errors.hpp"
#include "polywalk/families.hpp"
#include "polywalk/json_io.hpp"
#include "polywalk/linalg.hpp"
#include "polywalk/walks.hpp"

namespace pw = polywalk;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw pw::invalid("FileNotFound", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw pw::invalid("FileNotWritable", "cannot write " + path);
  f << text;
}

pw::Json parse_json(const std::string& text) {
  try {
    return pw::Json::parse(text);
  } catch (const std::exception& e) {
    throw pw::invalid("ParseError", e.what());
  }
}

pw::Polyhedron load_polyhedron(const std::string& path) {
  return pw::polyhedron_from_json(parse_json(read_input(path)));
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw pw::invalid("ParseError", "bad integer list: " + s);
    }
  }
  if (out.empty()) throw pw::invalid("ParseError", "empty integer list");
  return out;
}

pw::Vec parse_rat_list(const std::string& s) {
  pw::Vec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(pw::rat_from_string(tok));
  if (out.empty()) throw pw::invalid("ParseError", "empty vector");
  return out;
}

std::vector<pw::Vec> parse_direction_list(const std::string& s) {
  std::vector<pw::Vec> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) out.push_back(parse_rat_list(tok));
  if (out.empty()) throw pw::invalid("ParseError", "empty direction list");
  return out;
}

pw::PartitionSpec spec_from_json(const pw::Json& j) {
  pw::PartitionSpec spec;
  if (!j.is_object() || !j.contains("n_items") || !j.contains("k"))
    throw pw::invalid("ParseError", "spec needs n_items and k");
  spec.n_items = j["n_items"].get<std::size_t>();
  spec.k = j["k"].get<std::size_t>();
  if (j.contains("sizes")) {
    spec.lower = j["sizes"].get<std::vector<long long>>();
    spec.upper = spec.lower;
  } else {
    spec.lower = j.at("lower").get<std::vector<long long>>();
    spec.upper = j.at("upper").get<std::vector<long long>>();
  }
  return spec;
}

pw::Assignment assignment_from_json(const pw::Json& j) {
  if (!j.is_array()) throw pw::invalid("ParseError", "clustering must be a JSON array");
  return j.get<pw::Assignment>();
}

pw::Mat stacked_matrix(const pw::Polyhedron& p) {
  pw::Mat m(0, p.n);
  for (const auto& r : p.A.rows()) m.push_row(r);
  for (const auto& r : p.B.rows()) m.push_row(r);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact circuit walks on rational polyhedra"};
  app.require_subcommand(1);
  std::string in_path, out_path;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a polytope family instance");
  gen->require_subcommand(1);
  std::string gen_out;

  std::string fig2_which = "a";
  auto* g_fig2 = gen->add_subcommand("fig2", "two-dimensional hierarchy examples");
  g_fig2->add_option("--which", fig2_which, "a|b|c|d")->required();
  g_fig2->add_option("-o", gen_out, "output file");

  auto* g_fig3 = gen->add_subcommand("fig3", "0/1 polytope with non-integral walks");
  g_fig3->add_option("-o", gen_out, "output file");

  std::string tr_u, tr_v;
  auto* g_tr = gen->add_subcommand("transportation", "transportation polytope");
  g_tr->add_option("--u", tr_u, "supplies, comma separated")->required();
  g_tr->add_option("--v", tr_v, "demands, comma separated")->required();
  g_tr->add_option("-o", gen_out, "output file");

  std::size_t pp_n = 0, pp_k = 0;
  std::string pp_lower, pp_upper, pp_sizes;
  auto* g_ppb = gen->add_subcommand("partition-bounded", "bounded-size partition polytope");
  g_ppb->add_option("--n", pp_n, "number of items")->required();
  g_ppb->add_option("--k", pp_k, "number of clusters")->required();
  g_ppb->add_option("--lower", pp_lower, "lower size bounds")->required();
  g_ppb->add_option("--upper", pp_upper, "upper size bounds")->required();
  g_ppb->add_option("-o", gen_out, "output file");

  auto* g_ppf = gen->add_subcommand("partition-fixed", "fixed-size partition polytope");
  g_ppf->add_option("--n", pp_n, "number of items")->required();
  g_ppf->add_option("--k", pp_k, "number of clusters")->required();
  g_ppf->add_option("--sizes", pp_sizes, "cluster sizes")->required();
  g_ppf->add_option("-o", gen_out, "output file");

  long long mat_rank = -1;
  std::size_t mat_ground = 0, mat_nodes = 0;
  std::string mat_edges;
  auto* g_mat = gen->add_subcommand("matroid", "matroid polytope (subset representation)");
  g_mat->add_option("--uniform-rank", mat_rank, "uniform matroid rank");
  g_mat->add_option("--ground", mat_ground, "ground set size (uniform)");
  g_mat->add_option("--graphic-nodes", mat_nodes, "node count (graphic)");
  g_mat->add_option("--edges", mat_edges, "edges a-b, comma separated (graphic)");
  g_mat->add_option("-o", gen_out, "output file");

  std::size_t ndp_n = 0, ndp_d = 0;
  long long ndp_seed = -1;
  auto* g_ndp = gen->add_subcommand("ndp", "simplex-times-segments parallelotope");
  g_ndp->add_option("--dim", ndp_n, "ambient dimension n")->required();
  g_ndp->add_option("--par", ndp_d, "parallelotope parameter d")->required();
  g_ndp->add_option("--skew-seed", ndp_seed, "apply a random unimodular skew");
  g_ndp->add_option("-o", gen_out, "output file");

  // ---- analyses -----------------------------------------------------------
  auto* vertices = app.add_subcommand("vertices", "enumerate vertices");
  vertices->add_option("-i", in_path, "input polyhedron JSON (default stdin)");
  vertices->add_option("-o", out_path, "output file");

  std::string method = "rank";
  auto* circuits = app.add_subcommand("circuits", "enumerate circuits");
  circuits->add_option("--method", method, "rank|oracle");
  circuits->add_option("-i", in_path, "input polyhedron JSON");
  circuits->add_option("-o", out_path, "output file");

  std::size_t start_index = 0;
  std::string dirs;
  auto* walk_cmd = app.add_subcommand("walk", "maximal-step walk along given directions");
  walk_cmd->add_option("--start", start_index, "vertex index (lex order)")->required();
  walk_cmd->add_option("--dirs", dirs, "directions g1;g2;... (comma-separated entries)")
      ->required();
  walk_cmd->add_option("-i", in_path, "input polyhedron JSON");
  walk_cmd->add_option("-o", out_path, "output file");

  std::size_t budget = 50000;
  auto* classify = app.add_subcommand("classify", "hierarchy level with witness");
  classify->add_option("--budget-points", budget, "reachability budget");
  classify->add_option("-i", in_path, "input polyhedron JSON");
  classify->add_option("-o", out_path, "output file");

  auto* check_tu = app.add_subcommand("check-tu", "total unimodularity of the stacked matrix");
  check_tu->add_option("-i", in_path, "input polyhedron JSON");
  check_tu->add_option("-o", out_path, "output file");

  std::string via = "all";
  auto* check_ecw = app.add_subcommand("check-ecw", "edge-walk characterizations");
  check_ecw->add_option("--via", via, "elementary|symmetric|recognize|all");
  check_ecw->add_option("-i", in_path, "input polyhedron JSON");
  check_ecw->add_option("-o", out_path, "output file");

  std::string kind = "combinatorial";
  auto* diameter = app.add_subcommand("diameter", "pairwise distances and diameter");
  diameter->add_option("--kind", kind, "combinatorial|circuit");
  diameter->add_option("--budget-points", budget, "reachability budget");
  diameter->add_option("-i", in_path, "input polyhedron JSON");
  diameter->add_option("-o", out_path, "output file");

  std::string spec_path, y1_path, y2_path, cdg_test, g_str;
  auto* cdg_cmd = app.add_subcommand("cdg", "clustering difference graph tests");
  cdg_cmd->add_option("--spec", spec_path, "partition spec JSON")->required();
  cdg_cmd->add_option("--y1", y1_path, "first clustering JSON");
  cdg_cmd->add_option("--y2", y2_path, "second clustering JSON");
  cdg_cmd->add_option("--test", cdg_test, "edge|fixed-edge|circuit");
  cdg_cmd->add_option("--g", g_str, "candidate circuit vector (for --test circuit)");
  cdg_cmd->add_option("-o", out_path, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      pw::Polyhedron p;
      if (g_fig2->parsed()) {
        if (fig2_which.size() != 1) throw pw::invalid("InvalidSpec", "--which must be a..d");
        p = pw::fig2(fig2_which[0]);
      } else if (g_fig3->parsed()) {
        p = pw::fig3_polytope();
      } else if (g_tr->parsed()) {
        p = pw::transportation({parse_int_list(tr_u), parse_int_list(tr_v)});
      } else if (g_ppb->parsed()) {
        p = pw::partition_bounded({pp_n, pp_k, parse_int_list(pp_lower), parse_int_list(pp_upper)});
      } else if (g_ppf->parsed()) {
        auto sizes = parse_int_list(pp_sizes);
        p = pw::partition_fixed({pp_n, pp_k, sizes, sizes});
      } else if (g_mat->parsed()) {
        pw::MatroidSpec spec;
        if (mat_rank >= 0) {
          spec = pw::MatroidSpec::uniform(mat_rank, mat_ground);
        } else {
          std::vector<std::pair<std::size_t, std::size_t>> edges;
          std::stringstream ss(mat_edges);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw pw::invalid("ParseError", "edges look like 0-1");
            edges.emplace_back(std::stoull(tok.substr(0, dash)), std::stoull(tok.substr(dash + 1)));
          }
          spec = pw::MatroidSpec::graphic(mat_nodes, edges);
        }
        p = pw::matroid_polytope(spec);
      } else if (g_ndp->parsed()) {
        std::optional<pw::AffineMap> skew;
        if (ndp_seed >= 0) skew = pw::random_unimodular_skew(ndp_n, (unsigned)ndp_seed);
        p = pw::nd_parallelotope(ndp_n, ndp_d, skew);
      }
      write_output(gen_out, pw::dump_json(pw::polyhedron_to_json(p)));
      return 0;
    }

    if (vertices->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      pw::Json out;
      out["vertices"] = pw::Json::array();
      for (const auto& v : pw::enumerate_vertices(p)) out["vertices"].push_back(pw::vec_to_json(v.point));
      write_output(out_path, pw::dump_json(out));
      return 0;
    }

    if (circuits->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      std::vector<pw::Circuit> cs;
      if (method == "rank")
        cs = pw::circuits_rank_method(p);
      else if (method == "oracle")
        cs = pw::circuits_support_oracle(p);
      else
        throw pw::invalid("InvalidFlag", "--method must be rank or oracle");
      pw::Json out;
      out["circuits"] = pw::Json::array();
      for (const auto& c : cs) {
        pw::Json jc;
        jc["g"] = pw::vec_to_json(c.g);
        jc["image"] = pw::vec_to_json(c.image);
        out["circuits"].push_back(std::move(jc));
      }
      write_output(out_path, pw::dump_json(out));
      return 0;
    }

    if (walk_cmd->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      auto verts = pw::enumerate_vertices(p);
      if (start_index >= verts.size()) throw pw::invalid("InvalidFlag", "--start out of range");
      pw::CircuitWalk w = pw::walk(p, verts[start_index].point, parse_direction_list(dirs));
      write_output(out_path, pw::dump_json(pw::walk_to_json(w)));
      return 0;
    }

    if (classify->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      pw::Classification c = pw::classify_hierarchy(p, budget);
      write_output(out_path, pw::dump_json(pw::classification_to_json(c)));
      if (c.level == pw::Level::Unknown) return 3;
      return 0;
    }

    if (check_tu->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      pw::TUReport rep = pw::is_totally_unimodular(stacked_matrix(p));
      pw::Json out;
      out["tu"] = rep.tu;
      if (!rep.tu) {
        out["witness_rows"] = rep.witness_rows;
        out["witness_cols"] = rep.witness_cols;
      }
      write_output(out_path, pw::dump_json(out));
      return 0;
    }

    if (check_ecw->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      pw::Json out;
      if (via == "elementary" || via == "all") {
        auto r = pw::elementary_cone_condition(p);
        pw::Json j;
        j["holds"] = r.holds;
        if (r.witness_vertex) j["witness_vertex"] = pw::vec_to_json(*r.witness_vertex);
        if (r.witness_row) j["witness_row"] = *r.witness_row;
        out["elementary"] = std::move(j);
      }
      if (via == "symmetric" || via == "all") {
        auto r = pw::symmetric_inner_cone_condition(p);
        pw::Json j;
        j["holds"] = r.holds;
        if (r.witness_pair) {
          j["witness_pair"] = pw::Json::array(
              {pw::vec_to_json(r.witness_pair->first), pw::vec_to_json(r.witness_pair->second)});
        }
        out["symmetric"] = std::move(j);
      }
      if (via == "recognize" || via == "all") {
        auto r = pw::recognize_nd_parallelotope(p);
        pw::Json j;
        j["is_ndp"] = r.is_ndp;
        if (r.is_ndp)
          j["d"] = r.d;
        else
          j["failure"] = r.failure;
        out["recognize"] = std::move(j);
      }
      if (out.empty()) throw pw::invalid("InvalidFlag", "--via must be elementary|symmetric|recognize|all");
      write_output(out_path, pw::dump_json(out));
      return 0;
    }

    if (diameter->parsed()) {
      pw::Polyhedron p = load_polyhedron(in_path);
      pw::DistanceKind k;
      if (kind == "combinatorial")
        k = pw::DistanceKind::Combinatorial;
      else if (kind == "circuit")
        k = pw::DistanceKind::Circuit;
      else
        throw pw::invalid("InvalidFlag", "--kind must be combinatorial or circuit");
      pw::DistanceReport rep = pw::distances_and_diameters(p, k, budget);
      pw::Json out;
      out["vertices"] = pw::Json::array();
      for (const auto& v : rep.vertices) out["vertices"].push_back(pw::vec_to_json(v));
      out["dist"] = rep.dist;
      out["diameter"] = rep.diameter;
      write_output(out_path, pw::dump_json(out));
      return 0;
    }

    if (cdg_cmd->parsed()) {
      pw::PartitionSpec spec = spec_from_json(parse_json(read_input(spec_path)));
      pw::Json out;
      if (cdg_test == "circuit") {
        if (g_str.empty()) throw pw::invalid("InvalidFlag", "--test circuit needs --g");
        out["circuit"] = pw::pp_bounded_circuit_test(spec, parse_rat_list(g_str));
      } else {
        pw::Assignment y1 = assignment_from_json(parse_json(read_input(y1_path)));
        pw::Assignment y2 = assignment_from_json(parse_json(read_input(y2_path)));
        bool fixed = cdg_test == "fixed-edge" || spec.lower == spec.upper;
        pw::ClusteringDifferenceGraph g = pw::build_cdg(spec, y1, y2, fixed);
        pw::Json edges = pw::Json::array();
        for (const auto& e : g.edges) {
          pw::Json je;
          je["from"] = e.from;
          je["to"] = e.to;
          je["item"] = e.item;
          edges.push_back(std::move(je));
        }
        out["edges"] = std::move(edges);
        pw::Json statuses = pw::Json::array();
        for (auto s : g.status) {
          switch (s) {
            case pw::NodeStatus::Free: statuses.push_back("free"); break;
            case pw::NodeStatus::Saturated: statuses.push_back("saturated"); break;
            case pw::NodeStatus::Depleted: statuses.push_back("depleted"); break;
            case pw::NodeStatus::Fixed: statuses.push_back("fixed"); break;
          }
        }
        out["status"] = std::move(statuses);
        if (cdg_test == "edge") out["edge"] = pw::pp_bounded_edge_test(spec, y1, y2);
        if (cdg_test == "fixed-edge") out["edge"] = pw::pp_fixed_edge_test(spec, y1, y2);
      }
      write_output(out_path, pw::dump_json(out));
      return 0;
    }
  } catch (const pw::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return e.kind() == pw::ErrorKind::InvalidInput ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
