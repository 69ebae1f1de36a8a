#include "polywalk/json_io.hpp"

#include "polywalk/errors.hpp"

namespace polywalk {

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
      throw invalid("ParseError", std::string("bad rational: ") + e.what());
    }
  }
  throw invalid("ParseError", "rational must be an integer or a \"p/q\" string");
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw invalid("ParseError", "vector must be a JSON array");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json a = Json::array();
  for (const auto& row : m.rows()) a.push_back(vec_to_json(row));
  return a;
}

Mat mat_from_json(const Json& j, std::size_t expect_cols) {
  if (!j.is_array()) throw invalid("ParseError", "matrix must be a JSON array of rows");
  Mat m(0, expect_cols);
  for (const auto& row : j) {
    Vec r = vec_from_json(row);
    if (r.size() != expect_cols)
      throw invalid("ParseError", "matrix row length does not match n");
    m.push_row(std::move(r));
  }
  return m;
}

Json polyhedron_to_json(const Polyhedron& p) {
  Json j;
  j["n"] = p.n;
  j["A"] = mat_to_json(p.A);
  j["b"] = vec_to_json(p.b);
  j["B"] = mat_to_json(p.B);
  j["d"] = vec_to_json(p.d);
  j["name"] = p.name;
  return j;
}

Polyhedron polyhedron_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw invalid("ParseError", "polyhedron JSON needs at least the field n");
  Polyhedron p;
  if (!j["n"].is_number_unsigned()) throw invalid("ParseError", "n must be a nonnegative integer");
  p.n = j["n"].get<std::size_t>();
  p.A = j.contains("A") ? mat_from_json(j["A"], p.n) : Mat(0, p.n);
  p.b = j.contains("b") ? vec_from_json(j["b"]) : Vec{};
  p.B = j.contains("B") ? mat_from_json(j["B"], p.n) : Mat(0, p.n);
  p.d = j.contains("d") ? vec_from_json(j["d"]) : Vec{};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw invalid("ParseError", "name must be a string");
    p.name = j["name"].get<std::string>();
  }
  if (p.b.size() != p.A.nrows() || p.d.size() != p.B.nrows())
    throw invalid("ParseError", "right-hand side lengths must match row counts");
  return p;
}

Json walk_to_json(const CircuitWalk& w) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    Json s;
    s["point"] = vec_to_json(w.points[i + 1]);
    s["circuit"] = vec_to_json(w.steps[i].direction);
    s["alpha"] = rat_to_json(w.steps[i].alpha);
    steps.push_back(std::move(s));
  }
  Json j;
  j["start"] = vec_to_json(w.points.front());
  j["steps"] = std::move(steps);
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["level"] = level_name(c.level);
  Json w = Json::object();
  if (c.witness_point) w["point"] = vec_to_json(*c.witness_point);
  if (c.witness_walk) w["walk"] = walk_to_json(*c.witness_walk);
  w["detail"] = c.detail;
  j["witness"] = std::move(w);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polywalk
