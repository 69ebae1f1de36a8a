#ifndef POLYWALK_JSON_IO_HPP
#define POLYWALK_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "polywalk/polyhedron.hpp"
#include "polywalk/walks.hpp"

namespace polywalk {

// Insertion-ordered JSON keeps output byte-stable across runs.
using Json = nlohmann::ordered_json;

// Rationals serialize as "p" or "p/q" strings; parsing also accepts plain
// JSON integers.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, std::size_t expect_cols);

Json polyhedron_to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

Json walk_to_json(const CircuitWalk& w);
Json classification_to_json(const Classification& c);

std::string dump_json(const Json& j);

}  // namespace polywalk

#endif
