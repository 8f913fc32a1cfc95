#pragma once

#include <json.hpp>
#include <string>

#include "polyatlas/polytope.hpp"

namespace polyatlas {

using Json = nlohmann::json;

Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

std::string write_polytope(const Polytope& p);
Polytope read_polytope(const std::string& text);

void save_polytope(const Polytope& p, const std::string& path);
Polytope load_polytope(const std::string& path);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

}  // namespace polyatlas
