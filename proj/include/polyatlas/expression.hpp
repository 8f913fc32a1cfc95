#pragma once

#include <string>

#include "polyatlas/polytope.hpp"

namespace polyatlas {

// Parses and evaluates a provenance expression such as
// "truncate(triplex(2,3),v0)" or "pyr^3(pentagon)".
Polytope evaluate_expression(const std::string& text);

}  // namespace polyatlas
