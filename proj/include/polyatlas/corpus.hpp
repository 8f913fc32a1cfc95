#pragma once

#include <vector>

#include "polyatlas/catalog.hpp"

namespace polyatlas {

// Every named family in dimension d with at most `max_vertices` vertices,
// together with pyramids over and prisms on the members one dimension down.
// Deduplicated by combinatorial type; cached.
std::vector<Polytope> family_members(int d, int max_vertices);

// Family members followed by `depth` rounds of truncation and stacking
// applied to every member found so far.
Catalog generate_corpus(int d, int depth, int max_vertices = 24);

// Sorted excess values achieved in dimension d by the corpus (depth 1) and by
// the witness search up to f0_max vertices.
std::vector<int> spectrum(int d, int f0_max);

}  // namespace polyatlas
