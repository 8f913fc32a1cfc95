#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyatlas/rational.hpp"
#include "polyatlas/vertex_set.hpp"

namespace polyatlas {

struct InvalidPolytope : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Polytope {
    int dim = 0;
    int num_vertices = 0;
    std::vector<VertexSet> facets;
    std::optional<std::vector<Point>> realization;
    std::string name;
    std::string provenance;

    bool realized() const { return realization.has_value(); }
    const Point& point(int v) const { return realization->at(v); }
};

// Builds a realized polytope from the hull of `points`. Vertices are renumbered
// in lexicographic coordinate order; facets are sorted.
Polytope polytope_from_points(const std::vector<Point>& points, std::string name = {},
                              std::string provenance = {});

// Combinatorial polytope from facet index lists (sorted on the way in).
Polytope polytope_from_facets(int dim, int num_vertices, const std::vector<std::vector<int>>& facets,
                              std::string name = {}, std::string provenance = {});

// Applies a vertex permutation (new index = perm[old]) and re-sorts facets.
Polytope relabel(const Polytope& p, const std::vector<int>& perm);

std::vector<int> facets_of_vertex(const Polytope& p, int v);

}  // namespace polyatlas
