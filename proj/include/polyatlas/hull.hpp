#pragma once

#include <vector>

#include "polyatlas/rational.hpp"

namespace polyatlas {

// normal . x <= offset
struct HalfSpace {
    std::vector<Rational> normal;
    Rational offset;

    Rational slack(const Point& p) const { return offset - dot(normal, p); }
};

struct HullFacet {
    HalfSpace h;
    std::vector<int> vertices;  // indices into the input list, ascending
};

struct HullResult {
    int dim = 0;
    std::vector<int> vertices;  // extreme input points, ascending index
    std::vector<HullFacet> facets;
};

// Exact beneath-beyond hull. Lower-dimensional input is handled inside its
// affine hull by projecting onto a coordinate subset; returned normals are
// zero on the dropped coordinates.
HullResult convex_hull(const std::vector<Point>& points);

}  // namespace polyatlas
