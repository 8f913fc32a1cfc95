#pragma once

#include <utility>

#include "polyatlas/hull.hpp"
#include "polyatlas/polytope.hpp"

namespace polyatlas {

// Outer halfspace of facet `f` of a realized polytope (normal lies in the
// linear span of the polytope's affine hull directions).
HalfSpace facet_halfspace(const Polytope& p, int f);
std::vector<HalfSpace> facet_halfspaces(const Polytope& p);

// Sum of the outer normals of the facets containing `face`; returns the
// halfspace together with the contact value attained on the face.
std::pair<HalfSpace, Rational> supporting_halfspace(const Polytope& p, const VertexSet& face);

Point beyond_point(const Polytope& p, int facet);

// Point beyond exactly the facets that contain `face`: radial push from the
// vertex centroid through the face centroid.
Point beyond_face_point(const Polytope& p, const VertexSet& face);

struct CutResult {
    Polytope polytope;
    int underfacet = -1;
};

// Keeps the side normal.x <= offset.
CutResult cut(const Polytope& p, const HalfSpace& h);

}  // namespace polyatlas
