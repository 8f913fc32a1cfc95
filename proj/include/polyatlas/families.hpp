#pragma once

#include <vector>

#include "polyatlas/polytope.hpp"

namespace polyatlas {

Polytope simplex(int d);
Polytope simplex_product(const std::vector<int>& dims);
Polytope prism(int d);
Polytope cube(int d);
Polytope polygon(int n);

Polytope pyramid(const Polytope& p, int r = 1);
Polytope triplex(int k, int m);
Polytope pentasm(int d);
Polytope pentasm_by_truncation(int d);
Polytope capped_prism(int k, int d);
Polytope capped_prism_combinatorial(int k, int d);

enum class AbcsKind { A, B, C, Sigma };
Polytope family_abcs(AbcsKind kind, int d);
Polytope sigma_as_minkowski_sum(int d);

Polytope gamma(int m, int n);
Polytope family_j(int d);
Polytope antiwedge();
Polytope cyclic(int n, int d);
Polytope bipyramid(int d);

Polytope free_sum(const Polytope& p, const Polytope& q);
Polytope product(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

struct Truncation {
    Polytope polytope;
    int underfacet = -1;
};
Truncation truncate(const Polytope& p, const VertexSet& face);
Polytope stack(const Polytope& p, int facet);
Polytope beyond(const Polytope& p, const VertexSet& face);

// Vertex renumbering into lexicographic coordinate order.
Polytope canonical_order(const Polytope& p);

// Provenance spelling of a face: "v3" for a vertex, "f{0,2,5}" otherwise.
std::string face_ref(const VertexSet& face);

}  // namespace polyatlas
