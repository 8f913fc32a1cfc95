#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyatlas/io.hpp"
#include "polyatlas/lattice.hpp"

namespace polyatlas {

struct ExcessReport {
    int total = 0;
    std::vector<int> per_vertex;  // degree - d
    std::vector<int> nonsimple;   // ascending

    bool simple() const { return total == 0; }
};

ExcessReport excess(const Polytope& p, const FaceLattice& l);
ExcessReport excess(const Polytope& p);

// Excess of facet `f` viewed as a (d-1)-polytope.
int facet_excess(const Polytope& p, const FaceLattice& l, int f);

struct FacetPair {
    int f = 0, g = 0;
    int dim = -1;  // dimension of the intersection, -1 when disjoint
};

struct FacetPairProfile {
    std::vector<FacetPair> pairs;  // every unordered pair, f < g
    bool semisimple = true;
    bool super_kirkman = true;
};

FacetPairProfile facet_profile(const Polytope& p, const FaceLattice& l);
FacetPairProfile facet_profile(const Polytope& p);
bool is_semisimple(const Polytope& p);
bool is_super_kirkman(const Polytope& p);

std::vector<int> shephard_facets(const Polytope& p, const FaceLattice& l);
std::vector<int> kirkman_facets(const Polytope& p, const FaceLattice& l);
std::vector<int> weak_ks_facets(const Polytope& p, const FaceLattice& l);
std::vector<int> shephard_facets(const Polytope& p);
std::vector<int> kirkman_facets(const Polytope& p);
std::vector<int> weak_ks_facets(const Polytope& p);

struct PyramidStructure {
    int r = 0;                // 0 when P is not a pyramid; d for a simplex
    std::vector<int> apexes;  // r vertices, each outside exactly one facet
    VertexSet base;           // the remaining vertices, a (d-r)-face
};

PyramidStructure pyramid_structure(const Polytope& p, const FaceLattice& l);
PyramidStructure pyramid_structure(const Polytope& p);

enum class StructureCase {
    ExcessDm2Vertex,       // unique nonsimple vertex
    ExcessDm2Simplex,      // (d-3)-simplex of excess-one vertices
    ExcessDm1Vertex,       // vertex of excess four, figure Delta_{2,2}
    ExcessDm1Edge,         // edge with two excess-two ends
    ExcessDm1Quad,         // quadrilateral of excess-one vertices
    Dim3PentagonalPyramid,
    Dim3Antiwedge,
    Dim3Shephard,
    Dim3NoShephard,
    Contradiction,
};

std::string to_string(StructureCase c);

struct StructureVerdict {
    StructureCase tag = StructureCase::Contradiction;
    VertexSet face;                  // distinguished face
    std::vector<int> facets;         // witnessing facets meeting exactly in `face`
    std::optional<Polytope> figure;  // vertex figure or underfacet
    std::string figure_type;         // "Delta_{2,2}", "Delta_{1,1,2}", "Gamma_{2,2}", "tesseract", or "other"
    std::vector<std::string> notes;      // informational remarks
    std::vector<std::string> conflicts;  // claims of the theorem that failed here

    bool contradiction() const { return tag == StructureCase::Contradiction || !conflicts.empty(); }
};

// Requires excess d-2 or d-1; throws std::invalid_argument otherwise.
StructureVerdict small_excess_structure(const Polytope& p, const FaceLattice& l);
StructureVerdict small_excess_structure(const Polytope& p);

// Structured report used by the `analyze` command.
Json analysis_report(const Polytope& p);

}  // namespace polyatlas
