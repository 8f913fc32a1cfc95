#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "polyatlas/polytope.hpp"

namespace polyatlas {

struct FaceLattice {
    int dim = 0;
    int num_vertices = 0;
    std::vector<VertexSet> faces;            // sorted by size, then lexicographically
    std::vector<int> rank;                   // per face, -1 .. dim
    std::vector<std::vector<int>> by_rank;   // by_rank[r + 1]
    std::vector<std::vector<int>> up;        // upper covers
    std::vector<std::vector<int>> down;      // lower covers
    std::vector<int> degree;                 // per vertex
    std::unordered_map<VertexSet, int, VertexSetHash> index;

    const std::vector<int>& faces_of_rank(int r) const { return by_rank.at(r + 1); }
    int find(const VertexSet& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }
    int rank_of(const VertexSet& s) const {
        int i = find(s);
        return i < 0 ? -2 : rank[i];
    }
};

// Problems found while assembling the lattice; empty for a valid polytope.
struct LatticeIssue {
    std::string kind;
    VertexSet lower, upper;
    std::string detail;
};

// Throws InvalidPolytope naming the offending interval.
FaceLattice build_lattice(const Polytope& p);

// Same construction, collecting every issue instead of throwing.
FaceLattice build_lattice_unchecked(const Polytope& p, std::vector<LatticeIssue>& issues);

std::vector<int> f_vector(const FaceLattice& l);
std::vector<int> f_vector(const Polytope& p);
std::vector<std::pair<int, int>> skeleton(const FaceLattice& l);
std::vector<std::vector<int>> adjacency(const FaceLattice& l);
std::vector<int> degrees(const FaceLattice& l);

// Smallest face containing `s` (intersection of the facets through it).
VertexSet face_closure(const Polytope& p, const VertexSet& s);
bool is_face(const Polytope& p, const VertexSet& s);

Polytope face_as_polytope(const Polytope& p, const FaceLattice& l, const VertexSet& face);
Polytope face_as_polytope(const Polytope& p, const VertexSet& face);
Polytope vertex_figure(const Polytope& p, const FaceLattice& l, int v);
Polytope vertex_figure(const Polytope& p, int v);
Polytope dual(const Polytope& p);

}  // namespace polyatlas
