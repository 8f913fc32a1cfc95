#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyatlas/io.hpp"
#include "polyatlas/lattice.hpp"

namespace polyatlas {

struct GeometricGraph {
    std::vector<Point> points;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int a, int b) const;
};

// Skeleton of a realized polytope as a geometric graph on all its vertices.
GeometricGraph skeleton_graph(const Polytope& p, const FaceLattice& l);

// True iff the cycle's vertices are affinely independent. Throws
// std::invalid_argument when `cycle` is not a cycle of `g`.
bool check_cycle(const GeometricGraph& g, const std::vector<int>& cycle);

enum class Verdict { Decomposable, Indecomposable, Unknown };
std::string to_string(Verdict v);

// One rule application. Components are numbered by the step that created them.
struct DerivationStep {
    enum class Rule { Cycle, Merge, Absorb };
    Rule rule = Rule::Cycle;
    std::vector<int> cycle;   // Cycle: vertices in cyclic order
    int left = -1, right = -1;
    std::vector<int> shared;  // Merge: two common vertices of left and right
    int vertex = -1;          // Absorb: new vertex joined to `via` in component `left`
    std::vector<int> via;
};

struct IndecSubgraph {
    std::vector<DerivationStep> steps;
    int root = -1;                   // component covering every facet
    std::vector<int> facet_witness;  // per facet, a covered vertex in it
};

std::optional<IndecSubgraph> grow_certificate(const Polytope& p, const FaceLattice& l);
std::optional<IndecSubgraph> grow_certificate(const Polytope& p);

enum class Evidence { None, ShephardFacet, Pyramid, IndecSubgraph, DualFewNonsimple, FewDecomposableFacets };
std::string to_string(Evidence e);

struct DecompCertificate {
    Verdict verdict = Verdict::Unknown;
    Evidence evidence = Evidence::None;
    std::string reason;
    int facet = -1;    // ShephardFacet
    int outside = 0;   // ShephardFacet: vertices outside the facet
    int apex = -1;     // Pyramid
    std::optional<IndecSubgraph> subgraph;
    std::vector<int> nonsimple;  // DualFewNonsimple: nonsimple vertices of the dual
    std::vector<DecompCertificate> facet_certs;  // FewDecomposableFacets, one per facet
};

DecompCertificate classify(const Polytope& p, int depth = 1);

// Verdict about dual(p) from the nonsimple vertex count of p.
std::optional<DecompCertificate> count_nonsimple_dual_rule(const Polytope& p);

struct CertificateCheck {
    bool ok = true;
    std::string message;
};

// Re-verifies every claim in `cert` against `p` without trusting classify.
CertificateCheck verify_certificate(const Polytope& p, const DecompCertificate& cert);

Json certificate_to_json(const DecompCertificate& c);
DecompCertificate certificate_from_json(const Json& j);

}  // namespace polyatlas
