#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyatlas/feasibility.hpp"
#include "polyatlas/polytope.hpp"

namespace polyatlas {

// Explicit scheme in dimension 3: a pyramid over a polygon followed by
// stackings on triangles or truncations of simple vertices.
std::optional<Polytope> witness_d3(int v, int e);

struct WitnessStats {
    long executed = 0;  // geometric constructions actually run
    bool budget_exhausted = false;
};

// Closure of the named families under pyramid, product with a segment,
// truncation of a simple vertex or simple edge, and placing a point beyond a
// face. Keeps up to `reps` non-isomorphic representatives per (f0, f1).
class WitnessSearch {
public:
    explicit WitnessSearch(int reps = 3, long budget = 200000);

    // Fills dimension d for every f0 <= f0_max (lower dimensions as needed).
    void extend(int d, int f0_max);
    int bound(int d) const;

    const Polytope* lookup(int d, int f0, int f1) const;
    const std::vector<Polytope>* representatives(int d, int f0, int f1) const;
    std::vector<std::pair<int, int>> keys(int d) const;
    const WitnessStats& stats() const { return stats_; }

private:
    using Table = std::map<std::pair<int, int>, std::vector<Polytope>>;

    bool add(int d, Polytope p);
    bool wants(int d, std::pair<int, int> key) const;
    void expand(int d, const Polytope& p);
    bool spend();

    int reps_;
    long budget_;
    WitnessStats stats_;
    std::map<int, Table> table_;
    std::map<int, int> bound_;
};

// Rule layer, then the d = 3 scheme, then the search (d <= 6), then a
// goal-directed backward search along truncations and pyramids.
FeasibilityVerdict witness(int d, int f0, int f1);

// Shared search instance used by witness(); extended on demand.
WitnessSearch& shared_witness_search();

}  // namespace polyatlas
