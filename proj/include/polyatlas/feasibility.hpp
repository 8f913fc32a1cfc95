#pragma once

#include <string>

namespace polyatlas {

enum class Status { Feasible, Infeasible, Unknown };

enum class FeasibilityRule {
    None,
    EdgeBounds,
    ExcessGap,
    ExcessD1Dim,
    TriplexLB,
    PentasmLB,
    FivePoly925,
    FivePoly1335,
    Simple5Census,
};

std::string to_string(Status s);
std::string to_string(FeasibilityRule r);

struct FeasibilityVerdict {
    Status status = Status::Unknown;
    FeasibilityRule rule = FeasibilityRule::None;
    std::string witness;  // provenance expression when Feasible
    std::string note;
};

// Rule layer only: Infeasible with the first violated rule, else Unknown.
// Throws std::invalid_argument unless d >= 2 and f0 >= d + 1.
FeasibilityVerdict feasibility(int d, int f0, int f1);

long long binomial2(long long n);

}  // namespace polyatlas
