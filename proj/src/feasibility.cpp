#include "polyatlas/feasibility.hpp"

#include <stdexcept>

namespace polyatlas {

std::string to_string(Status s) {
    switch (s) {
        case Status::Feasible: return "Feasible";
        case Status::Infeasible: return "Infeasible";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(FeasibilityRule r) {
    switch (r) {
        case FeasibilityRule::None: return "None";
        case FeasibilityRule::EdgeBounds: return "EdgeBounds";
        case FeasibilityRule::ExcessGap: return "ExcessGap";
        case FeasibilityRule::ExcessD1Dim: return "ExcessD1Dim";
        case FeasibilityRule::TriplexLB: return "TriplexLB";
        case FeasibilityRule::PentasmLB: return "PentasmLB";
        case FeasibilityRule::FivePoly925: return "FivePoly925";
        case FeasibilityRule::FivePoly1335: return "FivePoly1335";
        case FeasibilityRule::Simple5Census: return "Simple5Census";
    }
    return "?";
}

long long binomial2(long long n) { return n * (n - 1) / 2; }

namespace {

FeasibilityVerdict no(FeasibilityRule r, std::string note) {
    return {Status::Infeasible, r, {}, std::move(note)};
}

}  // namespace

FeasibilityVerdict feasibility(int d, int f0, int f1) {
    if (d < 2 || f0 < d + 1 || f1 < 0)
        throw std::invalid_argument("feasibility: need d >= 2, f0 >= d+1, f1 >= 0");
    const long long xi = 2LL * f1 - 1LL * d * f0;

    long long upper = binomial2(f0);
    if (d == 2) upper = f0;
    if (d == 3) upper = 3LL * f0 - 6;  // Euler
    if (xi < 0) return no(FeasibilityRule::EdgeBounds, "fewer than d*f0/2 edges");
    if (f1 > upper) return no(FeasibilityRule::EdgeBounds, "more than " + std::to_string(upper) + " edges");

    if (xi >= 1 && xi <= d - 3)
        return no(FeasibilityRule::ExcessGap, "excess " + std::to_string(xi) + " lies in [1, d-3]");
    if (d >= 3 && xi == d - 1 && d != 3 && d != 5)
        return no(FeasibilityRule::ExcessD1Dim, "excess d-1 needs d = 3 or 5");

    const int k = f0 - d;
    if (k >= 1 && k <= d) {
        long long need = 1LL * d * (d + k) + 1LL * (k - 1) * (d - k);  // twice the bound
        if (2LL * f1 < need)
            return no(FeasibilityRule::TriplexLB, "excess below (k-1)(d-k) = " + std::to_string((k - 1) * (d - k)));
    }
    if (f0 == 2 * d + 1) {
        long long least = 1LL * d * d + d - 1;
        if (d == 4) least = 18;
        if (f1 < least) return no(FeasibilityRule::PentasmLB, "fewer edges than the pentasm");
    }
    if (d == 5 && f0 == 9 && f1 == 25) return no(FeasibilityRule::FivePoly925, "accepted from the literature, not machine-checked");
    if (d == 5 && f0 == 13 && f1 == 35) return no(FeasibilityRule::FivePoly1335, "accepted from the literature, not machine-checked");
    if (d == 5 && xi == 0 && !(f0 == 6 || (f0 % 2 == 0 && f0 >= 10)))
        return no(FeasibilityRule::Simple5Census, "no simple 5-polytope with " + std::to_string(f0) + " vertices");
    return {};
}

}  // namespace polyatlas
