#pragma once

#include <string>
#include <vector>

#include "polyatlas/polytope.hpp"

namespace polyatlas {

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string witness;  // first violation found, empty when passed
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

ValidationReport validate(const Polytope& p);

// True iff removing any k-1 vertices leaves the graph connected (and it has
// more than k vertices). `witness` receives a separating set when false.
bool is_k_connected(const std::vector<std::vector<int>>& adj, int k, std::vector<int>* witness = nullptr);

}  // namespace polyatlas
