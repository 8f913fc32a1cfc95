#pragma once

#include <string>

#include "polyatlas/polytope.hpp"

namespace polyatlas {

// Canonical code of the vertex-facet incidence graph (vertices and facets kept
// on separate sides). Equal codes iff the polytopes are combinatorially
// equivalent.
struct CanonicalForm {
    std::string code;  // raw bytes

    std::string hex() const;
    static CanonicalForm from_hex(const std::string& h);
    bool operator==(const CanonicalForm& o) const { return code == o.code; }
    bool operator<(const CanonicalForm& o) const { return code < o.code; }
};

CanonicalForm canonical_form(const Polytope& p);
bool is_isomorphic(const Polytope& a, const Polytope& b);

}  // namespace polyatlas
