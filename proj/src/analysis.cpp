#include "polyatlas/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyatlas/canonical.hpp"
#include "polyatlas/families.hpp"

namespace polyatlas {

namespace {

struct Ctx {
    const Polytope& p;
    const FaceLattice& l;
    std::vector<std::vector<int>> adj;
    Ctx(const Polytope& p_, const FaceLattice& l_) : p(p_), l(l_), adj(adjacency(l_)) {}
};

int outside_neighbours(const Ctx& c, const VertexSet& f, int v) {
    int k = 0;
    for (int u : c.adj[v])
        if (!f.test(u)) ++k;
    return k;
}

bool is_shephard(const Ctx& c, const VertexSet& f) {
    for (int v : f.indices())
        if (outside_neighbours(c, f, v) != 1) return false;
    return true;
}

// Facet pairs whose intersection is exactly `face`, simple pairs first.
std::vector<std::pair<int, int>> pairs_meeting_in(const Polytope& p, const FaceLattice& l, const VertexSet& face) {
    std::vector<std::pair<int, int>> simple, other;
    const int m = static_cast<int>(p.facets.size());
    for (int f = 0; f < m; ++f) {
        if (!face.subset_of(p.facets[f])) continue;
        for (int g = f + 1; g < m; ++g) {
            if ((p.facets[f] & p.facets[g]) != face) continue;
            bool both = facet_excess(p, l, f) == 0 && facet_excess(p, l, g) == 0;
            (both ? simple : other).emplace_back(f, g);
        }
    }
    simple.insert(simple.end(), other.begin(), other.end());
    return simple;
}

struct KnownType {
    const char* name;
    CanonicalForm form;
};

const std::vector<KnownType>& known_types() {
    static const std::vector<KnownType> types = {
        {"Delta_{2,2}", canonical_form(simplex_product({2, 2}))},
        {"Delta_{1,1,2}", canonical_form(simplex_product({1, 1, 2}))},
        {"Gamma_{2,2}", canonical_form(gamma(2, 2))},
        {"tesseract", canonical_form(cube(4))},
    };
    return types;
}

std::string identify(const Polytope& q) {
    CanonicalForm cf = canonical_form(q);
    for (const auto& t : known_types())
        if (t.form == cf) return t.name;
    return "other";
}

void attach_underfacet(const Polytope& p, StructureVerdict& v) {
    if (!p.realized()) {
        v.notes.push_back("no realization, underfacet not computed");
        return;
    }
    Truncation t = truncate(p, v.face);
    Polytope u = face_as_polytope(t.polytope, t.polytope.facets[t.underfacet]);
    v.figure_type = identify(u);
    v.figure = std::move(u);
}

StructureVerdict excess_dm2(const Ctx& c, const ExcessReport& ex) {
    const Polytope& p = c.p;
    const int d = p.dim;
    StructureVerdict out;

    std::vector<StructureCase> matched;
    VertexSet vertex_face, simplex_face;
    std::vector<std::pair<int, int>> vertex_pairs, simplex_pairs;
    if (ex.nonsimple.size() == 1) {
        vertex_face = VertexSet{ex.nonsimple[0]};
        vertex_pairs = pairs_meeting_in(p, c.l, vertex_face);
        if (!vertex_pairs.empty()) matched.push_back(StructureCase::ExcessDm2Vertex);
    }
    if (static_cast<int>(ex.nonsimple.size()) == d - 2 &&
        std::all_of(ex.nonsimple.begin(), ex.nonsimple.end(), [&](int v) { return ex.per_vertex[v] == 1; })) {
        simplex_face = VertexSet(ex.nonsimple.begin(), ex.nonsimple.end());
        if (c.l.rank_of(simplex_face) == d - 3) {
            simplex_pairs = pairs_meeting_in(p, c.l, simplex_face);
            if (!simplex_pairs.empty()) matched.push_back(StructureCase::ExcessDm2Simplex);
        }
    }

    if (matched.empty()) {
        out.tag = StructureCase::Contradiction;
        out.conflicts.push_back("excess d-2 but neither a lone nonsimple vertex nor a (d-3)-simplex is a facet intersection");
        return out;
    }
    if (matched.size() == 2) {
        if (d != 3) {
            out.tag = StructureCase::Contradiction;
            out.conflicts.push_back("both cases matched");
            return out;
        }
        out.notes.push_back("in dimension 3 both cases describe the same vertex");
    }
    out.tag = matched[0];
    bool vert = out.tag == StructureCase::ExcessDm2Vertex;
    out.face = vert ? vertex_face : simplex_face;
    auto [f, g] = (vert ? vertex_pairs : simplex_pairs)[0];
    out.facets = {f, g};

    if (facet_excess(p, c.l, f) != 0 || facet_excess(p, c.l, g) != 0)
        out.conflicts.push_back("intersecting facets are not both simple");
    bool shephard = false, other_facet = false;
    for (int h = 0; h < static_cast<int>(p.facets.size()); ++h) {
        if (is_shephard(c, p.facets[h])) shephard = true;
        if (h != f && h != g && facet_excess(p, c.l, h) == d - 3) other_facet = true;
    }
    if (!shephard) out.conflicts.push_back("no facet has Shephard's property");
    if (!other_facet) out.conflicts.push_back("no further facet with excess d-3");
    return out;
}

StructureVerdict excess_dm1_dim3(const Ctx& c) {
    const Polytope& p = c.p;
    StructureVerdict out;
    PyramidStructure ps = pyramid_structure(p, c.l);
    if (ps.r >= 1) {
        out.tag = StructureCase::Dim3PentagonalPyramid;
        out.face = VertexSet{ps.apexes[0]};
        if (ps.base.count() != 5) out.conflicts.push_back("pyramid base is not a pentagon");
        return out;
    }
    std::vector<int> sh;
    for (int f = 0; f < static_cast<int>(p.facets.size()); ++f)
        if (is_shephard(c, p.facets[f])) sh.push_back(f);
    if (is_isomorphic(p, antiwedge())) {
        out.tag = StructureCase::Dim3Antiwedge;
        if (!sh.empty()) out.conflicts.push_back("antiwedge with a Shephard facet");
        return out;
    }
    if (!sh.empty()) {
        out.tag = StructureCase::Dim3Shephard;
        out.face = p.facets[sh[0]];
        out.facets = {sh[0]};
        return out;
    }
    out.tag = StructureCase::Dim3NoShephard;
    out.notes.push_back("catalogue polyhedron without Shephard facets");
    if (p.num_vertices != 8 && p.num_vertices != 10)
        out.conflicts.push_back("non-Shephard polyhedron of excess two with " + std::to_string(p.num_vertices) +
                                " vertices");
    return out;
}

StructureVerdict excess_dm1(const Ctx& c, const ExcessReport& ex) {
    const Polytope& p = c.p;
    const int d = p.dim;
    StructureVerdict out;
    if (d != 5) {
        out.tag = StructureCase::Contradiction;
        out.conflicts.push_back("excess d-1 in dimension " + std::to_string(d));
        return out;
    }
    const auto& nv = ex.nonsimple;
    auto all_excess = [&](int e) {
        return std::all_of(nv.begin(), nv.end(), [&](int v) { return ex.per_vertex[v] == e; });
    };

    if (nv.size() == 1 && all_excess(4)) {
        out.tag = StructureCase::ExcessDm1Vertex;
        out.face = VertexSet{nv[0]};
        std::vector<int> at = facets_of_vertex(p, nv[0]);
        bool found = false;
        for (size_t i = 0; i < at.size() && !found; ++i)
            for (size_t j = i + 1; j < at.size() && !found; ++j)
                for (size_t k = j + 1; k < at.size() && !found; ++k)
                    if ((p.facets[at[i]] & p.facets[at[j]] & p.facets[at[k]]) == out.face) {
                        out.facets = {at[i], at[j], at[k]};
                        found = true;
                    }
        if (!found) out.conflicts.push_back("vertex is not the intersection of three facets");
        Polytope fig = vertex_figure(p, c.l, nv[0]);
        out.figure_type = identify(fig);
        out.figure = std::move(fig);
        if (out.figure_type != "Delta_{2,2}") out.conflicts.push_back("vertex figure is " + out.figure_type);
    } else if (nv.size() == 2 && all_excess(2) && c.l.rank_of(VertexSet{nv[0], nv[1]}) == 1) {
        out.tag = StructureCase::ExcessDm1Edge;
        out.face = VertexSet{nv[0], nv[1]};
        auto pairs = pairs_meeting_in(p, c.l, out.face);
        if (pairs.empty())
            out.conflicts.push_back("edge is not a facet intersection");
        else
            out.facets = {pairs[0].first, pairs[0].second};
        attach_underfacet(p, out);
        if (out.figure && out.figure_type != "Delta_{1,1,2}" && out.figure_type != "Gamma_{2,2}")
            out.conflicts.push_back("underfacet is " + out.figure_type);
    } else if (nv.size() == 4 && all_excess(1) && c.l.rank_of(VertexSet(nv.begin(), nv.end())) == 2) {
        out.tag = StructureCase::ExcessDm1Quad;
        out.face = VertexSet(nv.begin(), nv.end());
        auto pairs = pairs_meeting_in(p, c.l, out.face);
        if (pairs.empty())
            out.conflicts.push_back("quadrilateral is not a facet intersection");
        else
            out.facets = {pairs[0].first, pairs[0].second};
        attach_underfacet(p, out);
        if (out.figure && out.figure_type != "tesseract") out.conflicts.push_back("underfacet is " + out.figure_type);
    } else {
        out.tag = StructureCase::Contradiction;
        out.conflicts.push_back("nonsimple vertices fit none of the three patterns");
        return out;
    }

    bool shephard = false;
    for (const auto& f : p.facets)
        if (is_shephard(c, f)) shephard = true;
    if (!shephard) out.conflicts.push_back("no facet has Shephard's property");
    return out;
}

}  // namespace

ExcessReport excess(const Polytope& p, const FaceLattice& l) {
    ExcessReport r;
    r.per_vertex.resize(p.num_vertices);
    for (int v = 0; v < p.num_vertices; ++v) {
        r.per_vertex[v] = l.degree[v] - p.dim;
        r.total += r.per_vertex[v];
        if (r.per_vertex[v] != 0) r.nonsimple.push_back(v);
    }
    return r;
}

ExcessReport excess(const Polytope& p) { return excess(p, build_lattice(p)); }

int facet_excess(const Polytope& p, const FaceLattice& l, int f) {
    const VertexSet& face = p.facets.at(f);
    int twice_edges = 0;
    for (int e : l.faces_of_rank(1))
        if (l.faces[e].subset_of(face)) twice_edges += 2;
    return twice_edges - (p.dim - 1) * face.count();
}

FacetPairProfile facet_profile(const Polytope& p, const FaceLattice& l) {
    FacetPairProfile prof;
    const int m = static_cast<int>(p.facets.size());
    for (int f = 0; f < m; ++f)
        for (int g = f + 1; g < m; ++g) {
            VertexSet x = p.facets[f] & p.facets[g];
            int dim = x.empty() ? -1 : l.rank_of(x);
            prof.pairs.push_back({f, g, dim});
            if (dim != p.dim - 2) {
                prof.super_kirkman = false;
                if (dim != -1) prof.semisimple = false;
            }
        }
    return prof;
}

FacetPairProfile facet_profile(const Polytope& p) { return facet_profile(p, build_lattice(p)); }
bool is_semisimple(const Polytope& p) { return facet_profile(p).semisimple; }
bool is_super_kirkman(const Polytope& p) { return facet_profile(p).super_kirkman; }

std::vector<int> shephard_facets(const Polytope& p, const FaceLattice& l) {
    Ctx c(p, l);
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(p.facets.size()); ++f)
        if (is_shephard(c, p.facets[f])) out.push_back(f);
    return out;
}

namespace {

// Facets F for which every other facet meets F in a ridge (or, when
// `allow_disjoint`, misses F entirely).
std::vector<int> ridge_facets(const Polytope& p, const FaceLattice& l, bool allow_disjoint) {
    std::vector<int> out;
    const int m = static_cast<int>(p.facets.size());
    for (int f = 0; f < m; ++f) {
        bool ok = true;
        for (int g = 0; g < m && ok; ++g) {
            if (g == f) continue;
            VertexSet x = p.facets[f] & p.facets[g];
            if (x.empty()) ok = allow_disjoint;
            else ok = l.rank_of(x) == p.dim - 2;
        }
        if (ok) out.push_back(f);
    }
    return out;
}

}  // namespace

std::vector<int> kirkman_facets(const Polytope& p, const FaceLattice& l) { return ridge_facets(p, l, false); }
std::vector<int> weak_ks_facets(const Polytope& p, const FaceLattice& l) { return ridge_facets(p, l, true); }
std::vector<int> shephard_facets(const Polytope& p) { return shephard_facets(p, build_lattice(p)); }
std::vector<int> kirkman_facets(const Polytope& p) { return kirkman_facets(p, build_lattice(p)); }
std::vector<int> weak_ks_facets(const Polytope& p) { return weak_ks_facets(p, build_lattice(p)); }

PyramidStructure pyramid_structure(const Polytope& p, const FaceLattice&) {
    PyramidStructure ps;
    for (int v = 0; v < p.num_vertices; ++v) {
        int missing = 0;
        for (const auto& f : p.facets)
            if (!f.test(v)) ++missing;
        if (missing == 1) ps.apexes.push_back(v);
    }
    // A simplex is a d-fold pyramid over any of its vertices.
    if (static_cast<int>(ps.apexes.size()) > p.dim) ps.apexes.resize(p.dim);
    ps.r = static_cast<int>(ps.apexes.size());
    ps.base = VertexSet::range(p.num_vertices) - VertexSet(ps.apexes.begin(), ps.apexes.end());
    return ps;
}

PyramidStructure pyramid_structure(const Polytope& p) { return pyramid_structure(p, build_lattice(p)); }

std::string to_string(StructureCase c) {
    switch (c) {
        case StructureCase::ExcessDm2Vertex: return "excess-d-2/vertex";
        case StructureCase::ExcessDm2Simplex: return "excess-d-2/simplex";
        case StructureCase::ExcessDm1Vertex: return "excess-d-1/vertex";
        case StructureCase::ExcessDm1Edge: return "excess-d-1/edge";
        case StructureCase::ExcessDm1Quad: return "excess-d-1/quadrilateral";
        case StructureCase::Dim3PentagonalPyramid: return "dim3/pentagonal-pyramid";
        case StructureCase::Dim3Antiwedge: return "dim3/antiwedge";
        case StructureCase::Dim3Shephard: return "dim3/shephard";
        case StructureCase::Dim3NoShephard: return "dim3/no-shephard";
        case StructureCase::Contradiction: return "contradiction";
    }
    return "?";
}

StructureVerdict small_excess_structure(const Polytope& p, const FaceLattice& l) {
    ExcessReport ex = excess(p, l);
    const int d = p.dim;
    if (ex.total != d - 2 && ex.total != d - 1)
        throw std::invalid_argument("small_excess_structure: excess " + std::to_string(ex.total) +
                                    " is neither d-2 nor d-1");
    Ctx c(p, l);
    if (ex.total == d - 2) return excess_dm2(c, ex);
    if (d == 3) return excess_dm1_dim3(c);
    return excess_dm1(c, ex);
}

StructureVerdict small_excess_structure(const Polytope& p) { return small_excess_structure(p, build_lattice(p)); }

Json analysis_report(const Polytope& p) {
    FaceLattice l = build_lattice(p);
    ExcessReport ex = excess(p, l);
    FacetPairProfile prof = facet_profile(p, l);
    PyramidStructure ps = pyramid_structure(p, l);
    Json j;
    j["name"] = p.name;
    j["provenance"] = p.provenance;
    j["dim"] = p.dim;
    j["f_vector"] = f_vector(l);
    j["excess"] = ex.total;
    j["vertex_excess"] = ex.per_vertex;
    j["nonsimple"] = ex.nonsimple;
    j["simple"] = ex.simple();
    j["semisimple"] = prof.semisimple;
    j["super_kirkman"] = prof.super_kirkman;
    j["shephard_facets"] = shephard_facets(p, l);
    j["kirkman_facets"] = kirkman_facets(p, l);
    j["weak_ks_facets"] = weak_ks_facets(p, l);
    j["pyramid"] = {{"r", ps.r}, {"apexes", ps.apexes}, {"base", ps.base.indices()}};
    if (ex.total == p.dim - 2 || ex.total == p.dim - 1) {
        StructureVerdict sv = small_excess_structure(p, l);
        Json s;
        s["case"] = to_string(sv.tag);
        s["face"] = sv.face.indices();
        s["facets"] = sv.facets;
        if (!sv.figure_type.empty()) s["figure_type"] = sv.figure_type;
        s["notes"] = sv.notes;
        s["conflicts"] = sv.conflicts;
        j["structure"] = s;
    }
    return j;
}

}  // namespace polyatlas
