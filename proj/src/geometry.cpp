#include "polyatlas/geometry.hpp"

#include <stdexcept>

#include "polyatlas/lattice.hpp"
#include "polyatlas/linalg.hpp"

namespace polyatlas {

namespace {

void require_realization(const Polytope& p, const char* op) {
    if (!p.realized()) throw std::invalid_argument(std::string(op) + ": polytope has no realization");
}

std::vector<Point> points_of(const Polytope& p, const VertexSet& s) {
    std::vector<Point> pts;
    for (int v : s.indices()) pts.push_back(p.point(v));
    return pts;
}

}  // namespace

HalfSpace facet_halfspace(const Polytope& p, int f) {
    require_realization(p, "facet_halfspace");
    const auto& pts = *p.realization;
    const int ambient = static_cast<int>(pts[0].size());
    const Point inner = centroid(pts);

    // Normal must be orthogonal to the facet and lie in the polytope's direction space.
    Matrix dirs;
    for (int v = 1; v < p.num_vertices; ++v) dirs.push_back(sub(pts[v], pts[0]));
    Matrix rows;
    auto fv = p.facets.at(f).indices();
    for (size_t i = 1; i < fv.size(); ++i) rows.push_back(sub(pts[fv[i]], pts[fv[0]]));
    for (const auto& z : nullspace(dirs, ambient)) rows.push_back(z);
    auto ns = nullspace(rows, ambient);
    if (ns.size() != 1) throw InvalidPolytope("facet_halfspace: facet does not span a hyperplane");
    HalfSpace h{ns[0], dot(ns[0], pts[fv[0]])};
    if (dot(h.normal, inner) > h.offset) {
        for (auto& x : h.normal) x = -x;
        h.offset = -h.offset;
    }
    for (int v = 0; v < p.num_vertices; ++v) {
        Rational s = h.slack(pts[v]);
        if (s < 0 || (s == 0) != p.facets[f].test(v))
            throw InvalidPolytope("facet_halfspace: realization inconsistent with facet " + std::to_string(f));
    }
    return h;
}

std::vector<HalfSpace> facet_halfspaces(const Polytope& p) {
    std::vector<HalfSpace> hs;
    for (size_t f = 0; f < p.facets.size(); ++f) hs.push_back(facet_halfspace(p, static_cast<int>(f)));
    return hs;
}

std::pair<HalfSpace, Rational> supporting_halfspace(const Polytope& p, const VertexSet& face) {
    require_realization(p, "supporting_halfspace");
    if (face.empty() || !is_face(p, face) || face == VertexSet::range(p.num_vertices))
        throw std::invalid_argument("supporting_halfspace: not a proper nonempty face");
    const int ambient = static_cast<int>(p.point(0).size());
    HalfSpace h{std::vector<Rational>(ambient, Rational(0)), 0};
    for (size_t f = 0; f < p.facets.size(); ++f) {
        if (!face.subset_of(p.facets[f])) continue;
        HalfSpace g = facet_halfspace(p, static_cast<int>(f));
        h.normal = add(h.normal, g.normal);
        h.offset += g.offset;
    }
    return {h, h.offset};
}

Point beyond_point(const Polytope& p, int facet) {
    require_realization(p, "beyond_point");
    auto hs = facet_halfspaces(p);
    const HalfSpace& hf = hs.at(facet);
    Point c = centroid(points_of(p, p.facets[facet]));
    // Beyond facet: t > 0. Beneath facet g: n_g.c + t n_g.n < b_g.
    std::optional<Rational> upper;
    for (size_t g = 0; g < hs.size(); ++g) {
        if (static_cast<int>(g) == facet) continue;
        Rational rate = dot(hs[g].normal, hf.normal);
        if (rate <= 0) continue;
        Rational lim = hs[g].slack(c) / rate;
        if (lim <= 0) throw std::logic_error("beyond_point: empty feasible interval");
        if (!upper || lim < *upper) upper = lim;
    }
    Rational t = upper ? *upper / 2 : Rational(1);
    return add(c, scale(hf.normal, t));
}

Point beyond_face_point(const Polytope& p, const VertexSet& face) {
    require_realization(p, "beyond_face_point");
    if (face.empty() || !is_face(p, face) || face == VertexSet::range(p.num_vertices))
        throw std::invalid_argument("beyond_face_point: not a proper nonempty face");
    auto hs = facet_halfspaces(p);
    const Point o = centroid(*p.realization);
    const Point g = centroid(points_of(p, face));
    const Point dir = sub(g, o);
    // p(t) = g + t (g - o). Facets through the face are crossed for every t > 0;
    // the others must stay strictly satisfied.
    std::optional<Rational> upper;
    for (size_t f = 0; f < hs.size(); ++f) {
        if (face.subset_of(p.facets[f])) continue;
        Rational rate = dot(hs[f].normal, dir);
        if (rate <= 0) continue;
        Rational lim = hs[f].slack(g) / rate;
        if (!upper || lim < *upper) upper = lim;
    }
    Rational t = upper ? *upper / 2 : Rational(1);
    return add(g, scale(dir, t));
}

CutResult cut(const Polytope& p, const HalfSpace& h) {
    require_realization(p, "cut");
    FaceLattice l = build_lattice(p);
    std::vector<Rational> side(p.num_vertices);
    bool below = false, above = false;
    for (int v = 0; v < p.num_vertices; ++v) {
        side[v] = h.slack(p.point(v));
        if (side[v] == 0) throw std::invalid_argument("cut: hyperplane passes through vertex " + std::to_string(v));
        (side[v] > 0 ? below : above) = true;
    }
    if (!below || !above) throw std::invalid_argument("cut: hyperplane misses the interior");

    std::vector<Point> pts;
    for (int v = 0; v < p.num_vertices; ++v)
        if (side[v] > 0) pts.push_back(p.point(v));
    std::vector<Point> fresh;
    for (auto [a, b] : skeleton(l)) {
        if ((side[a] > 0) == (side[b] > 0)) continue;
        // Point on segment a-b where the slack vanishes.
        Rational t = side[a] / (side[a] - side[b]);
        fresh.push_back(add(p.point(a), scale(sub(p.point(b), p.point(a)), t)));
    }
    pts.insert(pts.end(), fresh.begin(), fresh.end());

    CutResult res;
    res.polytope = polytope_from_points(pts);
    if (res.polytope.dim != p.dim) throw std::logic_error("cut: dimension dropped");
    VertexSet under;
    for (int v = 0; v < res.polytope.num_vertices; ++v)
        if (h.slack(res.polytope.point(v)) == 0) under.set(v);
    for (size_t f = 0; f < res.polytope.facets.size(); ++f)
        if (res.polytope.facets[f] == under) res.underfacet = static_cast<int>(f);
    if (res.underfacet < 0) throw std::logic_error("cut: underfacet not found");
    return res;
}

}  // namespace polyatlas
