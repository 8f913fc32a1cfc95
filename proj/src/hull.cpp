#include "polyatlas/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "polyatlas/linalg.hpp"

namespace polyatlas {

namespace {

struct SimplexFacet {
    std::vector<int> verts;  // sorted positions into the working point list
    std::vector<Rational> normal;
    Rational offset;
};

SimplexFacet make_facet(const std::vector<Point>& pts, std::vector<int> verts, const Point& interior) {
    std::sort(verts.begin(), verts.end());
    const int k = static_cast<int>(interior.size());
    Matrix rows;
    for (size_t i = 1; i < verts.size(); ++i) rows.push_back(sub(pts[verts[i]], pts[verts[0]]));
    auto ns = nullspace(rows, k);
    if (ns.size() != 1) throw std::logic_error("convex_hull: degenerate simplex facet");
    SimplexFacet f{std::move(verts), std::move(ns[0]), 0};
    f.offset = dot(f.normal, pts[f.verts[0]]);
    if (dot(f.normal, interior) > f.offset) {
        for (auto& x : f.normal) x = -x;
        f.offset = -f.offset;
    }
    return f;
}

// Hull of points spanning R^k; returns the triangulated boundary.
std::vector<SimplexFacet> simplicial_hull(const std::vector<Point>& pts) {
    const int k = static_cast<int>(pts[0].size());
    std::vector<int> base{0};
    Matrix diffs;
    std::vector<bool> used(pts.size(), false);
    used[0] = true;
    for (size_t i = 1; i < pts.size() && static_cast<int>(base.size()) < k + 1; ++i) {
        diffs.push_back(sub(pts[i], pts[0]));
        if (rank(diffs) == static_cast<int>(diffs.size())) {
            base.push_back(static_cast<int>(i));
            used[i] = true;
        } else {
            diffs.pop_back();
        }
    }
    if (static_cast<int>(base.size()) != k + 1) throw std::logic_error("convex_hull: input not full-dimensional");

    std::vector<Point> base_pts;
    for (int b : base) base_pts.push_back(pts[b]);
    const Point interior = centroid(base_pts);

    std::vector<SimplexFacet> facets;
    for (int drop = 0; drop <= k; ++drop) {
        std::vector<int> v;
        for (int j = 0; j <= k; ++j)
            if (j != drop) v.push_back(base[j]);
        facets.push_back(make_facet(pts, v, interior));
    }

    for (size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        const Point& p = pts[i];
        std::vector<bool> visible(facets.size(), false);
        bool any = false;
        for (size_t f = 0; f < facets.size(); ++f)
            if (dot(facets[f].normal, p) > facets[f].offset) visible[f] = any = true;
        if (!any) continue;

        std::map<std::vector<int>, int> ridge_count;
        for (size_t f = 0; f < facets.size(); ++f) {
            if (!visible[f]) continue;
            const auto& v = facets[f].verts;
            for (size_t drop = 0; drop < v.size(); ++drop) {
                std::vector<int> r;
                for (size_t j = 0; j < v.size(); ++j)
                    if (j != drop) r.push_back(v[j]);
                ++ridge_count[r];
            }
        }
        std::vector<SimplexFacet> next;
        for (size_t f = 0; f < facets.size(); ++f)
            if (!visible[f]) next.push_back(std::move(facets[f]));
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<int> v = ridge;
            v.push_back(static_cast<int>(i));
            next.push_back(make_facet(pts, v, interior));
        }
        facets = std::move(next);
    }
    return facets;
}

void normalize(std::vector<Rational>& normal, Rational& offset) {
    for (const auto& x : normal) {
        if (x == 0) continue;
        Rational s = abs(x);
        for (auto& y : normal) y /= s;
        offset /= s;
        return;
    }
}

}  // namespace

HullResult convex_hull(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points");
    const size_t ambient = points[0].size();
    for (const auto& p : points)
        if (p.size() != ambient) throw std::invalid_argument("convex_hull: mixed ambient dimensions");

    // Canonical order: lexicographic, first occurrence wins on duplicates.
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(points[a], points[b]); });
    std::vector<int> uniq;
    for (int idx : order)
        if (uniq.empty() || points[uniq.back()] != points[idx]) uniq.push_back(idx);
    if (uniq.size() < 2) throw std::invalid_argument("convex_hull: fewer than 2 distinct points");

    // Select coordinates on which the projection is injective over the affine hull.
    Matrix diffs;
    for (size_t i = 1; i < uniq.size(); ++i) diffs.push_back(sub(points[uniq[i]], points[uniq[0]]));
    const int k = rank(diffs);
    std::vector<int> coords;
    for (size_t c = 0; c < ambient && static_cast<int>(coords.size()) < k; ++c) {
        Matrix sel(diffs.size());
        for (size_t r = 0; r < diffs.size(); ++r) {
            for (int cc : coords) sel[r].push_back(diffs[r][cc]);
            sel[r].push_back(diffs[r][c]);
        }
        if (rank(sel) == static_cast<int>(coords.size()) + 1) coords.push_back(static_cast<int>(c));
    }

    std::vector<Point> proj;
    for (int idx : uniq) {
        Point q;
        for (int c : coords) q.push_back(points[idx][c]);
        proj.push_back(std::move(q));
    }

    auto simplices = simplicial_hull(proj);

    // Merge coplanar simplices into facets.
    std::map<std::vector<Rational>, HalfSpace> planes;
    for (auto& s : simplices) {
        normalize(s.normal, s.offset);
        std::vector<Rational> key = s.normal;
        key.push_back(s.offset);
        planes.emplace(std::move(key), HalfSpace{s.normal, s.offset});
    }
    std::vector<HalfSpace> hs;
    for (auto& [key, h] : planes) hs.push_back(h);

    // A boundary point is a vertex iff the normals of its facets span R^k.
    std::vector<std::vector<int>> on(proj.size());
    for (size_t f = 0; f < hs.size(); ++f)
        for (size_t i = 0; i < proj.size(); ++i)
            if (dot(hs[f].normal, proj[i]) == hs[f].offset) on[i].push_back(static_cast<int>(f));
    std::vector<bool> is_vertex(proj.size(), false);
    for (size_t i = 0; i < proj.size(); ++i) {
        if (static_cast<int>(on[i].size()) < k) continue;
        Matrix normals;
        for (int f : on[i]) normals.push_back(hs[f].normal);
        is_vertex[i] = rank(normals) == k;
    }

    HullResult res;
    res.dim = k;
    for (size_t i = 0; i < proj.size(); ++i)
        if (is_vertex[i]) res.vertices.push_back(uniq[i]);
    std::sort(res.vertices.begin(), res.vertices.end());
    for (size_t f = 0; f < hs.size(); ++f) {
        HullFacet hf;
        hf.h.normal.assign(ambient, Rational(0));
        for (int j = 0; j < k; ++j) hf.h.normal[coords[j]] = hs[f].normal[j];
        hf.h.offset = hs[f].offset;
        for (size_t i = 0; i < proj.size(); ++i)
            if (is_vertex[i] && dot(hs[f].normal, proj[i]) == hs[f].offset) hf.vertices.push_back(uniq[i]);
        std::sort(hf.vertices.begin(), hf.vertices.end());
        res.facets.push_back(std::move(hf));
    }
    std::sort(res.facets.begin(), res.facets.end(),
              [](const HullFacet& a, const HullFacet& b) { return a.vertices < b.vertices; });
    return res;
}

}  // namespace polyatlas
