#include "polyatlas/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "polyatlas/hull.hpp"

namespace polyatlas {

Polytope polytope_from_points(const std::vector<Point>& points, std::string name, std::string provenance) {
    HullResult h = convex_hull(points);
    if (static_cast<int>(h.vertices.size()) > VertexSet::kCapacity)
        throw std::invalid_argument("polytope has more vertices than supported");

    std::vector<int> order = h.vertices;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(points[a], points[b]); });
    std::vector<int> pos(points.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    Polytope p;
    p.dim = h.dim;
    p.num_vertices = static_cast<int>(order.size());
    std::vector<Point> pts;
    for (int idx : order) pts.push_back(points[idx]);
    p.realization = std::move(pts);
    for (const auto& f : h.facets) {
        VertexSet s;
        for (int v : f.vertices) s.set(pos[v]);
        p.facets.push_back(s);
    }
    std::sort(p.facets.begin(), p.facets.end());
    p.name = std::move(name);
    p.provenance = std::move(provenance);
    return p;
}

Polytope polytope_from_facets(int dim, int num_vertices, const std::vector<std::vector<int>>& facets,
                              std::string name, std::string provenance) {
    if (num_vertices > VertexSet::kCapacity) throw std::invalid_argument("polytope has more vertices than supported");
    Polytope p;
    p.dim = dim;
    p.num_vertices = num_vertices;
    for (const auto& f : facets) {
        VertexSet s;
        for (int v : f) {
            if (v < 0 || v >= num_vertices) throw std::invalid_argument("facet index out of range");
            s.set(v);
        }
        p.facets.push_back(s);
    }
    std::sort(p.facets.begin(), p.facets.end());
    p.name = std::move(name);
    p.provenance = std::move(provenance);
    return p;
}

Polytope relabel(const Polytope& p, const std::vector<int>& perm) {
    Polytope q = p;
    for (auto& f : q.facets) {
        VertexSet s;
        for (int v : f.indices()) s.set(perm[v]);
        f = s;
    }
    std::sort(q.facets.begin(), q.facets.end());
    if (p.realization) {
        std::vector<Point> pts(p.num_vertices);
        for (int v = 0; v < p.num_vertices; ++v) pts[perm[v]] = (*p.realization)[v];
        q.realization = std::move(pts);
    }
    return q;
}

std::vector<int> facets_of_vertex(const Polytope& p, int v) {
    std::vector<int> out;
    for (size_t f = 0; f < p.facets.size(); ++f)
        if (p.facets[f].test(v)) out.push_back(static_cast<int>(f));
    return out;
}

}  // namespace polyatlas
