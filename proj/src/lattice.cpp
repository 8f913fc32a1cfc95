#include "polyatlas/lattice.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace polyatlas {

namespace {

std::string show(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s.indices()) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

bool size_then_lex(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
}

}  // namespace

FaceLattice build_lattice_unchecked(const Polytope& p, std::vector<LatticeIssue>& issues) {
    FaceLattice l;
    l.dim = p.dim;
    l.num_vertices = p.num_vertices;
    const int n = p.num_vertices;
    const VertexSet all = VertexSet::range(n);

    std::vector<VertexSet> facets = p.facets;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    const size_t m = facets.size();

    std::unordered_set<VertexSet, VertexSetHash> seen{all, VertexSet{}};
    std::deque<VertexSet> queue;
    for (const auto& f : facets)
        if (seen.insert(f).second) queue.push_back(f);
    while (!queue.empty()) {
        VertexSet x = queue.front();
        queue.pop_front();
        for (const auto& f : facets) {
            VertexSet y = x & f;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    l.faces.assign(seen.begin(), seen.end());
    std::sort(l.faces.begin(), l.faces.end(), size_then_lex);
    for (size_t i = 0; i < l.faces.size(); ++i) l.index[l.faces[i]] = static_cast<int>(i);

    std::vector<boost::dynamic_bitset<>> facets_at(n, boost::dynamic_bitset<>(m));
    for (size_t f = 0; f < m; ++f)
        for (int v : facets[f].indices()) facets_at[v].set(f);

    const size_t nf = l.faces.size();
    l.up.assign(nf, {});
    l.down.assign(nf, {});
    for (size_t i = 0; i < nf; ++i) {
        const VertexSet& x = l.faces[i];
        if (x == all) continue;
        boost::dynamic_bitset<> fx(m);
        fx.set();
        for (int v : x.indices()) fx &= facets_at[v];
        std::vector<VertexSet> cands;
        for (int v = 0; v < n; ++v) {
            if (x.test(v)) continue;
            boost::dynamic_bitset<> fy = fx & facets_at[v];
            VertexSet y = all;
            for (size_t f = fy.find_first(); f != boost::dynamic_bitset<>::npos; f = fy.find_next(f)) y &= facets[f];
            cands.push_back(y);
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& y : cands) {
            bool minimal = true;
            for (const auto& z : cands)
                if (z != y && z.subset_of(y)) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            int j = l.find(y);
            l.up[i].push_back(j);
            l.down[j].push_back(static_cast<int>(i));
        }
    }

    l.rank.assign(nf, -1);
    for (size_t j = 0; j < nf; ++j) {
        if (l.faces[j].empty()) continue;
        int r = -1;
        for (int i : l.down[j]) r = std::max(r, l.rank[i] + 1);
        l.rank[j] = r;
    }
    int top = l.rank[l.find(all)];
    if (top != p.dim)
        issues.push_back({"rank", VertexSet{}, all,
                          "top element has rank " + std::to_string(top) + ", expected " + std::to_string(p.dim)});
    for (size_t i = 0; i < nf; ++i)
        for (int j : l.up[i])
            if (l.rank[j] != l.rank[i] + 1)
                issues.push_back({"graded", l.faces[i], l.faces[j],
                                  "cover " + show(l.faces[i]) + " < " + show(l.faces[j]) + " skips a rank"});

    for (int v = 0; v < n; ++v) {
        VertexSet atom{v};
        if (l.find(atom) < 0)
            issues.push_back({"vertex", VertexSet{}, atom, "vertex " + std::to_string(v) + " is not a face"});
    }
    for (const auto& f : p.facets) {
        int i = l.find(f);
        if (i >= 0 && l.rank[i] != p.dim - 1)
            issues.push_back({"facet", f, all, "facet " + show(f) + " is not a coatom"});
    }

    std::vector<int> cnt(nf, 0);
    for (size_t i = 0; i < nf; ++i) {
        std::vector<int> touched;
        for (int y : l.up[i])
            for (int z : l.up[y]) {
                if (cnt[z]++ == 0) touched.push_back(z);
            }
        for (int z : touched) {
            if (cnt[z] != 2)
                issues.push_back({"diamond", l.faces[i], l.faces[z],
                                  "interval [" + show(l.faces[i]) + ", " + show(l.faces[z]) + "] has " +
                                      std::to_string(cnt[z]) + " middle elements"});
            cnt[z] = 0;
        }
    }

    l.by_rank.assign(p.dim + 2 > 1 ? p.dim + 2 : 1, {});
    for (size_t i = 0; i < nf; ++i) {
        int r = l.rank[i];
        if (r + 1 >= static_cast<int>(l.by_rank.size())) l.by_rank.resize(r + 2);
        l.by_rank[r + 1].push_back(static_cast<int>(i));
    }
    l.degree.assign(n, 0);
    if (l.by_rank.size() > 2)
        for (int e : l.by_rank[2]) {
            if (l.faces[e].count() != 2) {
                issues.push_back({"edge", VertexSet{}, l.faces[e], "rank-1 face " + show(l.faces[e]) + " is not an edge"});
                continue;
            }
            for (int v : l.faces[e].indices()) ++l.degree[v];
        }
    return l;
}

FaceLattice build_lattice(const Polytope& p) {
    std::vector<LatticeIssue> issues;
    FaceLattice l = build_lattice_unchecked(p, issues);
    if (!issues.empty()) throw InvalidPolytope("invalid polytope: " + issues.front().detail);
    return l;
}

std::vector<int> f_vector(const FaceLattice& l) {
    std::vector<int> f;
    for (int r = 0; r < l.dim; ++r) f.push_back(static_cast<int>(l.faces_of_rank(r).size()));
    return f;
}

std::vector<int> f_vector(const Polytope& p) { return f_vector(build_lattice(p)); }

std::vector<std::pair<int, int>> skeleton(const FaceLattice& l) {
    std::vector<std::pair<int, int>> edges;
    if (l.dim < 1) return edges;
    for (int e : l.faces_of_rank(1)) {
        auto ix = l.faces[e].indices();
        edges.emplace_back(ix[0], ix[1]);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::vector<int>> adjacency(const FaceLattice& l) {
    std::vector<std::vector<int>> adj(l.num_vertices);
    for (auto [a, b] : skeleton(l)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> degrees(const FaceLattice& l) { return l.degree; }

VertexSet face_closure(const Polytope& p, const VertexSet& s) {
    VertexSet c = VertexSet::range(p.num_vertices);
    for (const auto& f : p.facets)
        if (s.subset_of(f)) c &= f;
    return c;
}

bool is_face(const Polytope& p, const VertexSet& s) { return face_closure(p, s) == s; }

Polytope face_as_polytope(const Polytope& p, const FaceLattice& l, const VertexSet& face) {
    int i = l.find(face);
    if (i < 0) throw std::invalid_argument("face_as_polytope: not a face");
    if (l.rank[i] < 1) throw std::invalid_argument("face_as_polytope: face must have rank at least 1");
    auto verts = face.indices();
    std::vector<int> pos(p.num_vertices, -1);
    for (size_t k = 0; k < verts.size(); ++k) pos[verts[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> facets;
    for (int j : l.down[i]) {
        std::vector<int> f;
        for (int v : l.faces[j].indices()) f.push_back(pos[v]);
        facets.push_back(f);
    }
    Polytope q = polytope_from_facets(l.rank[i], static_cast<int>(verts.size()), facets);
    if (p.realization) {
        std::vector<Point> pts;
        for (int v : verts) pts.push_back(p.point(v));
        q.realization = std::move(pts);
    }
    return q;
}

Polytope face_as_polytope(const Polytope& p, const VertexSet& face) {
    return face_as_polytope(p, build_lattice(p), face);
}

Polytope vertex_figure(const Polytope& p, const FaceLattice& l, int v) {
    if (v < 0 || v >= p.num_vertices) throw std::invalid_argument("vertex_figure: bad vertex");
    std::vector<VertexSet> edges;
    for (int e : l.faces_of_rank(1))
        if (l.faces[e].test(v)) edges.push_back(l.faces[e]);
    std::vector<std::vector<int>> facets;
    for (const auto& f : p.facets) {
        if (!f.test(v)) continue;
        std::vector<int> fe;
        for (size_t k = 0; k < edges.size(); ++k)
            if (edges[k].subset_of(f)) fe.push_back(static_cast<int>(k));
        facets.push_back(fe);
    }
    return polytope_from_facets(p.dim - 1, static_cast<int>(edges.size()), facets);
}

Polytope vertex_figure(const Polytope& p, int v) { return vertex_figure(p, build_lattice(p), v); }

Polytope dual(const Polytope& p) {
    std::vector<std::vector<int>> facets;
    for (int v = 0; v < p.num_vertices; ++v) facets.push_back(facets_of_vertex(p, v));
    Polytope q = polytope_from_facets(p.dim, static_cast<int>(p.facets.size()), facets);
    if (!p.provenance.empty()) q.provenance = "dual(" + p.provenance + ")";
    return q;
}

}  // namespace polyatlas
