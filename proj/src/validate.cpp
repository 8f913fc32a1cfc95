#include "polyatlas/validate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "polyatlas/hull.hpp"
#include "polyatlas/lattice.hpp"

namespace polyatlas {

namespace {

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

bool connected_without(const std::vector<std::vector<int>>& adj, const std::vector<bool>& removed) {
    const int n = static_cast<int>(adj.size());
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<bool> seen(n, false);
    std::deque<int> q{start};
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push_back(w);
            }
    }
    return reached == alive;
}

// Number of internally vertex-disjoint s-t paths, capped at `cap`.
int local_connectivity(const std::vector<std::vector<int>>& adj, int s, int t, int cap) {
    const int n = static_cast<int>(adj.size());
    // Split node v into v_in = 2v and v_out = 2v+1.
    const int N = 2 * n;
    std::vector<std::vector<int>> g(N);
    std::vector<std::vector<int>> capm(N, std::vector<int>(N, 0));
    auto arc = [&](int a, int b, int c) {
        if (capm[a][b] == 0 && capm[b][a] == 0) {
            g[a].push_back(b);
            g[b].push_back(a);
        }
        capm[a][b] += c;
    };
    for (int v = 0; v < n; ++v) arc(2 * v, 2 * v + 1, (v == s || v == t) ? cap : 1);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) arc(2 * v + 1, 2 * w, cap);
    int flow = 0;
    const int src = 2 * s + 1, dst = 2 * t;
    while (flow < cap) {
        std::vector<int> prev(N, -1);
        prev[src] = src;
        std::deque<int> q{src};
        while (!q.empty() && prev[dst] < 0) {
            int a = q.front();
            q.pop_front();
            for (int b : g[a])
                if (prev[b] < 0 && capm[a][b] > 0) {
                    prev[b] = a;
                    q.push_back(b);
                }
        }
        if (prev[dst] < 0) break;
        for (int b = dst; b != src; b = prev[b]) {
            --capm[prev[b]][b];
            ++capm[b][prev[b]];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool is_k_connected(const std::vector<std::vector<int>>& adj, int k, std::vector<int>* witness) {
    const int n = static_cast<int>(adj.size());
    if (n <= k) return false;
    if (k <= 0) return true;
    if (n <= 20) {
        std::vector<bool> removed(n, false);
        std::vector<int> chosen;
        std::function<bool(int)> rec = [&](int start) -> bool {
            if (static_cast<int>(chosen.size()) == k - 1) {
                if (connected_without(adj, removed)) return true;
                if (witness) *witness = chosen;
                return false;
            }
            for (int v = start; v < n; ++v) {
                removed[v] = true;
                chosen.push_back(v);
                bool ok = rec(v + 1);
                chosen.pop_back();
                removed[v] = false;
                if (!ok) return false;
            }
            return true;
        };
        return rec(0);
    }
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (std::binary_search(adj[s].begin(), adj[s].end(), t)) continue;
            if (local_connectivity(adj, s, t, k) < k) {
                if (witness) *witness = {s, t};
                return false;
            }
        }
    return true;
}

ValidationReport validate(const Polytope& p) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool ok, const std::string& w) {
        rep.checks.push_back({name, ok, ok ? std::string() : w});
    };

    {
        std::string w;
        if (static_cast<int>(p.facets.size()) < p.dim + 1)
            w = "only " + std::to_string(p.facets.size()) + " facets";
        for (size_t f = 0; f < p.facets.size() && w.empty(); ++f) {
            if (p.facets[f].last() >= p.num_vertices) w = "facet " + std::to_string(f) + " has an out-of-range index";
            for (size_t g = 0; g < p.facets.size() && w.empty(); ++g)
                if (f != g && p.facets[f].subset_of(p.facets[g]))
                    w = "facet " + show(p.facets[f].indices()) + " lies in facet " + show(p.facets[g].indices());
        }
        for (int v = 0; v < p.num_vertices && w.empty(); ++v)
            if (static_cast<int>(facets_of_vertex(p, v).size()) < p.dim)
                w = "vertex " + std::to_string(v) + " lies in fewer than " + std::to_string(p.dim) + " facets";
        add("incidence", w.empty(), w);
    }
    if (!rep.ok()) return rep;

    std::vector<LatticeIssue> issues;
    FaceLattice l = build_lattice_unchecked(p, issues);
    auto first_of = [&](std::initializer_list<const char*> kinds) -> std::string {
        for (const auto& is : issues)
            for (const char* k : kinds)
                if (is.kind == k) return is.detail;
        return {};
    };
    std::string graded = first_of({"rank", "graded", "vertex", "facet", "edge"});
    add("graded", graded.empty(), graded);
    std::string diamond = first_of({"diamond"});
    add("diamond", diamond.empty(), diamond);
    if (!issues.empty()) return rep;

    auto fv = f_vector(l);
    long euler = 0;
    for (size_t i = 0; i < fv.size(); ++i) euler += (i % 2 ? -1 : 1) * fv[i];
    long expect = 1 - ((p.dim % 2) ? -1 : 1);
    add("euler", euler == expect, "alternating sum " + std::to_string(euler) + " != " + std::to_string(expect));

    {
        std::string w;
        if (p.dim >= 2)
            for (int r : l.faces_of_rank(p.dim - 2)) {
                int c = 0;
                for (const auto& f : p.facets)
                    if (l.faces[r].subset_of(f)) ++c;
                if (c != 2) {
                    w = "ridge " + show(l.faces[r].indices()) + " lies in " + std::to_string(c) + " facets";
                    break;
                }
            }
        add("ridges", w.empty(), w);
    }

    {
        std::vector<int> sep;
        bool ok = is_k_connected(adjacency(l), p.dim, &sep);
        add("balinski", ok, "separating set " + show(sep));
    }

    if (p.realization) {
        std::string w;
        try {
            HullResult h = convex_hull(*p.realization);
            if (h.dim != p.dim) w = "realization spans dimension " + std::to_string(h.dim);
            else if (static_cast<int>(h.vertices.size()) != p.num_vertices) w = "some listed point is not extreme";
            else {
                std::set<VertexSet> a(p.facets.begin(), p.facets.end()), b;
                for (const auto& f : h.facets) b.insert(VertexSet(f.vertices.begin(), f.vertices.end()));
                if (a != b) w = "facet incidences differ from the hull of the realization";
            }
        } catch (const std::exception& e) {
            w = e.what();
        }
        add("realization", w.empty(), w);
    }
    return rep;
}

}  // namespace polyatlas
