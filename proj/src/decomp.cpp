#include "polyatlas/decomp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyatlas/analysis.hpp"
#include "polyatlas/linalg.hpp"

namespace polyatlas {

bool GeometricGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

GeometricGraph skeleton_graph(const Polytope& p, const FaceLattice& l) {
    if (!p.realized()) throw std::invalid_argument("skeleton_graph: polytope has no realization");
    GeometricGraph g;
    g.points = *p.realization;
    g.edges = skeleton(l);
    for (auto& e : g.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool check_cycle(const GeometricGraph& g, const std::vector<int>& cycle) {
    const size_t k = cycle.size();
    if (k < 3) throw std::invalid_argument("check_cycle: a cycle needs at least three vertices");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("check_cycle: repeated vertex");
    std::vector<Point> pts;
    for (size_t i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if (a < 0 || b < 0 || a >= static_cast<int>(g.points.size()) || b >= static_cast<int>(g.points.size()))
            throw std::invalid_argument("check_cycle: vertex out of range");
        if (!g.has_edge(a, b))
            throw std::invalid_argument("check_cycle: missing edge " + std::to_string(a) + "-" + std::to_string(b));
        pts.push_back(g.points[a]);
    }
    return affine_dim(pts) == static_cast<int>(k) - 1;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Decomposable: return "Decomposable";
        case Verdict::Indecomposable: return "Indecomposable";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::None: return "None";
        case Evidence::ShephardFacet: return "ShephardFacet";
        case Evidence::Pyramid: return "Pyramid";
        case Evidence::IndecSubgraph: return "IndecSubgraph";
        case Evidence::DualFewNonsimple: return "DualFewNonsimple";
        case Evidence::FewDecomposableFacets: return "FewDecomposableFacets";
    }
    return "?";
}

namespace {

struct Component {
    int step;
    VertexSet verts;
};

bool covers_all(const Polytope& p, const VertexSet& s) {
    for (const auto& f : p.facets)
        if (!s.intersects(f)) return false;
    return true;
}

std::vector<std::vector<int>> seed_cycles(const Polytope& p, const FaceLattice& l) {
    std::vector<std::vector<int>> out;
    for (int r = 2; r <= p.dim; ++r)
        for (int i : l.faces_of_rank(r)) {
            const VertexSet& f = l.faces[i];
            if (f.count() != r + 1) continue;
            // Larger simplex faces are reached through their triangles as well;
            // the Hamiltonian cycle just gives a shorter derivation.
            bool maximal = true;
            for (int u : l.up[i])
                if (l.faces[u].count() == l.rank[u] + 1) maximal = false;
            if (r == 2 || maximal) out.push_back(f.indices());
        }
    return out;
}

// Affinely independent 4-cycles of the skeleton; used when triangles do not suffice.
std::vector<std::vector<int>> skew_quadrilaterals(const GeometricGraph& g, const std::vector<std::vector<int>>& adj,
                                                  size_t cap) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(adj.size());
    for (int a = 0; a < n && out.size() < cap; ++a)
        for (int b : adj[a]) {
            if (b <= a) continue;
            for (int c : adj[b]) {
                if (c <= a || c == b) continue;
                for (int d : adj[c]) {
                    if (d <= b || d == c || !g.has_edge(d, a)) continue;
                    std::vector<int> cyc{a, b, c, d};
                    if (check_cycle(g, cyc)) out.push_back(cyc);
                    if (out.size() >= cap) return out;
                }
            }
        }
    return out;
}

std::optional<IndecSubgraph> grow_from(const Polytope& p, const std::vector<std::vector<int>>& adj,
                                       const std::vector<std::vector<int>>& seeds) {
    std::vector<DerivationStep> steps;
    std::vector<Component> comps;
    for (const auto& cyc : seeds) {
        DerivationStep s;
        s.rule = DerivationStep::Rule::Cycle;
        s.cycle = cyc;
        comps.push_back({static_cast<int>(steps.size()), VertexSet(cyc.begin(), cyc.end())});
        steps.push_back(std::move(s));
    }
    auto order = [](const Component& a, const Component& b) {
        int ca = a.verts.count(), cb = b.verts.count();
        return ca != cb ? ca > cb : a.verts < b.verts;
    };
    std::stable_sort(comps.begin(), comps.end(), order);

    int root = -1;
    for (;;) {
        for (const auto& c : comps)
            if (covers_all(p, c.verts)) {
                root = c.step;
                break;
            }
        if (root >= 0) break;

        bool changed = false;
        for (size_t i = 0; i < comps.size() && !changed; ++i)
            for (size_t j = i + 1; j < comps.size() && !changed; ++j) {
                VertexSet common = comps[i].verts & comps[j].verts;
                if (common.count() < 2) continue;
                auto idx = common.indices();
                DerivationStep s;
                s.rule = DerivationStep::Rule::Merge;
                s.left = comps[i].step;
                s.right = comps[j].step;
                s.shared = {idx[0], idx[1]};
                Component merged{static_cast<int>(steps.size()), comps[i].verts | comps[j].verts};
                steps.push_back(std::move(s));
                comps.erase(comps.begin() + j);
                comps.erase(comps.begin() + i);
                comps.push_back(merged);
                std::stable_sort(comps.begin(), comps.end(), order);
                changed = true;
            }
        for (size_t i = 0; i < comps.size() && !changed; ++i)
            for (int v = 0; v < p.num_vertices && !changed; ++v) {
                if (comps[i].verts.test(v)) continue;
                std::vector<int> via;
                for (int u : adj[v])
                    if (comps[i].verts.test(u)) via.push_back(u);
                if (via.size() < 2) continue;
                std::sort(via.begin(), via.end());
                DerivationStep s;
                s.rule = DerivationStep::Rule::Absorb;
                s.left = comps[i].step;
                s.vertex = v;
                s.via = {via[0], via[1]};
                comps[i].verts.set(v);
                comps[i].step = static_cast<int>(steps.size());
                steps.push_back(std::move(s));
                std::stable_sort(comps.begin(), comps.end(), order);
                changed = true;
            }
        if (!changed) return std::nullopt;
    }

    // Keep only the steps the root depends on, renumbered in order.
    std::vector<char> used(steps.size(), 0);
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        if (used[s]) continue;
        used[s] = 1;
        if (steps[s].left >= 0) stack.push_back(steps[s].left);
        if (steps[s].right >= 0) stack.push_back(steps[s].right);
    }
    std::vector<int> renum(steps.size(), -1);
    IndecSubgraph cert;
    for (size_t s = 0; s < steps.size(); ++s) {
        if (!used[s]) continue;
        renum[s] = static_cast<int>(cert.steps.size());
        DerivationStep st = steps[s];
        if (st.left >= 0) st.left = renum[st.left];
        if (st.right >= 0) st.right = renum[st.right];
        cert.steps.push_back(std::move(st));
    }
    cert.root = renum[root];

    VertexSet covered;
    for (const auto& st : cert.steps) {
        for (int v : st.cycle) covered.set(v);
        if (st.vertex >= 0) covered.set(st.vertex);
    }
    for (const auto& f : p.facets) cert.facet_witness.push_back((f & covered).first());
    return cert;
}

}  // namespace

std::optional<IndecSubgraph> grow_certificate(const Polytope& p, const FaceLattice& l) {
    if (!p.realized() || p.dim < 2) return std::nullopt;
    GeometricGraph g = skeleton_graph(p, l);
    auto adj = adjacency(l);
    std::vector<std::vector<int>> seeds = seed_cycles(p, l);
    if (auto c = grow_from(p, adj, seeds)) return c;
    if (p.dim < 3) return std::nullopt;
    auto quads = skew_quadrilaterals(g, adj, 4096);
    if (quads.empty()) return std::nullopt;
    seeds.insert(seeds.end(), quads.begin(), quads.end());
    return grow_from(p, adj, seeds);
}

std::optional<IndecSubgraph> grow_certificate(const Polytope& p) { return grow_certificate(p, build_lattice(p)); }

namespace {

std::vector<int> nonsimplex_facets(const Polytope& p) {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(p.facets.size()); ++f)
        if (p.facets[f].count() != p.dim) out.push_back(f);
    return out;
}

}  // namespace

DecompCertificate classify(const Polytope& p, int depth) {
    FaceLattice l = build_lattice(p);
    DecompCertificate c;

    std::vector<int> sh = shephard_facets(p, l);
    for (int f : sh) {
        int outside = p.num_vertices - p.facets[f].count();
        if (outside >= 2) {
            c.verdict = Verdict::Decomposable;
            c.evidence = Evidence::ShephardFacet;
            c.facet = f;
            c.outside = outside;
            return c;
        }
    }

    PyramidStructure ps = pyramid_structure(p, l);
    if (ps.r >= 1) {
        c.verdict = Verdict::Indecomposable;
        c.evidence = Evidence::Pyramid;
        c.apex = ps.apexes[0];
        return c;
    }

    if (p.realized()) {
        if (auto g = grow_certificate(p, l)) {
            c.verdict = Verdict::Indecomposable;
            c.evidence = Evidence::IndecSubgraph;
            c.subgraph = std::move(g);
            return c;
        }
    }

    // Vertices of the dual are the facets of p; simplex facets are its simple vertices.
    std::vector<int> ns = nonsimplex_facets(p);
    if (static_cast<int>(ns.size()) <= p.dim - 1) {
        c.verdict = Verdict::Indecomposable;
        c.evidence = Evidence::DualFewNonsimple;
        c.nonsimple = ns;
        c.reason = "at most d-1 facets are not simplices";
        return c;
    }

    if (depth > 0 && p.dim >= 2) {
        std::vector<DecompCertificate> subs;
        int open = 0;
        for (const auto& f : p.facets) {
            subs.push_back(classify(face_as_polytope(p, l, f), depth - 1));
            if (subs.back().verdict != Verdict::Indecomposable) ++open;
        }
        if (open < p.dim) {
            c.verdict = Verdict::Indecomposable;
            c.evidence = Evidence::FewDecomposableFacets;
            c.facet_certs = std::move(subs);
            return c;
        }
    }

    c.reason = p.realized() ? "no rule applies" : "no rule applies; geometric rules need a realization";
    return c;
}

std::optional<DecompCertificate> count_nonsimple_dual_rule(const Polytope& p) {
    ExcessReport ex = excess(p);
    if (static_cast<int>(ex.nonsimple.size()) > p.dim - 1) return std::nullopt;
    DecompCertificate c;
    c.verdict = Verdict::Indecomposable;
    c.evidence = Evidence::DualFewNonsimple;
    c.nonsimple = ex.nonsimple;
    c.reason = "dual of a polytope with at most d-1 nonsimple vertices";
    return c;
}

namespace {

CertificateCheck fail(std::string msg) { return {false, std::move(msg)}; }

CertificateCheck verify_subgraph(const Polytope& p, const FaceLattice& l, const IndecSubgraph& s) {
    if (!p.realized()) return fail("subgraph evidence needs a realization");
    GeometricGraph g = skeleton_graph(p, l);
    const int n = p.num_vertices;
    std::vector<VertexSet> comp;
    auto in_range = [&](int v) { return v >= 0 && v < n; };
    for (size_t i = 0; i < s.steps.size(); ++i) {
        const auto& st = s.steps[i];
        auto earlier = [&](int k) { return k >= 0 && k < static_cast<int>(i); };
        switch (st.rule) {
            case DerivationStep::Rule::Cycle: {
                try {
                    if (!check_cycle(g, st.cycle)) return fail("step " + std::to_string(i) + ": cycle not affinely independent");
                } catch (const std::invalid_argument& e) {
                    return fail("step " + std::to_string(i) + ": " + e.what());
                }
                comp.emplace_back(st.cycle.begin(), st.cycle.end());
                break;
            }
            case DerivationStep::Rule::Merge: {
                if (!earlier(st.left) || !earlier(st.right) || st.left == st.right)
                    return fail("step " + std::to_string(i) + ": bad merge operands");
                if (st.shared.size() != 2 || st.shared[0] == st.shared[1])
                    return fail("step " + std::to_string(i) + ": merge needs two shared vertices");
                for (int v : st.shared)
                    if (!in_range(v) || !comp[st.left].test(v) || !comp[st.right].test(v))
                        return fail("step " + std::to_string(i) + ": vertex " + std::to_string(v) + " not shared");
                comp.push_back(comp[st.left] | comp[st.right]);
                break;
            }
            case DerivationStep::Rule::Absorb: {
                if (!earlier(st.left)) return fail("step " + std::to_string(i) + ": bad absorb operand");
                if (!in_range(st.vertex) || comp[st.left].test(st.vertex))
                    return fail("step " + std::to_string(i) + ": absorbed vertex must be new");
                if (st.via.size() != 2 || st.via[0] == st.via[1])
                    return fail("step " + std::to_string(i) + ": absorb needs two distinct neighbours");
                for (int u : st.via)
                    if (!in_range(u) || !comp[st.left].test(u) || !g.has_edge(u, st.vertex))
                        return fail("step " + std::to_string(i) + ": edge " + std::to_string(u) + "-" +
                                    std::to_string(st.vertex) + " unavailable");
                VertexSet x = comp[st.left];
                x.set(st.vertex);
                comp.push_back(x);
                break;
            }
        }
    }
    if (s.root < 0 || s.root >= static_cast<int>(comp.size())) return fail("root out of range");
    if (s.facet_witness.size() != p.facets.size()) return fail("coverage list has the wrong length");
    for (size_t f = 0; f < p.facets.size(); ++f) {
        int w = s.facet_witness[f];
        if (!in_range(w) || !p.facets[f].test(w) || !comp[s.root].test(w))
            return fail("facet " + std::to_string(f) + " not covered");
    }
    return {};
}

}  // namespace

CertificateCheck verify_certificate(const Polytope& p, const DecompCertificate& c) {
    FaceLattice l = build_lattice(p);
    const int m = static_cast<int>(p.facets.size());
    auto expect = [&](Verdict v) { return c.verdict == v; };
    switch (c.evidence) {
        case Evidence::None:
            return expect(Verdict::Unknown) ? CertificateCheck{} : fail("verdict without evidence");
        case Evidence::ShephardFacet: {
            if (!expect(Verdict::Decomposable)) return fail("Shephard evidence must give Decomposable");
            if (c.facet < 0 || c.facet >= m) return fail("facet index out of range");
            auto sh = shephard_facets(p, l);
            if (!std::binary_search(sh.begin(), sh.end(), c.facet)) return fail("facet lacks Shephard's property");
            int outside = p.num_vertices - p.facets[c.facet].count();
            if (outside != c.outside || outside < 2) return fail("fewer than two vertices outside the facet");
            return {};
        }
        case Evidence::Pyramid: {
            if (!expect(Verdict::Indecomposable)) return fail("pyramid evidence must give Indecomposable");
            if (c.apex < 0 || c.apex >= p.num_vertices) return fail("apex out of range");
            int missing = 0;
            for (const auto& f : p.facets)
                if (!f.test(c.apex)) ++missing;
            return missing == 1 ? CertificateCheck{} : fail("apex misses " + std::to_string(missing) + " facets");
        }
        case Evidence::IndecSubgraph:
            if (!expect(Verdict::Indecomposable)) return fail("subgraph evidence must give Indecomposable");
            if (!c.subgraph) return fail("missing derivation");
            return verify_subgraph(p, l, *c.subgraph);
        case Evidence::DualFewNonsimple: {
            if (!expect(Verdict::Indecomposable)) return fail("dual rule must give Indecomposable");
            auto ns = nonsimplex_facets(p);
            if (static_cast<int>(ns.size()) > p.dim - 1)
                return fail(std::to_string(ns.size()) + " facets are not simplices");
            return {};
        }
        case Evidence::FewDecomposableFacets: {
            if (!expect(Verdict::Indecomposable)) return fail("facet count evidence must give Indecomposable");
            if (static_cast<int>(c.facet_certs.size()) != m) return fail("need one sub-certificate per facet");
            int open = 0;
            for (int f = 0; f < m; ++f) {
                const auto& sub = c.facet_certs[f];
                CertificateCheck r = verify_certificate(face_as_polytope(p, l, p.facets[f]), sub);
                if (!r.ok) return fail("facet " + std::to_string(f) + ": " + r.message);
                if (sub.verdict != Verdict::Indecomposable) ++open;
            }
            if (open >= p.dim) return fail(std::to_string(open) + " facets not shown indecomposable");
            return {};
        }
    }
    return fail("unknown evidence");
}

Json certificate_to_json(const DecompCertificate& c) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["evidence"] = to_string(c.evidence);
    j["scope"] = "this realization";
    if (!c.reason.empty()) j["reason"] = c.reason;
    switch (c.evidence) {
        case Evidence::ShephardFacet:
            j["facet"] = c.facet;
            j["outside"] = c.outside;
            break;
        case Evidence::Pyramid: j["apex"] = c.apex; break;
        case Evidence::DualFewNonsimple: j["nonsimple"] = c.nonsimple; break;
        case Evidence::IndecSubgraph: {
            Json steps = Json::array();
            for (const auto& s : c.subgraph->steps) {
                Json x;
                switch (s.rule) {
                    case DerivationStep::Rule::Cycle:
                        x["rule"] = "cycle";
                        x["cycle"] = s.cycle;
                        break;
                    case DerivationStep::Rule::Merge:
                        x["rule"] = "merge";
                        x["left"] = s.left;
                        x["right"] = s.right;
                        x["shared"] = s.shared;
                        break;
                    case DerivationStep::Rule::Absorb:
                        x["rule"] = "absorb";
                        x["left"] = s.left;
                        x["vertex"] = s.vertex;
                        x["via"] = s.via;
                        break;
                }
                steps.push_back(x);
            }
            j["steps"] = steps;
            j["root"] = c.subgraph->root;
            j["facet_witness"] = c.subgraph->facet_witness;
            break;
        }
        case Evidence::FewDecomposableFacets: {
            Json subs = Json::array();
            for (const auto& s : c.facet_certs) subs.push_back(certificate_to_json(s));
            j["facets"] = subs;
            break;
        }
        case Evidence::None: break;
    }
    return j;
}

DecompCertificate certificate_from_json(const Json& j) {
    static const std::map<std::string, Verdict> verdicts{
        {"Decomposable", Verdict::Decomposable}, {"Indecomposable", Verdict::Indecomposable}, {"Unknown", Verdict::Unknown}};
    static const std::map<std::string, Evidence> kinds{{"None", Evidence::None},
                                                       {"ShephardFacet", Evidence::ShephardFacet},
                                                       {"Pyramid", Evidence::Pyramid},
                                                       {"IndecSubgraph", Evidence::IndecSubgraph},
                                                       {"DualFewNonsimple", Evidence::DualFewNonsimple},
                                                       {"FewDecomposableFacets", Evidence::FewDecomposableFacets}};
    DecompCertificate c;
    auto v = verdicts.find(j.at("verdict").get<std::string>());
    auto k = kinds.find(j.at("evidence").get<std::string>());
    if (v == verdicts.end() || k == kinds.end()) throw std::invalid_argument("certificate: unknown verdict or evidence");
    c.verdict = v->second;
    c.evidence = k->second;
    c.reason = j.value("reason", "");
    switch (c.evidence) {
        case Evidence::ShephardFacet:
            c.facet = j.at("facet").get<int>();
            c.outside = j.at("outside").get<int>();
            break;
        case Evidence::Pyramid: c.apex = j.at("apex").get<int>(); break;
        case Evidence::DualFewNonsimple: c.nonsimple = j.at("nonsimple").get<std::vector<int>>(); break;
        case Evidence::IndecSubgraph: {
            IndecSubgraph s;
            for (const auto& x : j.at("steps")) {
                DerivationStep st;
                std::string rule = x.at("rule").get<std::string>();
                if (rule == "cycle") {
                    st.rule = DerivationStep::Rule::Cycle;
                    st.cycle = x.at("cycle").get<std::vector<int>>();
                } else if (rule == "merge") {
                    st.rule = DerivationStep::Rule::Merge;
                    st.left = x.at("left").get<int>();
                    st.right = x.at("right").get<int>();
                    st.shared = x.at("shared").get<std::vector<int>>();
                } else if (rule == "absorb") {
                    st.rule = DerivationStep::Rule::Absorb;
                    st.left = x.at("left").get<int>();
                    st.vertex = x.at("vertex").get<int>();
                    st.via = x.at("via").get<std::vector<int>>();
                } else {
                    throw std::invalid_argument("certificate: unknown rule " + rule);
                }
                s.steps.push_back(std::move(st));
            }
            s.root = j.at("root").get<int>();
            s.facet_witness = j.at("facet_witness").get<std::vector<int>>();
            c.subgraph = std::move(s);
            break;
        }
        case Evidence::FewDecomposableFacets:
            for (const auto& x : j.at("facets")) c.facet_certs.push_back(certificate_from_json(x));
            break;
        case Evidence::None: break;
    }
    return c;
}

}  // namespace polyatlas
