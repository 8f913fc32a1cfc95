#include "polyatlas/witness.hpp"

#include <mutex>
#include <set>
#include <tuple>

#include "polyatlas/canonical.hpp"
#include "polyatlas/corpus.hpp"
#include "polyatlas/families.hpp"
#include "polyatlas/lattice.hpp"

namespace polyatlas {

namespace {

int edges_of(const FaceLattice& l) { return static_cast<int>(l.faces_of_rank(1).size()); }

int first_simple_vertex(const Polytope& p, const FaceLattice& l) {
    for (int v = 0; v < p.num_vertices; ++v)
        if (l.degree[v] == p.dim) return v;
    return -1;
}

std::optional<VertexSet> first_simple_edge(const Polytope& p, const FaceLattice& l) {
    for (int e : l.faces_of_rank(1)) {
        auto ends = l.faces[e].indices();
        if (l.degree[ends[0]] == p.dim && l.degree[ends[1]] == p.dim) return l.faces[e];
    }
    return std::nullopt;
}

int first_facet_of_size(const Polytope& p, int size) {
    for (int f = 0; f < static_cast<int>(p.facets.size()); ++f)
        if (p.facets[f].count() == size) return f;
    return -1;
}

}  // namespace

std::optional<Polytope> witness_d3(int v, int e) {
    if (v < 4 || 2 * e < 3 * v || e > 3 * v - 6) return std::nullopt;
    Polytope p;
    if (e >= 2 * v - 2) {
        p = pyramid(polygon(3 * v - e - 3));
        for (int s = 0; s < e - 2 * v + 2; ++s) p = stack(p, first_facet_of_size(p, 3));
    } else {
        p = pyramid(polygon(2 * e - 3 * v + 3));
        for (int t = 0; t < 2 * v - e - 2; ++t) {
            FaceLattice l = build_lattice(p);
            p = truncate(p, VertexSet{first_simple_vertex(p, l)}).polytope;
        }
    }
    auto fv = f_vector(p);
    if (fv[0] != v || fv[1] != e) throw std::logic_error("witness_d3: scheme produced the wrong f-vector");
    return p;
}

WitnessSearch::WitnessSearch(int reps, long budget) : reps_(reps), budget_(budget) {}

int WitnessSearch::bound(int d) const {
    auto it = bound_.find(d);
    return it == bound_.end() ? 0 : it->second;
}

bool WitnessSearch::spend() {
    if (stats_.executed >= budget_) {
        stats_.budget_exhausted = true;
        return false;
    }
    ++stats_.executed;
    return true;
}

bool WitnessSearch::wants(int d, std::pair<int, int> key) const {
    if (feasibility(d, key.first, key.second).status == Status::Infeasible) return false;
    auto t = table_.find(d);
    if (t == table_.end()) return true;
    auto it = t->second.find(key);
    return it == t->second.end() || static_cast<int>(it->second.size()) < reps_;
}

bool WitnessSearch::add(int d, Polytope p) {
    if (p.dim != d) return false;
    auto fv = f_vector(p);
    std::pair<int, int> key{fv[0], fv[1]};
    auto& reps = table_[d][key];
    if (static_cast<int>(reps.size()) >= reps_) return false;
    CanonicalForm cf = canonical_form(p);
    for (const auto& q : reps)
        if (canonical_form(q) == cf) return false;
    reps.push_back(std::move(p));
    return true;
}

void WitnessSearch::expand(int d, const Polytope& p) {
    const int cap = bound_[d];
    FaceLattice l = build_lattice(p);
    const int f0 = p.num_vertices, f1 = edges_of(l);
    auto attempt = [&](std::pair<int, int> key, auto&& make) {
        if (key.first > cap || !wants(d, key) || !spend()) return;
        try {
            add(d, make());
        } catch (const std::exception&) {
            // degenerate construction; other routes remain
        }
    };

    if (int v = first_simple_vertex(p, l); v >= 0)
        attempt({f0 + d - 1, f1 + d * (d - 1) / 2}, [&] { return truncate(p, VertexSet{v}).polytope; });
    if (d >= 3)
        if (auto e = first_simple_edge(p, l))
            attempt({f0 + 2 * d - 4, f1 + (d - 1) * (d - 1) - 1}, [&] { return truncate(p, *e).polytope; });

    // A new point beyond exactly the facets through F joins every vertex of
    // their union and destroys F itself when F is an edge.
    std::map<int, VertexSet> by_delta;
    for (int r = 1; r < d; ++r)
        for (int i : l.faces_of_rank(r)) {
            VertexSet star;
            for (const auto& f : p.facets)
                if (l.faces[i].subset_of(f)) star |= f;
            int delta = star.count() - (r == 1 ? 1 : 0);
            by_delta.emplace(delta, l.faces[i]);
        }
    for (const auto& [delta, face] : by_delta)
        attempt({f0 + 1, f1 + delta}, [&] { return beyond(p, face); });
}

void WitnessSearch::extend(int d, int f0_max) {
    if (bound(d) >= f0_max) return;
    auto& t = table_[d];
    t.clear();
    bound_[d] = f0_max;
    if (d == 2) {
        for (int n = 3; n <= f0_max; ++n) add(2, polygon(n));
        return;
    }
    if (d == 3) {
        for (int v = 4; v <= f0_max; ++v)
            for (int e = (3 * v + 1) / 2; e <= 3 * v - 6; ++e)
                if (auto p = witness_d3(v, e)) add(3, std::move(*p));
        return;
    }
    extend(d - 1, f0_max - 1);

    for (auto& p : family_members(d, f0_max)) add(d, std::move(p));
    for (const auto& [key, reps] : table_[d - 1]) {
        for (const auto& q : reps) {
            if (key.first + 1 <= f0_max && wants(d, {key.first + 1, key.second + key.first})) add(d, pyramid(q));
            if (2 * key.first <= f0_max && wants(d, {2 * key.first, 2 * key.second + key.first}))
                add(d, product(q, simplex(1)));
        }
    }
    for (int f0 = d + 1; f0 < f0_max; ++f0) {
        std::vector<Polytope> layer;
        for (auto it = t.lower_bound({f0, 0}); it != t.end() && it->first.first == f0; ++it)
            layer.insert(layer.end(), it->second.begin(), it->second.end());
        for (const auto& p : layer) expand(d, p);
    }
}

const std::vector<Polytope>* WitnessSearch::representatives(int d, int f0, int f1) const {
    auto t = table_.find(d);
    if (t == table_.end()) return nullptr;
    auto it = t->second.find({f0, f1});
    return it == t->second.end() || it->second.empty() ? nullptr : &it->second;
}

const Polytope* WitnessSearch::lookup(int d, int f0, int f1) const {
    auto r = representatives(d, f0, f1);
    return r ? &r->front() : nullptr;
}

std::vector<std::pair<int, int>> WitnessSearch::keys(int d) const {
    std::vector<std::pair<int, int>> out;
    auto t = table_.find(d);
    if (t == table_.end()) return out;
    for (const auto& [key, reps] : t->second)
        if (!reps.empty()) out.push_back(key);
    return out;
}

namespace {

std::recursive_mutex search_mutex;

// Default extent of the forward search per dimension.
int forward_bound(int d) {
    switch (d) {
        case 4: return 12;
        case 5: return 13;
        case 6: return 10;
        default: return 0;
    }
}

enum Need { kAny, kSimpleVertex, kSimpleEdge };

bool satisfies(const Polytope& p, Need need) {
    if (need == kAny) return true;
    FaceLattice l = build_lattice(p);
    if (need == kSimpleVertex) return first_simple_vertex(p, l) >= 0;
    return first_simple_edge(p, l).has_value();
}

class Backward {
public:
    explicit Backward(WitnessSearch& s) : s_(s) {}

    std::optional<Polytope> find(int d, int v, int e, int depth, Need need) {
        if (d < 2 || v < d + 1 || e < 0) return std::nullopt;
        if (feasibility(d, v, e).status == Status::Infeasible) return std::nullopt;
        auto key = std::make_tuple(d, v, e, static_cast<int>(need));
        if (failed_.count(key)) return std::nullopt;
        if (auto p = attempt(d, v, e, depth, need)) return p;
        failed_.insert(key);
        return std::nullopt;
    }

private:
    std::optional<Polytope> attempt(int d, int v, int e, int depth, Need need) {
        if (d == 2) {
            if (e == v) return polygon(v);
            return std::nullopt;
        }
        if (d == 3) {
            auto p = witness_d3(v, e);
            if (p && satisfies(*p, need)) return p;
        }
        if (s_.bound(d) >= v)
            if (auto reps = s_.representatives(d, v, e))
                for (const auto& p : *reps)
                    if (satisfies(p, need)) return p;
        for (const auto& p : family_members(d, v)) {
            if (p.num_vertices != v) continue;
            auto fv = f_vector(p);
            if (fv[1] == e && satisfies(p, need)) return p;
        }
        if (depth == 0) return std::nullopt;

        if (auto src = find(d, v - (d - 1), e - d * (d - 1) / 2, depth - 1, kSimpleVertex)) {
            FaceLattice l = build_lattice(*src);
            Polytope p = truncate(*src, VertexSet{first_simple_vertex(*src, l)}).polytope;
            if (matches(p, v, e, need)) return p;
        }
        if (d >= 3)
            if (auto src = find(d, v - (2 * d - 4), e - ((d - 1) * (d - 1) - 1), depth - 1, kSimpleEdge)) {
                FaceLattice l = build_lattice(*src);
                Polytope p = truncate(*src, *first_simple_edge(*src, l)).polytope;
                if (matches(p, v, e, need)) return p;
            }
        if (auto src = find(d - 1, v - 1, e - (v - 1), depth - 1, kAny)) {
            Polytope p = pyramid(*src);
            if (matches(p, v, e, need)) return p;
        }
        return std::nullopt;
    }

    static bool matches(const Polytope& p, int v, int e, Need need) {
        auto fv = f_vector(p);
        return fv[0] == v && fv[1] == e && satisfies(p, need);
    }

    WitnessSearch& s_;
    std::set<std::tuple<int, int, int, int>> failed_;
};

}  // namespace

WitnessSearch& shared_witness_search() {
    static WitnessSearch s;
    return s;
}

FeasibilityVerdict witness(int d, int f0, int f1) {
    FeasibilityVerdict rule = feasibility(d, f0, f1);
    if (rule.status == Status::Infeasible) return rule;
    auto found = [](const Polytope& p) {
        return FeasibilityVerdict{Status::Feasible, FeasibilityRule::None, p.provenance, {}};
    };
    if (d == 2) return f1 == f0 ? found(polygon(f0)) : rule;
    if (d == 3) {
        if (auto p = witness_d3(f0, f1)) return found(*p);
        return rule;
    }

    std::lock_guard<std::recursive_mutex> lock(search_mutex);
    WitnessSearch& s = shared_witness_search();
    if (f0 <= forward_bound(d) && s.bound(d) < f0) s.extend(d, f0);
    if (const Polytope* p = s.lookup(d, f0, f1)) return found(*p);

    Backward back(s);
    try {
        if (auto p = back.find(d, f0, f1, 8, kAny)) return found(*p);
    } catch (const std::exception& ex) {
        rule.note = std::string("backward search failed: ") + ex.what();
        return rule;
    }
    rule.note = s.stats().budget_exhausted ? "search budget exhausted" : "no construction found within search bounds";
    return rule;
}

}  // namespace polyatlas
