#include "polyatlas/corpus.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "polyatlas/families.hpp"
#include "polyatlas/lattice.hpp"
#include "polyatlas/witness.hpp"

namespace polyatlas {

namespace {

std::recursive_mutex family_mutex;

// Partitions of d into at least two positive parts, nonincreasing.
void partitions(int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(rest - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Polytope> build_members(int d, int maxv) {
    std::vector<Polytope> out;
    std::set<std::string> seen;
    auto put = [&](const std::function<Polytope()>& make) {
        Polytope p;
        try {
            p = make();
        } catch (const std::exception&) {
            return;
        }
        if (p.dim != d || p.num_vertices > maxv) return;
        if (seen.insert(canonical_form(p).code).second) out.push_back(std::move(p));
    };

    if (d == 1) {
        put([] { return simplex(1); });
        return out;
    }
    if (d == 2) {
        for (int n = 3; n <= maxv; ++n) put([n] { return polygon(n); });
        return out;
    }

    put([d] { return simplex(d); });
    if (2 * d <= maxv) put([d] { return prism(d); });
    if (d < 7 && (1 << d) <= maxv) put([d] { return cube(d); });
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(d, d, cur, parts);
    for (const auto& dims : parts) {
        long n = 1;
        for (int m : dims) n *= m + 1;
        if (n <= maxv) put([dims] { return simplex_product(dims); });
    }
    for (int k = 2; k < d; ++k)
        if (d + k <= maxv) put([k, d] { return triplex(k, d - k); });
    if (2 * d + 1 <= maxv) {
        put([d] { return pentasm(d); });
        for (int k = 1; k <= d; ++k) put([k, d] { return capped_prism(k, d); });
    }
    if (3 * d - 2 <= maxv) {
        put([d] { return family_abcs(AbcsKind::Sigma, d); });
        put([d] { return family_abcs(AbcsKind::C, d); });
        put([d] { return sigma_as_minkowski_sum(d); });
    }
    if (2 * d + 2 <= maxv) {
        put([d] { return family_abcs(AbcsKind::A, d); });
        put([d] { return family_abcs(AbcsKind::B, d); });
    }
    for (int n = 1; 2 * n <= d; ++n) {
        int m = d - n;
        if (m * n + 2 * m + 2 * n <= maxv) put([m, n] { return gamma(m, n); });
    }
    put([d] { return family_j(d); });
    if (d == 3) put([] { return antiwedge(); });
    for (int n = d + 2; n <= std::min(maxv, d + 8); ++n) put([n, d] { return cyclic(n, d); });
    put([d] { return bipyramid(d); });
    for (int a = 2; 2 * a <= d; ++a) put([a, d] { return free_sum(simplex(a), simplex(d - a)); });
    for (int n = 4; n <= 5; ++n) put([n, d] { return free_sum(polygon(n), simplex(d - 2)); });

    for (const auto& q : family_members(d - 1, maxv - 1)) put([&q] { return pyramid(q); });
    for (const auto& q : family_members(d - 1, maxv / 2)) put([&q] { return product(q, simplex(1)); });
    return out;
}

// One vertex per degree, one simple edge, one facet per size.
std::vector<Polytope> children(const Polytope& p) {
    std::vector<Polytope> out;
    FaceLattice l = build_lattice(p);
    auto run = [&](const std::function<Polytope()>& make) {
        try {
            out.push_back(make());
        } catch (const std::exception&) {
        }
    };
    std::set<int> degs;
    for (int v = 0; v < p.num_vertices; ++v)
        if (degs.insert(l.degree[v]).second) run([&, v] { return truncate(p, VertexSet{v}).polytope; });
    for (int e : l.faces_of_rank(1)) {
        auto ends = l.faces[e].indices();
        if (l.degree[ends[0]] == p.dim && l.degree[ends[1]] == p.dim && p.dim >= 3) {
            run([&, e] { return truncate(p, l.faces[e]).polytope; });
            break;
        }
    }
    std::set<int> sizes;
    for (int f = 0; f < static_cast<int>(p.facets.size()); ++f)
        if (sizes.insert(p.facets[f].count()).second) run([&, f] { return stack(p, f); });
    return out;
}

}  // namespace

std::vector<Polytope> family_members(int d, int max_vertices) {
    std::lock_guard<std::recursive_mutex> lock(family_mutex);
    static std::map<std::pair<int, int>, std::vector<Polytope>> cache;
    if (d < 1 || max_vertices < d + 1) return {};
    auto key = std::make_pair(d, max_vertices);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto members = build_members(d, max_vertices);
    cache.emplace(key, members);
    return members;
}

Catalog generate_corpus(int d, int depth, int max_vertices) {
    Catalog cat;
    for (const auto& p : family_members(d, max_vertices)) cat.insert(p);
    for (int round = 0; round < depth; ++round) {
        std::vector<Polytope> parents;
        for (const auto& e : cat.entries())
            if (e.polytope.realized() && e.polytope.num_vertices <= max_vertices) parents.push_back(e.polytope);
        for (const auto& p : parents)
            for (const auto& c : children(p)) cat.insert(c);
    }
    return cat;
}

std::vector<int> spectrum(int d, int f0_max) {
    std::set<int> xs;
    Catalog corpus = generate_corpus(d, 1);
    for (const auto& e : corpus.entries())
        if (e.f_vector[0] <= f0_max) xs.insert(e.excess);
    if (d == 3) {
        for (int v = 4; v <= f0_max; ++v)
            for (int e = (3 * v + 1) / 2; e <= 3 * v - 6; ++e)
                if (witness_d3(v, e)) xs.insert(2 * e - 3 * v);
    } else if (d == 4 || d == 5) {
        WitnessSearch& s = shared_witness_search();
        s.extend(d, f0_max);
        for (auto [f0, f1] : s.keys(d))
            if (f0 <= f0_max) xs.insert(2 * f1 - d * f0);
    }
    return {xs.begin(), xs.end()};
}

}  // namespace polyatlas
