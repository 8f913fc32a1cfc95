#include <doctest.h>

#include <map>

#include "polyatlas/analysis.hpp"
#include "polyatlas/canonical.hpp"
#include "polyatlas/expression.hpp"
#include "polyatlas/families.hpp"
#include "polyatlas/lattice.hpp"
#include "polyatlas/validate.hpp"
#include "census.hpp"

using namespace polyatlas;

namespace {

struct Counts {
    int f0, f1, facets, xi;
};

Counts counts(const Polytope& p) {
    auto fv = f_vector(p);
    return {fv[0], fv[1], static_cast<int>(p.facets.size()), 2 * fv[1] - p.dim * fv[0]};
}

}  // namespace

TEST_CASE("closed forms of the named families") {
    for (int d = 2; d <= 7; ++d) {
        CAPTURE(d);
        auto pr = counts(prism(d));
        CHECK(pr.f0 == 2 * d);
        CHECK(pr.f1 == d * d);
        CHECK(pr.facets == d + 2);
        auto ps = counts(pentasm(d));
        CHECK(ps.f0 == 2 * d + 1);
        CHECK(ps.f1 == d * d + d - 1);
        CHECK(ps.facets == d + 3);
        CHECK(ps.xi == d - 2);
        for (int k = 1; k <= d; ++k) {
            auto t = counts(triplex(k, d - k));
            CHECK(t.f0 == d + k);
            CHECK(t.xi == (k - 1) * (d - k));
            if (k >= 2) CHECK(t.facets == d + 2);
        }
        for (int m = 1; m < d; ++m) {
            int n = d - m;
            auto s = counts(simplex_product({m, n}));
            CHECK(s.f0 == (m + 1) * (n + 1));
            CHECK(2 * s.f1 == (m + n) * (m + 1) * (n + 1));
            CHECK(s.facets == m + n + 2);
            auto g = counts(gamma(m, n));
            CHECK(g.f0 == m * n + 2 * m + 2 * n);
            CHECK(g.facets == m + n + 3);
            CHECK(g.xi == 0);
        }
    }
    for (int d = 3; d <= 7; ++d) {
        CAPTURE(d);
        for (int k = 3; k <= d; ++k) {
            auto c = counts(capped_prism(k, d));
            CHECK(c.f0 == 2 * d + 1);
            CHECK(c.f1 == d * d + d);
            CHECK(c.facets == d + k + 1);
            CHECK(c.xi == d);
        }
        for (auto kind : {AbcsKind::A, AbcsKind::B}) {
            auto c = counts(family_abcs(kind, d));
            CHECK(c.f0 == 2 * d + 2);
            CHECK(c.xi == 2 * d - 6);
        }
        for (auto kind : {AbcsKind::C, AbcsKind::Sigma}) {
            auto c = counts(family_abcs(kind, d));
            CHECK(c.f0 == 3 * d - 2);
            CHECK(c.xi == d - 2);
            CHECK(c.facets == d + 3);
        }
        CHECK(counts(family_abcs(AbcsKind::A, d)).facets == d + 3);
        auto j = counts(family_j(d));
        CHECK(j.f0 == 3 * d - 1);
        CHECK(j.xi == 0);
    }
    auto ta = counts(antiwedge());
    CHECK(ta.f0 == 6);
    CHECK(ta.f1 == 10);
    CHECK(ta.facets == 6);
}

TEST_CASE("worked examples") {
    auto p = counts(pyramid(polygon(5), 3));
    CHECK(p.f0 == 8);
    CHECK(p.f1 == 23);
    CHECK(p.xi == 6);
    CHECK(counts(pyramid(simplex_product({2, 2}))).xi == 4);
    CHECK(is_isomorphic(pyramid(simplex(3)), simplex(4)));
    auto m32 = counts(triplex(3, 2));
    CHECK(m32.f0 == 8);
    CHECK(m32.f1 == 22);
    CHECK(m32.xi == 4);
    CHECK(is_isomorphic(triplex(4, 0), prism(4)));
    CHECK(is_isomorphic(triplex(1, 4), simplex(5)));
    CHECK(counts(pentasm(4)).f1 == 19);
    CHECK(counts(pentasm(3)).f1 == 11);
    CHECK(counts(gamma(2, 2)).f1 == 24);
    auto j5 = counts(gamma(4, 1));
    CHECK(j5.f0 == 14);
    CHECK(j5.f1 == 35);
    CHECK(is_isomorphic(gamma(1, 1), polygon(5)));
    auto cy = counts(cyclic(7, 5));
    CHECK(cy.xi == 7);
    auto fs = counts(free_sum(simplex(1), simplex(4)));
    CHECK(fs.f0 == 7);
    CHECK(fs.f1 == 20);
    CHECK(fs.xi == 5);
    CHECK(f_vector(product(polygon(5), simplex(1))) == std::vector<int>{10, 15, 7});
    CHECK(counts(family_abcs(AbcsKind::C, 5)).f1 == 34);
    for (auto kind : {AbcsKind::A, AbcsKind::B, AbcsKind::C, AbcsKind::Sigma})
        CHECK(f_vector(family_abcs(kind, 4)) == std::vector<int>{10, 21, 18, 7});
}

TEST_CASE("parameter checks") {
    CHECK_THROWS(capped_prism(0, 4));
    CHECK_THROWS(capped_prism(5, 4));
    CHECK_THROWS(family_abcs(AbcsKind::A, 2));
    CHECK_THROWS(gamma(0, 3));
    CHECK_THROWS(simplex_product({}));
    CHECK_THROWS(cyclic(5, 5));
    CHECK_THROWS(minkowski_sum(dual(prism(3)), prism(3)));
}

TEST_CASE("facet censuses") {
    for (const auto& c : census::cases()) {
        CAPTURE(c.label);
        CHECK(census::matches(c.polytope, c.expected));
    }
}

TEST_CASE("capped prisms share a graph but not a face lattice") {
    for (int d = 4; d <= 6; ++d) {
        std::set<std::string> graphs, lattices;
        for (int k = 3; k <= d; ++k) {
            Polytope p = capped_prism(k, d);
            FaceLattice l = build_lattice(p);
            // the vertex-edge incidence structure determines the graph
            std::vector<std::vector<int>> edges;
            for (auto [a, b] : skeleton(l)) edges.push_back({a, b});
            Polytope g;
            g.dim = 2;
            g.num_vertices = p.num_vertices;
            for (const auto& e : edges) g.facets.push_back(VertexSet(e.begin(), e.end()));
            std::sort(g.facets.begin(), g.facets.end());
            graphs.insert(canonical_form(g).code);
            lattices.insert(canonical_form(p).code);
        }
        CHECK(graphs.size() == 1);
        CHECK(lattices.size() == static_cast<size_t>(d - 2));
    }
}

TEST_CASE("geometric and combinatorial routes agree") {
    for (int d = 3; d <= 6; ++d) {
        CHECK(is_isomorphic(pentasm(d), pentasm_by_truncation(d)));
        CHECK(is_isomorphic(family_abcs(AbcsKind::Sigma, d), sigma_as_minkowski_sum(d)));
    }
    for (int d = 3; d <= 6; ++d)
        for (int k = 3; k <= d; ++k) CHECK(is_isomorphic(capped_prism(k, d), capped_prism_combinatorial(k, d)));
    Polytope pt;
    pt.dim = 0;
    pt.num_vertices = 1;
    pt.realization = std::vector<Point>{Point(4, Rational(1, 3))};
    CHECK(is_isomorphic(minkowski_sum(pentasm(4), pt), pentasm(4)));
    CHECK(is_isomorphic(family_abcs(AbcsKind::A, 3), simplex_product({1, 1, 1})));
    CHECK(is_isomorphic(family_abcs(AbcsKind::B, 3), family_j(3)));
    CHECK(is_isomorphic(family_abcs(AbcsKind::C, 3), family_abcs(AbcsKind::Sigma, 3)));
    for (int d = 3; d <= 5; ++d) {
        CHECK(is_isomorphic(capped_prism(1, d), prism(d)));
        CHECK(is_isomorphic(capped_prism(2, d), pentasm(d)));
        CHECK(is_isomorphic(family_j(d), gamma(d - 1, 1)));
    }
}

TEST_CASE("truncation and stacking deltas") {
    for (int d = 3; d <= 6; ++d) {
        Polytope base = prism(d);
        auto before = counts(base);
        auto after = counts(truncate(base, VertexSet{0}).polytope);
        CHECK(after.f0 - before.f0 == d - 1);
        CHECK(after.f1 - before.f1 == d * (d - 1) / 2);

        Polytope cy = cyclic(d + 3, d);
        auto c0 = counts(cy);
        auto c1 = counts(stack(cy, 0));
        CHECK(c1.f0 - c0.f0 == 1);
        CHECK(c1.f1 - c0.f1 == d);
        CHECK(c1.xi - c0.xi == d);
    }
    // A simple edge cut adds 2d-4 vertices; the new facet is a prism with
    // (d-1)^2 edges, and the cut edge disappears.
    for (int d = 3; d <= 5; ++d) {
        Polytope cp = capped_prism(d, d);
        FaceLattice l = build_lattice(cp);
        VertexSet edge;
        for (int e : l.faces_of_rank(1)) {
            auto ends = l.faces[e].indices();
            if (l.degree[ends[0]] == d && l.degree[ends[1]] == d) {
                edge = l.faces[e];
                break;
            }
        }
        REQUIRE_FALSE(edge.empty());
        auto t = truncate(cp, edge);
        auto c0 = counts(cp), c1 = counts(t.polytope);
        CHECK(c1.f0 - c0.f0 == 2 * d - 4);
        CHECK(c1.f1 - c0.f1 == (d - 1) * (d - 1) - 1);
        CHECK(is_isomorphic(face_as_polytope(t.polytope, t.polytope.facets[t.underfacet]), prism(d - 1)));
        if (d == 5) {
            CHECK(c1.f0 == 17);
            CHECK(c1.f1 == 45);
        }
    }
    Polytope j5 = truncate(prism(5), VertexSet{3}).polytope;
    CHECK(is_isomorphic(j5, family_j(5)));
}

TEST_CASE("provenance expressions replay") {
    std::vector<Polytope> ps{pentasm(4), capped_prism(3, 5), family_abcs(AbcsKind::B, 4), gamma(2, 3),
                             pyramid(polygon(5), 3), bipyramid(4), cyclic(8, 4), antiwedge(),
                             free_sum(polygon(4), simplex(2)), product(pentasm(3), simplex(1)),
                             truncate(triplex(2, 3), VertexSet{0}).polytope, stack(prism(4), 0)};
    for (const auto& p : ps) {
        CAPTURE(p.provenance);
        REQUIRE_FALSE(p.provenance.empty());
        Polytope q = evaluate_expression(p.provenance);
        CHECK(is_isomorphic(p, q));
        CHECK(validate(q).ok());
    }
    CHECK(is_isomorphic(evaluate_expression("pyr^3(pentagon)"), pyramid(polygon(5), 3)));
    CHECK_THROWS(evaluate_expression("nosuch(3)"));
    CHECK_THROWS(evaluate_expression("pentasm(4"));
}
