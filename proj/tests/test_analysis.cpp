#include <doctest.h>

#include "polyatlas/analysis.hpp"
#include "polyatlas/canonical.hpp"
#include "polyatlas/catalog.hpp"
#include "polyatlas/corpus.hpp"
#include "polyatlas/families.hpp"
#include "polyatlas/lattice.hpp"

using namespace polyatlas;

namespace {

const Catalog& corpus(int d) {
    static std::map<int, Catalog> cache;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, generate_corpus(d, 1, d <= 4 ? 24 : 16)).first;
    return it->second;
}

// Number of edges of P inside facet F at vertex v.
int degree_in(const FaceLattice& l, const VertexSet& facet, int v) {
    int n = 0;
    for (int e : l.faces_of_rank(1))
        if (l.faces[e].test(v) && l.faces[e].subset_of(facet)) ++n;
    return n;
}

StructureCase tag_of(const Polytope& p) { return small_excess_structure(p).tag; }

}  // namespace

TEST_CASE("excess reports") {
    CHECK(excess(simplex_product({2, 2})).total == 0);
    auto p5 = excess(pentasm(5));
    CHECK(p5.total == 3);
    CHECK(p5.nonsimple.size() == 3);
    for (int v : p5.nonsimple) CHECK(p5.per_vertex[v] == 1);
    auto s5 = excess(family_abcs(AbcsKind::Sigma, 5));
    CHECK(s5.total == 3);
    REQUIRE(s5.nonsimple.size() == 1);
    CHECK(s5.per_vertex[s5.nonsimple[0]] == 3);
    for (int x : s5.per_vertex) CHECK(x >= 0);
}

TEST_CASE("facet pair profile") {
    Polytope pd = pyramid(simplex_product({2, 2}));
    CHECK(is_semisimple(pd));
    CHECK_FALSE(excess(pd).simple());

    for (int d = 4; d <= 5; ++d) {
        auto prof = facet_profile(pentasm(d));
        bool has = false;
        for (const auto& pr : prof.pairs) {
            CHECK(pr.dim <= d - 2);
            has = has || pr.dim == d - 3;
        }
        CHECK(has);
        CHECK_FALSE(prof.semisimple);
    }
    CHECK(is_super_kirkman(simplex(4)));
    CHECK_FALSE(is_super_kirkman(prism(4)));
}

TEST_CASE("Shephard and Kirkman facets") {
    for (int d = 3; d <= 5; ++d) {
        Polytope p = prism(d);
        CHECK(shephard_facets(p).size() == p.facets.size());
    }
    CHECK(shephard_facets(antiwedge()).empty());
    Polytope pd = pyramid(simplex_product({2, 2}));
    CHECK(is_super_kirkman(pd));
    CHECK(shephard_facets(pd).size() == 1);
    CHECK(kirkman_facets(pd).size() == pd.facets.size());
    auto w = weak_ks_facets(prism(4));
    CHECK(w.size() == prism(4).facets.size());
}

TEST_CASE("pyramid structure") {
    for (int k = 2; k <= 4; ++k)
        for (int m = 0; m <= 2; ++m) {
            auto ps = pyramid_structure(triplex(k, m));
            CHECK(ps.r == m);
            CHECK(ps.apexes.size() == static_cast<size_t>(m));
            if (m > 0) CHECK(is_isomorphic(face_as_polytope(triplex(k, m), ps.base), prism(k)));
        }
    CHECK(pyramid_structure(pentasm(5)).r == 0);
    CHECK(pyramid_structure(pyramid(polygon(5), 3)).r == 3);
    CHECK(pyramid_structure(simplex(4)).r == 4);
}

TEST_CASE("small excess structure: excess d-2") {
    for (int d = 4; d <= 5; ++d) {
        CAPTURE(d);
        for (const Polytope& p : {family_abcs(AbcsKind::Sigma, d), triplex(d - 1, 1)}) {
            auto v = small_excess_structure(p);
            CHECK(v.tag == StructureCase::ExcessDm2Vertex);
            CHECK(v.face.count() == 1);
            CHECK(v.conflicts.empty());
        }
        for (const Polytope& p : {pentasm(d), family_abcs(AbcsKind::C, d), triplex(2, d - 2)}) {
            auto v = small_excess_structure(p);
            CHECK(v.tag == StructureCase::ExcessDm2Simplex);
            CHECK(v.face.count() == d - 2);
            CHECK(v.conflicts.empty());
        }
    }
    CHECK(tag_of(family_abcs(AbcsKind::B, 4)) == StructureCase::ExcessDm2Vertex);
    CHECK(tag_of(family_abcs(AbcsKind::A, 4)) == StructureCase::ExcessDm2Simplex);

    auto v = small_excess_structure(pentasm(5));
    REQUIRE(v.facets.size() == 2);
    Polytope p = pentasm(5);
    CHECK((p.facets[v.facets[0]] & p.facets[v.facets[1]]) == v.face);
}

TEST_CASE("small excess structure: excess d-1") {
    auto v = small_excess_structure(pyramid(simplex_product({2, 2})));
    CHECK(v.tag == StructureCase::ExcessDm1Vertex);
    CHECK(v.figure_type == "Delta_{2,2}");
    CHECK_FALSE(v.contradiction());

    for (const Polytope& p : {triplex(3, 2), family_abcs(AbcsKind::B, 5)}) {
        auto e = small_excess_structure(p);
        CHECK(e.tag == StructureCase::ExcessDm1Edge);
        CHECK(e.face.count() == 2);
        CHECK(e.figure_type == "Delta_{1,1,2}");
        REQUIRE(e.figure);
        CHECK(is_isomorphic(*e.figure, simplex_product({1, 1, 2})));
        CHECK_FALSE(e.contradiction());
    }
    auto q = small_excess_structure(family_abcs(AbcsKind::A, 5));
    CHECK(q.tag == StructureCase::ExcessDm1Quad);
    CHECK(q.face.count() == 4);
    CHECK(q.figure_type == "tesseract");
    CHECK_FALSE(q.contradiction());

    CHECK(tag_of(antiwedge()) == StructureCase::Dim3Antiwedge);
    CHECK(tag_of(pyramid(polygon(5))) == StructureCase::Dim3PentagonalPyramid);
}

TEST_CASE("small excess structure rejects other excess values") {
    CHECK_THROWS_AS(small_excess_structure(prism(4)), std::invalid_argument);
    CHECK_THROWS_AS(small_excess_structure(cyclic(7, 5)), std::invalid_argument);
}

TEST_CASE("analysis report") {
    Json j = analysis_report(pentasm(4));
    CHECK(j.at("excess") == 2);
    CHECK(j.contains("structure"));
    CHECK(j.at("f_vector") == Json::array({9, 19, 17, 7}));
}

TEST_CASE("corpus invariants") {
    for (int d = 3; d <= 5; ++d) {
        CAPTURE(d);
        const Catalog& cat = corpus(d);
        CHECK(cat.size() >= 100);
        for (const auto& e : cat.entries()) {
            const Polytope& p = e.polytope;
            FaceLattice l = build_lattice(p);
            auto ex = excess(p, l);
            CAPTURE(e.provenance);

            // excess theorem and the d-1 restriction
            CHECK((ex.total == 0 || ex.total >= d - 2));
            if (ex.total == d - 1) CHECK((d == 3 || d == 5));

            // facets have strictly smaller excess
            if (!ex.simple())
                for (int f = 0; f < static_cast<int>(p.facets.size()); ++f) CHECK(facet_excess(p, l, f) < ex.total);

            // two facets meeting in a j-face force excess at least d-2-j there
            auto prof = facet_profile(p, l);
            for (const auto& pr : prof.pairs) {
                if (pr.dim < 0) continue;
                for (int v : (p.facets[pr.f] & p.facets[pr.g]).indices()) CHECK(ex.per_vertex[v] >= d - 2 - pr.dim);
                int larger = std::max(facet_excess(p, l, pr.f), facet_excess(p, l, pr.g));
                CHECK(ex.total >= larger + (d - 2 - pr.dim) * (pr.dim + 1));
            }

            if (prof.semisimple) {
                if (d <= 4) CHECK(ex.simple());
                for (int v : ex.nonsimple)
                    for (const auto& f : p.facets)
                        if (f.test(v)) CHECK(degree_in(l, f, v) > d - 1);
            }

            // small simple polytopes
            if (ex.simple()) {
                if (p.num_vertices < 2 * d) CHECK(is_isomorphic(p, simplex(d)));
                if (p.num_vertices >= 2 * d && p.num_vertices <= 3 * d - 4) CHECK(is_isomorphic(p, prism(d)));
            }

            if (ex.total == d - 2 || ex.total == d - 1) CHECK_FALSE(small_excess_structure(p, l).contradiction());
        }
    }
}
