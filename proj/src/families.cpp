#include "polyatlas/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "polyatlas/geometry.hpp"
#include "polyatlas/lattice.hpp"

namespace polyatlas {

namespace {

std::string args(std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Polytope named(Polytope p, std::string name, std::string prov) {
    p.name = std::move(name);
    p.provenance = std::move(prov);
    return p;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Point unit(int dim, int i, long scale_by = 1) {
    Point p(dim, Rational(0));
    p[i] = scale_by;
    return p;
}

int first_simple_vertex(const Polytope& p, const FaceLattice& l) {
    for (int v = 0; v < p.num_vertices; ++v)
        if (l.degree[v] == p.dim) return v;
    return -1;
}

}  // namespace

std::string face_ref(const VertexSet& face) {
    auto ix = face.indices();
    if (ix.size() == 1) return "v" + std::to_string(ix[0]);
    std::string s = "f{";
    for (size_t i = 0; i < ix.size(); ++i) s += (i ? "," : "") + std::to_string(ix[i]);
    return s + "}";
}

Polytope canonical_order(const Polytope& p) {
    if (!p.realization) return p;
    std::vector<int> order(p.num_vertices);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(p.point(a), p.point(b)); });
    std::vector<int> perm(p.num_vertices);
    for (int i = 0; i < p.num_vertices; ++i) perm[order[i]] = i;
    return relabel(p, perm);
}

Polytope simplex(int d) {
    require(d >= 1, "simplex: d must be at least 1");
    std::vector<Point> pts{Point(d, Rational(0))};
    for (int i = 0; i < d; ++i) pts.push_back(unit(d, i));
    std::vector<std::vector<int>> facets;
    for (int drop = 0; drop <= d; ++drop) {
        std::vector<int> f;
        for (int v = 0; v <= d; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(f);
    }
    Polytope p = polytope_from_facets(d, d + 1, facets);
    p.realization = pts;
    p = canonical_order(p);
    return named(p, "simplex_" + std::to_string(d), "simplex(" + std::to_string(d) + ")");
}

Polytope product(const Polytope& p, const Polytope& q) {
    require(p.realized() == q.realized(), "product: operands must both be realized or both combinatorial");
    const int np = p.num_vertices, nq = q.num_vertices;
    require(np * nq <= VertexSet::kCapacity, "product: too many vertices");
    std::vector<std::vector<int>> facets;
    for (const auto& f : p.facets) {
        std::vector<int> g;
        for (int i : f.indices())
            for (int j = 0; j < nq; ++j) g.push_back(i * nq + j);
        facets.push_back(g);
    }
    for (const auto& f : q.facets) {
        std::vector<int> g;
        for (int i = 0; i < np; ++i)
            for (int j : f.indices()) g.push_back(i * nq + j);
        facets.push_back(g);
    }
    Polytope r = polytope_from_facets(p.dim + q.dim, np * nq, facets);
    if (p.realized()) {
        std::vector<Point> pts;
        for (int i = 0; i < np; ++i)
            for (int j = 0; j < nq; ++j) {
                Point x = p.point(i);
                x.insert(x.end(), q.point(j).begin(), q.point(j).end());
                pts.push_back(std::move(x));
            }
        r.realization = std::move(pts);
        r = canonical_order(r);
    }
    return named(r, "", "product(" + p.provenance + "," + q.provenance + ")");
}

Polytope simplex_product(const std::vector<int>& dims) {
    require(!dims.empty(), "simplex_product: empty dimension list");
    for (int k : dims) require(k >= 1, "simplex_product: each dimension must be at least 1");
    Polytope r = simplex(dims[0]);
    for (size_t i = 1; i < dims.size(); ++i) r = product(r, simplex(dims[i]));
    std::string a;
    for (int k : dims) a += (a.empty() ? "" : ",") + std::to_string(k);
    return named(r, "Delta_{" + a + "}", "delta(" + a + ")");
}

Polytope prism(int d) {
    require(d >= 2, "prism: d must be at least 2");
    Polytope p = simplex_product({1, d - 1});
    return named(p, "prism_" + std::to_string(d), "prism(" + std::to_string(d) + ")");
}

Polytope cube(int d) {
    require(d >= 1, "cube: d must be at least 1");
    Polytope p = simplex_product(std::vector<int>(d, 1));
    return named(p, "cube_" + std::to_string(d), "cube(" + std::to_string(d) + ")");
}

Polytope cyclic(int n, int d) {
    require(d >= 2 && n >= d + 1, "cyclic: need d >= 2 and n >= d+1");
    std::vector<Point> pts;
    for (int t = 1; t <= n; ++t) {
        Point x;
        Rational pw = 1;
        for (int k = 0; k < d; ++k) {
            pw *= t;
            x.push_back(pw);
        }
        pts.push_back(std::move(x));
    }
    return polytope_from_points(pts, "C(" + args({n, d}) + ")", "cyclic(" + args({n, d}) + ")");
}

Polytope polygon(int n) {
    require(n >= 3, "polygon: n must be at least 3");
    Polytope p = cyclic(n, 2);
    return named(p, std::to_string(n) + "-gon", n == 5 ? "pentagon" : "polygon(" + std::to_string(n) + ")");
}

Polytope pyramid(const Polytope& p, int r) {
    require(r >= 1, "pyramid: r must be at least 1");
    Polytope cur = p;
    for (int step = 0; step < r; ++step) {
        const int n = cur.num_vertices;
        require(n + 1 <= VertexSet::kCapacity, "pyramid: too many vertices");
        Polytope next;
        next.dim = cur.dim + 1;
        next.num_vertices = n + 1;
        next.facets.push_back(VertexSet::range(n));
        for (const auto& f : cur.facets) {
            VertexSet g = f;
            g.set(n);
            next.facets.push_back(g);
        }
        std::sort(next.facets.begin(), next.facets.end());
        if (cur.realized()) {
            std::vector<Point> pts;
            for (const auto& x : *cur.realization) {
                Point y = x;
                y.push_back(0);
                pts.push_back(std::move(y));
            }
            Point apex = centroid(*cur.realization);
            apex.push_back(1);
            pts.push_back(std::move(apex));
            next.realization = std::move(pts);
        }
        cur = std::move(next);
    }
    cur = canonical_order(cur);
    std::string prov = (r == 1 ? "pyr(" : "pyr^" + std::to_string(r) + "(") + p.provenance + ")";
    return named(cur, "", prov);
}

Polytope triplex(int k, int m) {
    require(k >= 1 && m >= 0 && k + m >= 2, "triplex: need k >= 1, m >= 0, k+m >= 2");
    Polytope base = k == 1 ? simplex(1) : prism(k);
    Polytope p = m == 0 ? base : pyramid(base, m);
    return named(p, "M_{" + args({k, m}) + "}", "triplex(" + args({k, m}) + ")");
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    require(p.realized() && q.realized(), "minkowski_sum: both operands need a realization");
    require(p.point(0).size() == q.point(0).size(), "minkowski_sum: ambient dimensions differ");
    std::vector<Point> pts;
    for (const auto& a : *p.realization)
        for (const auto& b : *q.realization) pts.push_back(add(a, b));
    return polytope_from_points(pts, "", "minkowski(" + p.provenance + "," + q.provenance + ")");
}

Polytope pentasm(int d) {
    require(d >= 2, "pentasm: d must be at least 2");
    // Segment parallel to the triangle {0, e1, e2} but to none of its edges.
    Point s(d, Rational(0));
    s[0] = Rational(1, 3);
    s[1] = Rational(1, 3);
    std::vector<Point> seg{Point(d, Rational(0)), s};
    Polytope segment = polytope_from_points(seg);
    segment.provenance = "segment";
    Polytope p = minkowski_sum(simplex(d), segment);
    return named(p, "pentasm_" + std::to_string(d), "pentasm(" + std::to_string(d) + ")");
}

Truncation truncate(const Polytope& p, const VertexSet& face) {
    require(p.realized(), "truncate: polytope has no realization");
    auto [h, alpha] = supporting_halfspace(p, face);
    std::optional<Rational> beta;
    for (int v = 0; v < p.num_vertices; ++v) {
        if (face.test(v)) continue;
        Rational val = dot(h.normal, p.point(v));
        if (!beta || val > *beta) beta = val;
    }
    HalfSpace keep{h.normal, (alpha + *beta) / 2};
    CutResult c = cut(p, keep);
    c.polytope.provenance = "truncate(" + p.provenance + "," + face_ref(face) + ")";
    return {std::move(c.polytope), c.underfacet};
}

Polytope stack(const Polytope& p, int facet) {
    require(p.realized(), "stack: polytope has no realization");
    require(facet >= 0 && facet < static_cast<int>(p.facets.size()), "stack: facet index out of range");
    std::vector<Point> pts = *p.realization;
    pts.push_back(beyond_point(p, facet));
    return polytope_from_points(pts, "", "stack(" + p.provenance + "," + std::to_string(facet) + ")");
}

Polytope beyond(const Polytope& p, const VertexSet& face) {
    require(p.realized(), "beyond: polytope has no realization");
    std::vector<Point> pts = *p.realization;
    pts.push_back(beyond_face_point(p, face));
    return polytope_from_points(pts, "", "beyond(" + p.provenance + "," + face_ref(face) + ")");
}

Polytope pentasm_by_truncation(int d) {
    require(d >= 3, "pentasm_by_truncation: d must be at least 3");
    Polytope m = triplex(2, d - 2);
    int v = first_simple_vertex(m, build_lattice(m));
    return truncate(m, VertexSet{v}).polytope;
}

Polytope capped_prism(int k, int d) {
    require(d >= 2 && k >= 1 && k <= d, "capped_prism: need 1 <= k <= d");
    // Prism over the simplex a_1..a_d, apex above the centroid of a_1..a_k.
    std::vector<Point> a{Point(d - 1, Rational(0))};
    for (int i = 0; i < d - 1; ++i) a.push_back(unit(d - 1, i));
    std::vector<Point> pts;
    for (int h = 0; h <= 1; ++h)
        for (const auto& x : a) {
            Point y = x;
            y.push_back(h);
            pts.push_back(std::move(y));
        }
    Point apex = centroid(std::vector<Point>(a.begin(), a.begin() + k));
    apex.push_back(2);
    pts.push_back(std::move(apex));
    return polytope_from_points(pts, "CP_{" + args({k, d}) + "}", "capped_prism(" + args({k, d}) + ")");
}

Polytope capped_prism_combinatorial(int k, int d) {
    require(d >= 2 && k >= 1 && k <= d, "capped_prism_combinatorial: need 1 <= k <= d");
    // u_i = i-1, v_0 = d, v_i = d+i (i = 1..d)
    auto u = [](int i) { return i - 1; };
    auto v = [d](int i) { return d + i; };
    std::vector<std::vector<int>> facets;
    for (int j = 1; j <= d; ++j) {
        std::vector<int> f;
        for (int i = 1; i <= d; ++i)
            if (i != j) {
                f.push_back(u(i));
                f.push_back(v(i));
            }
        if (j > k) f.push_back(v(0));
        facets.push_back(f);
    }
    for (int j = 1; j <= k; ++j) {
        std::vector<int> f{v(0)};
        for (int i = 1; i <= d; ++i)
            if (i != j) f.push_back(v(i));
        facets.push_back(f);
    }
    std::vector<int> s;
    for (int i = 1; i <= d; ++i) s.push_back(u(i));
    facets.push_back(s);
    return polytope_from_facets(d, 2 * d + 1, facets, "CP_{" + args({k, d}) + "}",
                                "capped_prism_comb(" + args({k, d}) + ")");
}

Polytope family_abcs(AbcsKind kind, int d) {
    require(d >= 3, "family_abcs: d must be at least 3");
    const std::string ds = std::to_string(d);
    switch (kind) {
        case AbcsKind::A: {
            Polytope seg = simplex(1);
            Polytope p = product(triplex(2, d - 3), seg);
            return named(p, "A_" + ds, "A(" + ds + ")");
        }
        case AbcsKind::B: {
            Polytope m = triplex(3, d - 3);
            int v = first_simple_vertex(m, build_lattice(m));
            return named(truncate(m, VertexSet{v}).polytope, "B_" + ds, "B(" + ds + ")");
        }
        case AbcsKind::C: {
            Polytope m = triplex(2, d - 2);
            FaceLattice l = build_lattice(m);
            for (auto [a, b] : skeleton(l))
                if (l.degree[a] == d && l.degree[b] == d)
                    return named(truncate(m, VertexSet{a, b}).polytope, "C_" + ds, "C(" + ds + ")");
            throw std::logic_error("family C: no simple edge in triplex");
        }
        case AbcsKind::Sigma: {
            std::vector<Point> pts{Point(d, Rational(0)), unit(d, 0), unit(d, 1), add(unit(d, 0), unit(d, 1))};
            for (int k = 2; k < d; ++k) {
                pts.push_back(add(unit(d, 0), unit(d, k)));
                pts.push_back(add(unit(d, 1), unit(d, k)));
                pts.push_back(add(add(unit(d, 0), unit(d, 1)), unit(d, k, 2)));
            }
            return polytope_from_points(pts, "Sigma_" + ds, "Sigma(" + ds + ")");
        }
    }
    throw std::logic_error("family_abcs: unknown kind");
}

Polytope sigma_as_minkowski_sum(int d) {
    require(d >= 3, "sigma_as_minkowski_sum: d must be at least 3");
    std::vector<Point> a{Point(d, Rational(0)), unit(d, 0)}, b{Point(d, Rational(0)), unit(d, 1)};
    for (int k = 2; k < d; ++k) {
        a.push_back(add(unit(d, 0), unit(d, k)));
        b.push_back(add(unit(d, 1), unit(d, k)));
    }
    Polytope p = minkowski_sum(polytope_from_points(a), polytope_from_points(b));
    return named(p, "Sigma_" + std::to_string(d), "sigma_mink(" + std::to_string(d) + ")");
}

Polytope gamma(int m, int n) {
    require(m >= 1 && n >= 1, "gamma: need m, n >= 1");
    Polytope p = truncate(simplex_product({m, n}), VertexSet{0}).polytope;
    return named(p, "Gamma_{" + args({m, n}) + "}", "gamma(" + args({m, n}) + ")");
}

Polytope family_j(int d) {
    require(d >= 2, "J: d must be at least 2");
    return named(gamma(d - 1, 1), "J_" + std::to_string(d), "J(" + std::to_string(d) + ")");
}

Polytope bipyramid(int d) {
    require(d >= 2, "bipyramid: d must be at least 2");
    Polytope p = free_sum(simplex(1), simplex(d - 1));
    return named(p, "bipyramid_" + std::to_string(d), "bipyramid(" + std::to_string(d) + ")");
}

Polytope free_sum(const Polytope& p, const Polytope& q) {
    require(p.realized() && q.realized(), "free_sum: both operands need a realization");
    const Point cp = centroid(*p.realization), cq = centroid(*q.realization);
    const size_t dp = cp.size(), dq = cq.size();
    std::vector<Point> pts;
    for (const auto& x : *p.realization) {
        Point y = sub(x, cp);
        y.resize(dp + dq, Rational(0));
        pts.push_back(std::move(y));
    }
    for (const auto& x : *q.realization) {
        Point y(dp, Rational(0));
        Point z = sub(x, cq);
        y.insert(y.end(), z.begin(), z.end());
        pts.push_back(std::move(y));
    }
    return polytope_from_points(pts, "", "free_sum(" + p.provenance + "," + q.provenance + ")");
}

Polytope antiwedge() {
    const int raw[6][3] = {{-2, -2, 0}, {-1, 2, -2}, {2, -2, 1}, {1, 0, 0}, {-2, -2, -1}, {1, -2, 0}};
    std::vector<Point> pts;
    for (const auto& r : raw) pts.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2])});
    return polytope_from_points(pts, "TA", "antiwedge");
}

}  // namespace polyatlas
