#include "rootzeta/generating.hpp"
#include "rootzeta/polytope.hpp"
#include "rootzeta/serialize.hpp"
#include "rootzeta/simplex_series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace rootzeta;

namespace {

// cube [0,1]^d with a few random cuts a.x >= h through its interior
HPolytope random_cut_cube(std::mt19937& rng, std::size_t d, int cuts) {
    std::uniform_int_distribution<int> coef(-3, 3), num(0, 8);
    auto p = HPolytope::unit_cube(d);
    for (int c = 0; c < cuts; ++c) {
        Vec a(d);
        Rational center = 0;
        for (auto& x : a) {
            x = coef(rng);
            center += x / 2;
        }
        // keep the cube center strictly feasible
        p.add(a, center - rat(num(rng) + 1, 8));
    }
    return p;
}

Rational volume_of(const HPolytope& p) {
    auto vs = enumerate_vertices(p);
    if (vs.vertices.empty() || affine_hull(vs.vertices).dim < p.dim) return 0;
    return lattice_volume(face_lattice(p, vs));
}

// A(d, k): permutations of d letters with k descents
Integer eulerian(unsigned d, unsigned k) {
    std::vector<std::vector<Integer>> A(d + 1, std::vector<Integer>(d + 1, 0));
    A[0][0] = 1;
    for (unsigned n = 1; n <= d; ++n)
        for (unsigned j = 0; j < n; ++j) {
            A[n][j] = (j + 1) * A[n - 1][j];
            if (j > 0) A[n][j] += (n - j) * A[n - 1][j - 1];
        }
    return k <= d ? A[d][k] : Integer(0);
}

}  // namespace

TEST(Polytope, CubeFVectors) {
    EXPECT_EQ(face_lattice(HPolytope::unit_cube(3), enumerate_vertices(HPolytope::unit_cube(3))).f_vector(),
              (std::vector<std::size_t>{8, 12, 6, 1}));
    EXPECT_EQ(face_lattice(HPolytope::unit_cube(4), enumerate_vertices(HPolytope::unit_cube(4))).f_vector(),
              (std::vector<std::size_t>{16, 32, 24, 8, 1}));
}

TEST(Polytope, CubeTriangulation) {
    for (std::size_t d = 2; d <= 4; ++d) {
        auto T = triangulate(HPolytope::unit_cube(d));
        std::size_t f = 1;
        for (std::size_t i = 2; i <= d; ++i) f *= i;
        EXPECT_EQ(T.simplices.size(), f);
        for (std::size_t k = 0; k < T.simplices.size(); ++k) {
            EXPECT_EQ(T.simplices[k].size(), d + 1);
            EXPECT_EQ(simplex_volume(simplex_of(T, k)), Rational(1) / Rational(factorial(static_cast<unsigned>(d))));
        }
        EXPECT_EQ(triangulation_volume(T), 1);
    }
}

TEST(Polytope, HypersimplexVolumesAreEulerian) {
    // {x in [0,1]^d : s-1 <= sum x <= s} has volume A(d, s-1)/d!
    for (unsigned d = 2; d <= 5; ++d)
        for (unsigned s = 1; s <= d; ++s) {
            auto p = HPolytope::unit_cube(d);
            p.add_slab(Vec(d, 1), s - 1, s);
            EXPECT_EQ(volume_of(p), ratio(eulerian(d, s - 1), factorial(d))) << d << " " << s;
        }
}

TEST(Polytope, CubeAwareEnumerationMatchesGeneric) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t d = 2 + trial % 3;
        auto p = random_cut_cube(rng, d, 1 + trial % 4);
        EXPECT_EQ(enumerate_vertices(p).vertices, enumerate_vertices_generic(p).vertices) << trial;
    }
    for (const char* l : {"A3", "C3"}) {
        auto rs = build_root_system(l);
        for (const Vec& y : {Vec{0, 0, 0}, Vec{rat(1, 3), rat(1, 5), rat(4, 7)}})
            for (const auto& b : build_boxes(rs, y).boxes)
                EXPECT_EQ(b.verts.vertices, enumerate_vertices_generic(b.poly).vertices) << l;
    }
}

TEST(Polytope, VerticesSatisfyAndSaturate) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_cut_cube(rng, 3, 3);
        auto vs = enumerate_vertices(p);
        for (std::size_t v = 0; v < vs.vertices.size(); ++v) {
            EXPECT_TRUE(p.contains(vs.vertices[v]));
            // the tight rows pin the point down
            Matrix tight;
            for (std::size_t i = 0; i < p.rows.size(); ++i)
                if (vs.active[v].test(i)) tight.push_back(p.rows[i].a);
            EXPECT_EQ(rank(tight), 3u);
        }
    }
}

TEST(Polytope, InvariantUnderRowPermutationAndScaling) {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_cut_cube(rng, 3, 3);
        auto q = p;
        std::shuffle(q.rows.begin(), q.rows.end(), rng);
        for (auto& row : q.rows) {
            Rational s = rat(static_cast<long>(rng() % 5 + 1), 3);
            for (auto& x : row.a) x *= s;
            row.h *= s;
        }
        EXPECT_EQ(enumerate_vertices(p).vertices, enumerate_vertices(q).vertices);
        EXPECT_EQ(volume_of(p), volume_of(q));
        EXPECT_EQ(face_lattice(p, enumerate_vertices(p)).f_vector(), face_lattice(q, enumerate_vertices(q)).f_vector());
    }
}

TEST(Polytope, VolumeIsAdditiveUnderCuts) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coef(-4, 4), num(-6, 6);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t d = 2 + trial % 3;
        auto p = random_cut_cube(rng, d, 2);
        Vec a(d);
        for (auto& x : a) x = coef(rng);
        if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) a[0] = 1;
        Rational h = rat(num(rng), 5);
        auto lo = p, hi = p;
        lo.add(a, h);
        Vec neg(a);
        for (auto& x : neg) x = -x;
        hi.add(neg, -h);
        EXPECT_EQ(volume_of(lo) + volume_of(hi), volume_of(p)) << trial;
    }
}

TEST(Polytope, LatticeVolumeAgreesWithTriangulation) {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_cut_cube(rng, 2 + trial % 3, 3);
        auto vs = enumerate_vertices(p);
        auto L = face_lattice(p, vs);
        auto T = triangulate_full_flags(L);
        Rational tv = triangulation_volume(T);
        EXPECT_EQ(lattice_volume(L), tv);
        // the reversed vertex numbering gives another triangulation of the same body
        std::vector<std::size_t> order(L.vertices.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
        EXPECT_EQ(triangulation_volume(triangulate_full_flags(L, order)), tv);
        EXPECT_EQ(lattice_volume(L, order), tv);
        if (p.dim == 2) { EXPECT_EQ(polygon_area(vs.vertices), tv); }
    }
}

TEST(Polytope, PolygonArea) {
    EXPECT_EQ(polygon_area({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), 1);
    EXPECT_EQ(polygon_area({{0, 0}, {2, 0}, {0, 3}}), 3);
}

TEST(Simplex, StandardVolumeAndDegeneracy) {
    for (std::size_t d = 1; d <= 5; ++d) {
        Simplex s;
        s.vertices.push_back(Vec(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            Vec e(d, 0);
            e[i] = 1;
            s.vertices.push_back(e);
        }
        EXPECT_EQ(simplex_volume(s), Rational(1) / Rational(factorial(static_cast<unsigned>(d))));
    }
    Simplex flat{{{0, 0}, {1, 1}, {2, 2}}};
    EXPECT_THROW(simplex_volume(flat), std::domain_error);
    EXPECT_THROW(simplex_volume(Simplex{}), std::invalid_argument);
}

TEST(Simplex, ExpSeriesOfTheUnitInterval) {
    // int_0^1 e^{tx} dx = sum t^k/(k+1)!
    Simplex s{{{0}, {1}}};
    auto series = simplex_exp_series(s, {MultiPoly::variable(1, 0)}, Truncation::total_degree(10));
    for (unsigned k = 0; k <= 10; ++k) EXPECT_EQ(series.coefficient({k}), ratio(1, factorial(k + 1)));
}

TEST(Simplex, ExpSeriesMatchesNumeric) {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int trial = 0; trial < 8; ++trial) {
        Simplex s;
        for (int v = 0; v < 4; ++v) {
            Vec p(3);
            for (auto& x : p) x = rat(num(rng), 4);
            s.vertices.push_back(p);
        }
        Matrix m(3, Vec(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = s.vertices[i + 1][j] - s.vertices[0][j];
        if (determinant(m) == 0) continue;
        std::vector<MultiPoly> forms{MultiPoly::variable(2, 0), MultiPoly::variable(2, 1),
                                     MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1)};
        auto series = simplex_exp_series(s, forms, Truncation::total_degree(24));
        for (double t1 : {0.3, -0.7})
            for (double t2 : {0.5, 0.0}) {
                double approx = 0;
                for (const auto& [e, c] : series.terms()) approx += c.get_d() * std::pow(t1, e[0]) * std::pow(t2, e[1]);
                double exact = simplex_exp_numeric(s, {t1, t2, t1 - t2});
                EXPECT_NEAR(approx, exact, 1e-10 * std::max(1.0, std::abs(exact)));
            }
    }
}

TEST(Simplex, NumericHandlesCollisions) {
    Simplex s{{{0, 0}, {1, 0}, {0, 1}}};
    // a.p_1 = a.p_2; int_0^1 s e^s ds = 1
    EXPECT_NEAR(simplex_exp_numeric(s, {1.0, 1.0}), 1.0, 1e-12);
    EXPECT_NEAR(simplex_exp_numeric(s, {0.0, 0.0}), 0.5, 1e-15);
    // a.p_0 = a.p_2 = 0; int_0^1 (1-u) e^u du = e - 2
    EXPECT_NEAR(simplex_exp_numeric(s, {1.0, 0.0}), std::numbers::e - 2, 1e-12);
}

TEST(Polytope, JsonRoundTrip) {
    std::mt19937 rng(53);
    auto p = random_cut_cube(rng, 3, 2);
    auto q = hpolytope_from_json(to_json(p));
    ASSERT_EQ(q.dim, p.dim);
    ASSERT_EQ(q.rows.size(), p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        EXPECT_EQ(q.rows[i].a, p.rows[i].a);
        EXPECT_EQ(q.rows[i].h, p.rows[i].h);
    }
    Json bad = to_json(p);
    bad["rows"][0]["a"].push_back("1");
    EXPECT_THROW(hpolytope_from_json(bad), std::invalid_argument);
}
