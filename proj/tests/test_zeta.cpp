#include "rootzeta/lattice_sum.hpp"
#include "rootzeta/reference_data.hpp"
#include "rootzeta/symmetry.hpp"
#include "rootzeta/witten.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>

using namespace rootzeta;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double catalan = 0.915965594177219015;

WeylElement longest(const RootSystem& rs) {
    WeylElement best = identity_element(rs);
    for (const auto& w : generate_weyl_group(rs))
        if (w.length() > best.length()) best = w;
    return best;
}

// (-1)^n prod (2 pi i)^{k}/k!
Complex lattice_factor(const std::vector<unsigned>& k) {
    Complex f = k.size() % 2 ? -1.0 : 1.0;
    for (auto x : k) f *= std::pow(Complex(0, 2 * pi), static_cast<int>(x)) / std::tgamma(x + 1.0);
    return f;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(ExactValues, ClassicalEvaluations) {
    // Tornheim: sum 1/(m n (m+n))^2 = pi^6/2835; Witten's sl(3) sum doubles each factor
    EXPECT_EQ(witten_special_value(build_root_system("A2"), 1u), PiValue(rat(1, 2835), 6));
    EXPECT_EQ(witten_zeta_value(build_root_system("A2"), 1), PiValue(rat(4, 2835), 6));
    // A1 is the Riemann zeta function: zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945
    auto a1 = build_root_system("A1");
    EXPECT_EQ(witten_special_value(a1, 1u), PiValue(rat(1, 6), 2));
    EXPECT_EQ(witten_special_value(a1, 2u), PiValue(rat(1, 90), 4));
    EXPECT_EQ(witten_special_value(a1, 3u), PiValue(rat(1, 945), 6));
}

TEST(ExactValues, PublishedClosedForms) {
    for (const auto& c : reference::closed_forms()) {
        auto rs = build_root_system(c.type);
        PiValue got;
        switch (c.kind) {
            case reference::Kind::special: got = witten_special_value(rs, c.args); break;
            case reference::Kind::witten: got = witten_zeta_value(rs, c.args[0]); break;
            case reference::Kind::mixed: got = mixed_even_value(rs, c.args); break;
        }
        EXPECT_EQ(got, c.value) << c.name;
    }
}

TEST(ExactValues, AgreeWithLatticeSums) {
    for (const char* l : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
        auto rs = build_root_system(l);
        for (unsigned k : {1u, 2u}) {
            if (k == 2 && rs.n() > 4) continue;
            double exact = witten_special_value(rs, k).to_double();
            auto z = zeta_numeric(rs, complex_exponents(std::vector<long>(rs.n(), 2 * k)), Vec(rs.r, 0), 300);
            EXPECT_LE(std::abs(z.value.real() - exact), 5 * z.tail) << l << " k=" << k;
            // A1 at k=1 converges like 1/M
            if (rs.r > 1 || k > 1) { EXPECT_LT(rel(z.value.real(), exact), 1e-5) << l << " k=" << k; }
            EXPECT_NEAR(z.value.imag(), 0, 1e-15);
        }
    }
    // distinct exponents per length orbit
    auto c2 = build_root_system("C2");
    auto orbits = length_orbits(c2);
    ASSERT_EQ(orbits.size(), 2u);
    std::vector<long> s(4);
    for (auto a : orbits[0]) s[a] = 2;
    for (auto a : orbits[1]) s[a] = 4;
    auto z = zeta_numeric(c2, complex_exponents(s), {0, 0}, 300);
    EXPECT_LT(rel(z.value.real(), witten_special_value(c2, std::vector<unsigned>{1, 2}).to_double()), 1e-8);
}

TEST(ExactValues, PositiveOnFeasibleTypes) {
    // zeta_r(2k) is a sum of positive terms
    auto start = std::chrono::steady_clock::now();
    for (const char* l : {"A1", "A2", "A3", "B2", "C2", "D3", "G2"})
        for (unsigned k = 1; k <= 3; ++k) {
            auto rs = build_root_system(l);
            if (rs.n() > 6 && k > 1) continue;
            if (rs.n() == 6 && k > 2) continue;
            auto v = witten_special_value(rs, k);
            EXPECT_GT(v.coeff, 0) << l << " k=" << k;
            EXPECT_EQ(v.pi_power, 2 * k * rs.n()) << l;
        }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 300);
}

TEST(ExactValues, RejectBadArguments) {
    auto c2 = build_root_system("C2");
    EXPECT_THROW(mixed_even_value(c2, {2, 3, 2, 4}), std::invalid_argument);
    EXPECT_THROW(mixed_even_value(c2, {2, 0, 2, 4}), std::invalid_argument);
    EXPECT_THROW(zeta_even_value(c2, {1, 1, 2, 1}), std::invalid_argument);
    EXPECT_THROW(zeta_even_value(c2, {1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(witten_special_value(c2, std::vector<unsigned>{1}), std::invalid_argument);
    EXPECT_THROW(witten_special_value(c2, 0u), std::invalid_argument);
}

TEST(LatticeSums, A1Characters) {
    auto a1 = build_root_system("A1");
    auto half = zeta_numeric(a1, {Complex(2)}, {rat(1, 2)}, 4000);
    EXPECT_NEAR(half.value.real(), -pi * pi / 12, 1e-6);
    EXPECT_LE(std::abs(half.value.real() + pi * pi / 12), half.tail + 1e-12);
    auto quarter = zeta_numeric(a1, {Complex(2)}, {rat(1, 4)}, 4000);
    EXPECT_NEAR(quarter.value.real(), -pi * pi / 48, 1e-6);
    EXPECT_NEAR(quarter.value.imag(), catalan, 1e-6);
    auto plain = zeta_numeric(a1, {Complex(3)}, {0}, 4000);
    EXPECT_NEAR(plain.value.real(), riemann_zeta(3), 1e-7);
}

TEST(LatticeSums, RiemannZeta) {
    EXPECT_NEAR(riemann_zeta(2), pi * pi / 6, 1e-14);
    EXPECT_NEAR(riemann_zeta(4), std::pow(pi, 4) / 90, 1e-14);
    EXPECT_NEAR(riemann_zeta(3), 1.2020569031595942, 1e-14);
}

TEST(LatticeSums, TailBoundsTheError) {
    auto a2 = build_root_system("A2");
    double exact = std::pow(pi, 6) / 2835;
    for (long M : {50L, 100L, 200L}) {
        auto z = zeta_numeric(a2, complex_exponents({2, 2, 2}), {0, 0}, M);
        EXPECT_LE(std::abs(z.value.real() - exact), 5 * z.tail) << M;
        EXPECT_GT(z.tail, 0);
    }
}

TEST(LatticeSums, ThreadCountIsInvisible) {
    auto c2 = build_root_system("C2");
    Vec y{rat(1, 5), rat(3, 7)};
    auto a = zeta_numeric(c2, complex_exponents({2, 3, 2, 2}), y, 150, 1);
    auto b = zeta_numeric(c2, complex_exponents({2, 3, 2, 2}), y, 150, 3);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.tail, b.tail);
    auto s1 = S_numeric(c2, complex_exponents({2, 2, 2, 2}), y, {}, 80, 1);
    auto s3 = S_numeric(c2, complex_exponents({2, 2, 2, 2}), y, {}, 80, 3);
    EXPECT_EQ(s1.value, s3.value);
}

TEST(LatticeSums, ArgumentChecks) {
    auto a2 = build_root_system("A2");
    EXPECT_THROW(zeta_numeric(a2, complex_exponents({2, 2}), {0, 0}, 10), std::invalid_argument);
    EXPECT_THROW(zeta_numeric(a2, complex_exponents({2, 2, 2}), {0}, 10), std::invalid_argument);
    EXPECT_THROW(S_numeric(a2, complex_exponents({2, 2, 2}), {0, 0}, {2}, 10), std::invalid_argument);
    EXPECT_THROW(check_mordell_relation(1, 10), std::invalid_argument);
}

TEST(SSum, A1IsThePeriodicBernoulliFunction) {
    // sum_{m != 0} e^{2 pi i m y}/m^k = -(2 pi i)^k/k! B_k({y})
    auto a1 = build_root_system("A1");
    for (unsigned k : {2u, 3u, 4u})
        for (Rational y : {rat(1, 3), rat(1, 7)}) {
            auto S = S_numeric(a1, {Complex(k)}, {y}, {}, 3000);
            Complex want = lattice_factor({k}) * bernoulli_polynomial(k).evaluate({y}).get_d();
            EXPECT_LE(std::abs(S.value - want), S.tail + 1e-12) << k;
        }
}

TEST(SSum, MatchesBernoulliPolynomialValues) {
    struct Case {
        const char* type;
        std::vector<unsigned> k;
        Vec y;
    };
    for (const auto& c : std::vector<Case>{{"A2", {2, 2, 2}, {rat(1, 3), rat(1, 4)}},
                                           {"A2", {3, 2, 2}, {rat(1, 3), rat(1, 4)}},
                                           {"B2", {2, 2, 3, 2}, {rat(2, 5), rat(1, 6)}},
                                           {"C2", {2, 2, 2, 2}, {rat(1, 5), rat(3, 7)}}}) {
        auto rs = build_root_system(c.type);
        std::vector<long> s(c.k.begin(), c.k.end());
        auto S = S_numeric(rs, complex_exponents(s), c.y, {}, 300);
        Complex want = lattice_factor(c.k) * P_value(rs, c.k, c.y).get_d();
        EXPECT_LE(std::abs(S.value - want), S.tail) << c.type;
        EXPECT_LT(std::abs(S.value - want), 1e-5 * std::abs(want)) << c.type;
    }
}

TEST(SSum, WeylSumOfZetaAtTheOrigin) {
    for (const char* l : {"A2", "C2"}) {
        auto rs = build_root_system(l);
        std::vector<long> s(rs.n(), 2);
        s[1] = 4;
        auto S = S_numeric(rs, complex_exponents(s), Vec(rs.r, 0), {}, 200);
        // with y = 0 every w contributes zeta(w^{-1}s) and even exponents carry no sign
        Complex total = 0;
        double tail = S.tail;
        for (const auto& w : generate_weyl_group(rs)) {
            auto ws = permute_by_inverse(w, s);
            auto z = zeta_numeric(rs, complex_exponents(ws), Vec(rs.r, 0), 200);
            total += z.value;
            tail += z.tail;
        }
        EXPECT_LE(std::abs(S.value - total), tail) << l;
    }
}

TEST(FunctionalRelation, HoldsWithinTails) {
    struct Case {
        const char* type;
        std::vector<long> s;
        Vec y;
        std::vector<std::size_t> I;
    };
    for (const auto& c : std::vector<Case>{{"A2", {2, 4, 2}, {0, 0}, {1}},
                                           {"A2", {2, 3, 2}, {rat(1, 3), rat(1, 4)}, {0}},
                                           {"A2", {2, 2, 2}, {0, 0}, {0, 1}},
                                           {"C2", {2, 2, 2, 2}, {rat(1, 5), 0}, {}},
                                           {"B2", {2, 3, 2, 2}, {rat(1, 2), rat(1, 3)}, {1}}}) {
        auto rs = build_root_system(c.type);
        auto fr = check_FR(rs, c.s, c.y, c.I, 200);
        EXPECT_LE(fr.residual(), fr.tolerance()) << c.type;
        EXPECT_EQ(fr.terms, generate_weyl_group(rs).size() / generate_subgroup(rs, c.I).size());
    }
}

TEST(FunctionalRelation, PartialSumsAgainstExactValues) {
    auto a2 = build_root_system("A2");
    double z222 = std::pow(pi, 6) / 2835;
    auto s1 = S_numeric(a2, complex_exponents({2, 2, 2}), {0, 0}, {1}, 400);
    EXPECT_LT(rel(s1.value.real(), 3 * z222), 1e-6);
    auto s0 = S_numeric(a2, complex_exponents({2, 2, 2}), {0, 0}, {}, 400);
    EXPECT_LT(rel(s0.value.real(), 6 * z222), 1e-6);
}

TEST(Mordell, RelationHolds) {
    for (long s : {2L, 3L, 4L}) {
        auto m = check_mordell_relation(s, 2000);
        EXPECT_LT(m.relative(), 1e-6) << s;
    }
    auto m2 = check_mordell_relation(2, 2000);
    EXPECT_LT(rel(m2.rhs, 3 * std::pow(pi, 6) / 2835), 1e-13);
}

TEST(Parity, VanishingAndNonApplicableCases) {
    auto a2 = build_root_system("A2");
    auto w0 = longest(a2);
    auto r = check_parity_vanishing(a2, {2, 2, 5}, {0, 0}, w0, 200);
    EXPECT_TRUE(r.applicable);
    EXPECT_EQ(r.inversion_sum, 9);
    EXPECT_TRUE(r.vanishes());
    EXPECT_LT(std::abs(r.S.value), 1e-6);

    auto even = check_parity_vanishing(a2, {3, 3, 2}, {0, 0}, w0, 200);
    EXPECT_TRUE(even.stabilizes_s);
    EXPECT_EQ(even.inversion_sum, 8);
    EXPECT_FALSE(even.applicable);

    auto omega = diagram_element(a2, diagram_automorphisms(a2)[1]);
    EXPECT_FALSE(check_parity_vanishing(a2, {2, 2, 3}, {0, 0}, omega, 200).applicable);

    // a nonzero y on the mirror of alpha1 (2 y1 = y2) is fixed by s1
    auto s1 = simple_reflection(a2, 0);
    auto r1 = check_parity_vanishing(a2, {3, 2, 2}, {rat(1, 6), rat(1, 3)}, s1, 200);
    EXPECT_TRUE(r1.stabilizes_y);
    EXPECT_TRUE(r1.applicable);
    EXPECT_TRUE(r1.vanishes());
}
