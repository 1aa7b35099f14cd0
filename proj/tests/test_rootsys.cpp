#include "rootzeta/root_system.hpp"
#include "rootzeta/weyl.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rootzeta;

namespace {

const std::vector<std::string> kLabels{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2"};

std::size_t expected_roots(const std::string& l) {
    std::size_t r = static_cast<std::size_t>(l[1] - '0');
    switch (l[0]) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        default: return 6;
    }
}

std::size_t expected_order(const std::string& l) {
    std::size_t r = static_cast<std::size_t>(l[1] - '0'), f = 1;
    for (std::size_t i = 2; i <= r; ++i) f *= i;
    switch (l[0]) {
        case 'A': return f * (r + 1);
        case 'B':
        case 'C': return f << r;
        case 'D': return f << (r - 1);
        default: return 12;
    }
}

// s_i(alpha) straight from the Cartan matrix
IVec reflect(const RootSystem& rs, std::size_t i, IVec v) {
    long c = 0;
    for (std::size_t j = 0; j < rs.r; ++j) c += rs.cartan[i][j] * v[j];
    v[i] -= c;
    return v;
}

std::size_t count_inversions(const RootSystem& rs, const WeylElement& w) {
    std::size_t n = 0;
    for (long p : w.perm) n += p < 0;
    (void)rs;
    return n;
}

}  // namespace

TEST(RootSystem, PositiveRootCounts) {
    for (const auto& l : kLabels) {
        auto rs = build_root_system(l);
        EXPECT_EQ(rs.n(), expected_roots(l)) << l;
        EXPECT_EQ(rs.simple.size(), rs.r) << l;
        EXPECT_EQ(rs.simple.size() + rs.nonsimple.size(), rs.n()) << l;
    }
}

TEST(RootSystem, ClosedUnderSimpleReflections) {
    for (const auto& l : kLabels) {
        auto rs = build_root_system(l);
        for (std::size_t i = 0; i < rs.r; ++i)
            for (std::size_t a = 0; a < rs.n(); ++a) {
                IVec img = reflect(rs, i, rs.roots[a]);
                long s = rs.signed_index(img);
                ASSERT_NE(s, 0) << l;
                // only alpha_i changes sign
                EXPECT_EQ(s < 0, rs.roots[a] == rs.roots[rs.simple[i]]) << l;
            }
    }
}

TEST(RootSystem, CanonicalOrder) {
    for (const auto& l : kLabels) {
        auto rs = build_root_system(l);
        for (std::size_t a = 0; a + 1 < rs.n(); ++a) {
            EXPECT_LE(rs.height(a), rs.height(a + 1)) << l;
            if (rs.height(a) == rs.height(a + 1)) { EXPECT_GT(rs.roots[a], rs.roots[a + 1]) << l; }
        }
        for (std::size_t i = 0; i < rs.r; ++i) EXPECT_EQ(rs.simple[i], i) << l;
    }
    auto c2 = build_root_system("C2");
    EXPECT_EQ(c2.roots, (std::vector<IVec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST(RootSystem, CorootsPairToTwo) {
    for (const auto& l : kLabels) {
        auto rs = build_root_system(l);
        for (std::size_t a = 0; a < rs.n(); ++a) {
            // <alpha^vee, alpha> = sum_ij c^vee_i A_ij c_j
            long p = 0;
            for (std::size_t i = 0; i < rs.r; ++i)
                for (std::size_t j = 0; j < rs.r; ++j) p += rs.coroots[a][i] * rs.cartan[i][j] * rs.roots[a][j];
            EXPECT_EQ(p, 2) << l;
        }
    }
}

TEST(RootSystem, RejectsUnsupportedLabels) {
    for (const char* l : {"E6", "E8", "F4", "A0", "B1", "D2", "A5", "", "A", "a2", "G3"})
        EXPECT_THROW(build_root_system(l), UnsupportedType) << l;
}

TEST(RootSystem, D3IsA3) {
    auto d3 = build_root_system("D3"), a3 = build_root_system("A3");
    EXPECT_EQ(d3.cartan, a3.cartan);
    EXPECT_EQ(d3.roots, a3.roots);
    EXPECT_EQ(k_constant(d3), k_constant(a3));
}

TEST(RootSystem, KConstant) {
    // simply laced: <alpha^vee, rho> is the height, so K(A_r) = prod_{j<=r} j!
    for (std::size_t r = 1; r <= 4; ++r) {
        Integer want = 1;
        for (std::size_t j = 1; j <= r; ++j) want *= factorial(static_cast<unsigned>(j));
        EXPECT_EQ(k_constant(build_root_system("A" + std::to_string(r))), want);
    }
    auto d4 = build_root_system("D4");
    Integer heights = 1;
    for (std::size_t a = 0; a < d4.n(); ++a) heights *= d4.height(a);
    EXPECT_EQ(k_constant(d4), heights);
    EXPECT_EQ(heights, 4320);
    // B2 coroots form a C2 system: heights 1, 1, 2, 3
    EXPECT_EQ(k_constant(build_root_system("B2")), 6);
    EXPECT_EQ(k_constant(build_root_system("C2")), 6);
    EXPECT_EQ(k_constant(build_root_system("G2")), 1 * 1 * 2 * 3 * 4 * 5);
}

TEST(Weyl, GroupOrders) {
    for (const auto& l : kLabels) {
        auto rs = build_root_system(l);
        auto W = generate_weyl_group(rs);
        EXPECT_EQ(W.size(), expected_order(l)) << l;
        std::set<IMatrix> distinct;
        for (const auto& w : W) distinct.insert(w.on_roots);
        EXPECT_EQ(distinct.size(), W.size()) << l;
    }
}

TEST(Weyl, LengthProperties) {
    for (const char* l : {"A3", "B3", "C3", "G2", "D4"}) {
        auto rs = build_root_system(l);
        auto W = generate_weyl_group(rs);
        std::size_t longest = 0;
        for (const auto& w : W) {
            EXPECT_EQ(w.length(), count_inversions(rs, w)) << l;
            EXPECT_EQ(inverse_of(rs, w).length(), w.length()) << l;
            EXPECT_LE(w.word.size(), rs.n());
            for (std::size_t i = 0; i < rs.r; ++i) {
                auto sw = compose(rs, simple_reflection(rs, i), w);
                long d = static_cast<long>(sw.length()) - static_cast<long>(w.length());
                EXPECT_TRUE(d == 1 || d == -1) << l;
                // descent exactly when w^{-1} alpha_i < 0
                EXPECT_EQ(d < 0, inverse_of(rs, w).perm[rs.simple[i]] < 0) << l;
            }
            longest = std::max(longest, w.length());
        }
        EXPECT_EQ(longest, rs.n()) << l;
    }
}

TEST(Weyl, WordsReproduceElements) {
    auto rs = build_root_system("B3");
    for (const auto& w : generate_weyl_group(rs)) {
        WeylElement x = identity_element(rs);
        for (unsigned i : w.word) x = compose(rs, x, simple_reflection(rs, i));
        EXPECT_EQ(x, w);
        EXPECT_EQ(w.word.size(), w.length());
    }
}

TEST(Weyl, MinimalCosetRepresentatives) {
    for (const char* l : {"A2", "A3", "B3", "C2", "G2"}) {
        auto rs = build_root_system(l);
        auto W = generate_weyl_group(rs);
        for (unsigned mask = 0; mask < (1u << rs.r); ++mask) {
            std::vector<std::size_t> I;
            for (std::size_t i = 0; i < rs.r; ++i)
                if (mask >> i & 1) I.push_back(i);
            auto WI = generate_subgroup(rs, I);
            auto reps = minimal_coset_reps(rs, I);
            EXPECT_EQ(reps.size() * WI.size(), W.size()) << l << " mask " << mask;
            // brute force: the shortest element of each right coset W_I w
            std::set<IMatrix> shortest;
            std::set<IMatrix> done;
            for (const auto& w : W) {
                if (done.count(w.on_roots)) continue;
                const WeylElement* best = nullptr;
                std::vector<WeylElement> coset;
                for (const auto& v : WI) coset.push_back(compose(rs, v, w));
                for (const auto& c : coset) {
                    done.insert(c.on_roots);
                    if (!best || c.length() < best->length()) best = &c;
                }
                shortest.insert(best->on_roots);
            }
            std::set<IMatrix> got;
            for (const auto& u : reps) got.insert(u.on_roots);
            EXPECT_EQ(got, shortest) << l << " mask " << mask;
            // lengths add along w = v u
            for (const auto& u : reps)
                for (const auto& v : WI) EXPECT_EQ(compose(rs, v, u).length(), u.length() + v.length());
        }
    }
}

TEST(Weyl, ActOnExponents) {
    auto rs = build_root_system("A2");
    auto s1 = simple_reflection(rs, 0);
    auto act = act_on_exponents(rs, s1, {10, 20, 30});
    EXPECT_EQ(act.k, (std::vector<long>{10, 30, 20}));
    EXPECT_EQ(act.sign_set, (std::vector<std::size_t>{0}));
    auto w0 = compose(rs, compose(rs, s1, simple_reflection(rs, 1)), s1);
    auto a0 = act_on_exponents(rs, w0, {10, 20, 30});
    EXPECT_EQ(a0.k, (std::vector<long>{20, 10, 30}));
    EXPECT_EQ(a0.sign_set.size(), 3u);
    EXPECT_THROW(act_on_exponents(rs, s1, {1, 2}), std::invalid_argument);
}

TEST(Weyl, ExponentActionComposes) {
    for (const char* l : {"A3", "C3", "G2"}) {
        auto rs = build_root_system(l);
        auto W = generate_weyl_group(rs);
        std::vector<long> k(rs.n());
        for (std::size_t a = 0; a < k.size(); ++a) k[a] = static_cast<long>(100 + a);
        for (std::size_t x = 0; x < W.size(); x += 3)
            for (std::size_t y = 0; y < W.size(); y += 5) {
                auto lhs = act_on_exponents(rs, compose(rs, W[x], W[y]), k).k;
                auto rhs = act_on_exponents(rs, W[x], act_on_exponents(rs, W[y], k).k).k;
                EXPECT_EQ(lhs, rhs) << l;
            }
    }
}

TEST(Weyl, DiagramAutomorphisms) {
    EXPECT_EQ(diagram_automorphisms(build_root_system("D4")).size(), 6u);
    EXPECT_EQ(diagram_automorphisms(build_root_system("A2")).size(), 2u);
    EXPECT_EQ(diagram_automorphisms(build_root_system("B3")).size(), 1u);
    for (const char* l : {"A2", "A3", "D4"}) {
        auto rs = build_root_system(l);
        for (const auto& p : diagram_automorphisms(rs)) {
            // preserves the Cartan matrix and every positive root
            for (std::size_t i = 0; i < rs.r; ++i)
                for (std::size_t j = 0; j < rs.r; ++j) EXPECT_EQ(rs.cartan[p[i]][p[j]], rs.cartan[i][j]);
            auto om = diagram_element(rs, p);
            EXPECT_EQ(om.length(), 0u) << l;
        }
        EXPECT_EQ(extended_weyl_group(rs).size(), generate_weyl_group(rs).size() * diagram_automorphisms(rs).size());
    }
}
