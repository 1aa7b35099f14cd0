#pragma once

#include "rootzeta/linalg.hpp"
#include "rootzeta/root_system.hpp"

#include <deque>
#include <map>
#include <set>
#include <vector>

namespace rootzeta {

inline IMatrix identity_matrix(std::size_t r) {
    IMatrix m(r, IVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

inline IMatrix matmul(const IMatrix& a, const IMatrix& b) {
    const std::size_t r = a.size();
    IMatrix c(r, IVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IVec act(const IMatrix& m, const IVec& v) {
    IVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// An element of Aut(Delta) = Omega x| W.  Matrices act on column vectors of
// simple-root, simple-coroot and fundamental-weight coordinates.
struct WeylElement {
    IMatrix on_roots;
    IMatrix on_coroots;
    IMatrix on_weights;
    std::vector<long> perm;  // perm[a] = +-(b+1) with w(root a) = +-root b
    std::vector<std::size_t> inversions;  // Delta_w = {alpha > 0 : w alpha < 0}
    std::vector<unsigned> word;  // simple reflections, leftmost first

    std::size_t length() const { return inversions.size(); }
    bool operator<(const WeylElement& o) const { return on_roots < o.on_roots; }
    bool operator==(const WeylElement& o) const { return on_roots == o.on_roots; }
};

inline WeylElement make_element(const RootSystem& rs, IMatrix on_roots, IMatrix on_coroots, IMatrix on_weights) {
    WeylElement w;
    w.on_roots = std::move(on_roots);
    w.on_coroots = std::move(on_coroots);
    w.on_weights = std::move(on_weights);
    for (std::size_t a = 0; a < rs.n(); ++a) {
        long s = rs.signed_index(act(w.on_roots, rs.roots[a]));
        if (s == 0) throw std::logic_error("map does not preserve the root system");
        w.perm.push_back(s);
        if (s < 0) w.inversions.push_back(a);
    }
    return w;
}

inline WeylElement identity_element(const RootSystem& rs) {
    return make_element(rs, identity_matrix(rs.r), identity_matrix(rs.r), identity_matrix(rs.r));
}

inline WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
    const auto& A = rs.cartan;
    IMatrix R = identity_matrix(rs.r), C = identity_matrix(rs.r), L = identity_matrix(rs.r);
    for (std::size_t j = 0; j < rs.r; ++j) {
        R[i][j] -= A[i][j];  // beta - <alpha_i^vee, beta> alpha_i
        C[i][j] -= A[j][i];  // gamma - <gamma, alpha_i> alpha_i^vee
        L[j][i] -= A[j][i];  // lambda - <alpha_i^vee, lambda> alpha_i
    }
    auto w = make_element(rs, R, C, L);
    w.word = {static_cast<unsigned>(i)};
    return w;
}

inline WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
    auto w = make_element(rs, matmul(a.on_roots, b.on_roots), matmul(a.on_coroots, b.on_coroots),
                          matmul(a.on_weights, b.on_weights));
    w.word = a.word;
    w.word.insert(w.word.end(), b.word.begin(), b.word.end());
    return w;
}

// subgroup generated by the simple reflections in gens, breadth first
inline std::vector<WeylElement> generate_subgroup(const RootSystem& rs, const std::vector<std::size_t>& gens) {
    std::vector<WeylElement> simple;
    for (auto i : gens) simple.push_back(simple_reflection(rs, i));
    std::vector<WeylElement> out{identity_element(rs)};
    std::set<IMatrix> seen{out[0].on_roots};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& s : simple) {
            auto w = compose(rs, s, out[cur]);
            if (seen.insert(w.on_roots).second) {
                out.push_back(std::move(w));
                queue.push_back(out.size() - 1);
            }
        }
    }
    return out;
}

inline std::vector<WeylElement> generate_weyl_group(const RootSystem& rs) {
    std::vector<std::size_t> all(rs.r);
    for (std::size_t i = 0; i < rs.r; ++i) all[i] = i;
    return generate_subgroup(rs, all);
}

inline std::size_t classical_weyl_order(char family, std::size_t r) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= r; ++i) f *= i;
    switch (family) {
        case 'A': return f * (r + 1);
        case 'B':
        case 'C': return f << r;
        case 'D': return (f << r) / 2;
        case 'G': return 12;
    }
    return 0;
}

inline IMatrix integer_inverse(const IMatrix& m) {
    Matrix q(m.size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) q[i][j] = m[i][j];
    auto inv = inverse(q);
    if (!inv) throw std::logic_error("singular Weyl matrix");
    IMatrix out(m.size(), IVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!is_integer((*inv)[i][j])) throw std::logic_error("non-integral inverse");
            out[i][j] = (*inv)[i][j].get_num().get_si();
        }
    return out;
}

inline WeylElement inverse_of(const RootSystem& rs, const WeylElement& w) {
    auto v = make_element(rs, integer_inverse(w.on_roots), integer_inverse(w.on_coroots),
                          integer_inverse(w.on_weights));
    v.word.assign(w.word.rbegin(), w.word.rend());
    return v;
}

// Dynkin diagram automorphisms as permutations of the simple roots; kept to A2, A3 and D4,
// every other type reports the identity alone
inline std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& rs) {
    std::vector<std::size_t> id(rs.r);
    for (std::size_t i = 0; i < rs.r; ++i) id[i] = i;
    std::vector<std::vector<std::size_t>> out{id};
    if (rs.label == "A2" || rs.label == "A3") {
        std::vector<std::size_t> rev(id.rbegin(), id.rend());
        out.push_back(rev);
    } else if (rs.label == "D4") {
        // S3 on the legs 1, 3, 4 around the central node 2
        std::vector<std::size_t> legs{0, 2, 3};
        std::sort(legs.begin(), legs.end());
        do {
            std::vector<std::size_t> p = id;
            p[0] = legs[0];
            p[2] = legs[1];
            p[3] = legs[2];
            if (p != id) out.push_back(p);
        } while (std::next_permutation(legs.begin(), legs.end()));
    }
    return out;
}

inline WeylElement diagram_element(const RootSystem& rs, const std::vector<std::size_t>& p) {
    IMatrix P(rs.r, IVec(rs.r, 0));
    for (std::size_t i = 0; i < rs.r; ++i) P[p[i]][i] = 1;
    auto w = make_element(rs, P, P, P);
    return w;
}

// Aut(Delta) = Omega x| W, listed as omega * w with the Weyl group order inside each coset
inline std::vector<WeylElement> extended_weyl_group(const RootSystem& rs) {
    auto W = generate_weyl_group(rs);
    auto omegas = diagram_automorphisms(rs);
    std::vector<WeylElement> out;
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        auto om = diagram_element(rs, omegas[k]);
        for (const auto& w : W) {
            auto e = compose(rs, om, w);
            out.push_back(std::move(e));
        }
    }
    return out;
}

// W^I = {w : w^{-1} alpha_i > 0 for i in I}
inline std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const std::vector<std::size_t>& I) {
    auto W = generate_weyl_group(rs);
    std::vector<WeylElement> out;
    for (const auto& w : W) {
        auto winv = inverse_of(rs, w);
        bool ok = true;
        for (auto i : I)
            if (winv.perm[rs.simple[i]] < 0) ok = false;
        if (ok) out.push_back(w);
    }
    return out;
}

struct ExponentAction {
    std::vector<long> k;  // (w k)_alpha = k_{w^{-1} alpha}
    std::vector<std::size_t> sign_set;  // Delta_{w^{-1}}
};

template <class T>
std::vector<T> permute_by_inverse(const WeylElement& winv, const std::vector<T>& k) {
    std::vector<T> out(k.size());
    for (std::size_t a = 0; a < k.size(); ++a) {
        long s = winv.perm[a];
        out[a] = k[static_cast<std::size_t>(s < 0 ? -s : s) - 1];
    }
    return out;
}

inline ExponentAction act_on_exponents(const RootSystem& rs, const WeylElement& w, const std::vector<long>& k) {
    if (k.size() != rs.n()) throw std::invalid_argument("exponent vector length must be |Delta_+|");
    auto winv = inverse_of(rs, w);
    return {permute_by_inverse(winv, k), winv.inversions};
}

}  // namespace rootzeta
