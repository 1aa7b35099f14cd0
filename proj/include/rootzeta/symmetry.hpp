#pragma once

#include "rootzeta/chambers.hpp"

#include <vector>

namespace rootzeta {

inline Vec act_on_y(const WeylElement& w, const Vec& y) {
    Vec out(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (w.on_coroots[i][j]) out[i] += y[j] * w.on_coroots[i][j];
    return out;
}

inline int parity_sign(const std::vector<std::size_t>& set, const std::vector<unsigned>& k) {
    unsigned s = 0;
    for (auto a : set) s += k[a];
    return s % 2 ? -1 : 1;
}

struct SymmetryResidual {
    Rational lhs;  // (wP)(k, y) = P(w^{-1}k, w^{-1}y)
    Rational rhs;  // prod_{Delta_{w^{-1}}} (-1)^{k_alpha} P(k, y)
    Rational residual() const { return lhs - rhs; }
};

inline SymmetryResidual check_weyl_symmetry(const RootSystem& rs, const std::vector<unsigned>& k, const Vec& y,
                                            const WeylElement& w, unsigned threads = 1) {
    auto winv = inverse_of(rs, w);
    std::vector<unsigned> kk = permute_by_inverse(w, k);  // (w^{-1}k)_alpha = k_{w alpha}
    SymmetryResidual r;
    r.lhs = P_value(rs, kk, act_on_y(winv, y), threads);
    r.rhs = P_value(rs, k, y, threads) * parity_sign(winv.inversions, k);
    return r;
}

// B^{(nu')}_{k}(tau(q) w^{-1} y) on chamber nu, against
// prod_{Delta_{w^{-1}}} (-1)^{(wk)_alpha} B^{(nu)}_{wk}(y)
struct ActionCheck {
    std::size_t nu = 0;
    std::size_t source_nu = 0;  // the chamber nu' holding tau(q) w^{-1} y
    IVec shift;  // q
    int sign = 1;
    MultiPoly lhs, rhs;
    bool holds() const { return lhs == rhs; }
};

inline std::vector<ActionCheck> check_chamber_action(const RootSystem& rs, const ChamberDecomposition& D,
                                                     const WeylElement& w, const std::vector<unsigned>& k,
                                                     unsigned threads = 1) {
    auto winv = inverse_of(rs, w);
    std::vector<unsigned> wk = permute_by_inverse(winv, k);
    std::vector<ChamberPolynomial> source, target;
    for (const auto& c : D.chambers) {
        source.push_back(bernoulli_polynomial_of(rs, D, k, c.nu, threads));
        target.push_back(bernoulli_polynomial_of(rs, D, wk, c.nu, threads));
    }
    std::vector<ActionCheck> out;
    for (const auto& c : D.chambers) {
        ActionCheck ac;
        ac.nu = c.nu;
        Vec moved = act_on_y(winv, c.sample);
        for (auto& x : moved) {
            Integer f = floor_of(x);
            ac.shift.push_back(-f.get_si());
            x -= Rational(f);
        }
        auto loc = chamber_of(D, moved);
        if (loc.wall) throw std::logic_error("chamber sample mapped onto a wall");
        ac.source_nu = loc.nu;
        std::vector<MultiPoly> images;
        for (std::size_t i = 0; i < rs.r; ++i) {
            MultiPoly img = MultiPoly::constant(rs.r, ac.shift[i]);
            for (std::size_t j = 0; j < rs.r; ++j)
                if (winv.on_coroots[i][j]) img += MultiPoly::variable(rs.r, j) * winv.on_coroots[i][j];
            images.push_back(img);
        }
        ac.lhs = source[loc.nu - 1].B.substitute(images);
        ac.sign = parity_sign(winv.inversions, wk);
        ac.rhs = target[c.nu - 1].B * ac.sign;
        out.push_back(std::move(ac));
    }
    return out;
}

// P(k, y + q) = P(k, y) for q in Q^vee
inline bool check_periodicity(const RootSystem& rs, const std::vector<unsigned>& k, const Vec& y, const IVec& q,
                              unsigned threads = 1) {
    Vec shifted = y;
    for (std::size_t i = 0; i < y.size(); ++i) shifted[i] += q[i];
    return P_value(rs, k, shifted, threads) == P_value(rs, k, y, threads);
}

}  // namespace rootzeta
