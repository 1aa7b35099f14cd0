#pragma once

#include "rootzeta/generating.hpp"
#include "rootzeta/weyl.hpp"

#include <stdexcept>
#include <vector>

namespace rootzeta {

// groups of positive roots sharing a W-orbit (equivalently a length, for irreducible systems)
inline std::vector<std::vector<std::size_t>> length_orbits(const RootSystem& rs) {
    std::vector<Rational> seen;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < rs.n(); ++a) {
        auto it = std::find(seen.begin(), seen.end(), rs.norms[a]);
        if (it == seen.end()) {
            seen.push_back(rs.norms[a]);
            out.push_back({a});
        } else {
            out[static_cast<std::size_t>(it - seen.begin())].push_back(a);
        }
    }
    return out;
}

// zeta_r(2k; Delta) = ((-1)^n/|W|) prod ((2 pi i)^{2k_alpha}/(2k_alpha)!) B_{2k}(Delta),
// with (2 pi i)^{2k} = (-1)^k 2^{2k} pi^{2k}
inline PiValue zeta_even_value(const RootSystem& rs, const std::vector<unsigned>& k, unsigned threads = 1) {
    if (k.size() != rs.n()) throw std::invalid_argument("one exponent per positive root is required");
    for (const auto& orbit : length_orbits(rs))
        for (auto a : orbit)
            if (k[a] != k[orbit[0]]) throw std::invalid_argument("exponents must be constant on root-length orbits");
    std::vector<unsigned> two_k;
    for (auto x : k) {
        if (x == 0) throw std::invalid_argument("exponents must be positive");
        two_k.push_back(2 * x);
    }
    Rational B = bernoulli_number_of(rs, two_k, threads);
    Rational c = Rational(rs.n() % 2 ? -1 : 1) / static_cast<long>(classical_weyl_order(rs.family, rs.r));
    unsigned power = 0;
    for (auto x : k) {
        Integer two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, 2 * x);
        c *= ratio(two * (x % 2 ? -1 : 1), factorial(2 * x));
        power += 2 * x;
    }
    return PiValue(c * B, power);
}

// a single k on every root
inline PiValue witten_special_value(const RootSystem& rs, unsigned k, unsigned threads = 1) {
    return zeta_even_value(rs, std::vector<unsigned>(rs.n(), k), threads);
}

inline PiValue witten_special_value(const RootSystem& rs, const std::vector<unsigned>& k_per_orbit,
                                    unsigned threads = 1) {
    auto orbits = length_orbits(rs);
    if (k_per_orbit.size() != orbits.size()) throw std::invalid_argument("one exponent per length orbit is required");
    std::vector<unsigned> k(rs.n());
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (auto a : orbits[o]) k[a] = k_per_orbit[o];
    return zeta_even_value(rs, k, threads);
}

// s_alpha given directly, all even
inline PiValue mixed_even_value(const RootSystem& rs, const std::vector<unsigned>& s, unsigned threads = 1) {
    std::vector<unsigned> k;
    for (auto x : s) {
        if (x == 0 || x % 2) throw std::invalid_argument("exponents must be even and positive");
        k.push_back(x / 2);
    }
    return zeta_even_value(rs, k, threads);
}

// zeta_W(2k) = K^{2k} zeta_r(2k, ..., 2k)
inline PiValue witten_zeta_value(const RootSystem& rs, unsigned k, unsigned threads = 1) {
    PiValue z = witten_special_value(rs, k, threads);
    Integer K = k_constant(rs), Kp;
    mpz_pow_ui(Kp.get_mpz_t(), K.get_mpz_t(), 2 * k);
    return PiValue(z.coeff * Rational(Kp), z.pi_power);
}

}  // namespace rootzeta
