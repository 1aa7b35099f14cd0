#pragma once

#include "rootzeta/multipoly.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace rootzeta {

// B_0..B_upto with t/(e^t - 1) = sum B_k t^k/k!, so B_1 = -1/2.  Akiyama-Tanigawa.
inline std::vector<Rational> bernoulli_numbers(unsigned upto) {
    std::vector<Rational> a(upto + 1), b(upto + 1);
    for (unsigned m = 0; m <= upto; ++m) {
        a[m] = rat(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
        b[m] = a[0];
    }
    // the transform yields B_1 = +1/2
    if (upto >= 1) b[1] = rat(-1, 2);
    return b;
}

inline Rational bernoulli_number(unsigned k) { return bernoulli_numbers(k)[k]; }

// B_k(x) = sum_j C(k,j) B_j x^{k-j}
inline MultiPoly bernoulli_polynomial(unsigned k) {
    MultiPoly p(1);
    auto b = bernoulli_numbers(k);
    for (unsigned j = 0; j <= k; ++j) p.add_term({k - j}, Rational(binomial(k, j)) * b[j]);
    return p;
}

inline std::vector<Rational> t_over_expm1_coefficients(unsigned cap) {
    auto b = bernoulli_numbers(cap);
    std::vector<Rational> c(cap + 1);
    for (unsigned k = 0; k <= cap; ++k) c[k] = b[k] / Rational(factorial(k));
    return c;
}

inline MultiPoly series_t_over_expm1(unsigned cap) {
    MultiPoly p(1, Truncation::total_degree(cap));
    auto c = t_over_expm1_coefficients(cap);
    for (unsigned k = 0; k <= cap; ++k) p.add_term({k}, c[k]);
    return p;
}

struct LinearForm {
    std::vector<Rational> coeffs;
    Rational constant = 0;
};

// exp(sum c_v t_v), truncated; a nonzero constant would make the result transcendental
inline MultiPoly exp_linear_form(const LinearForm& form, const Truncation& trunc) {
    if (form.constant != 0) throw std::invalid_argument("exp of a form with nonzero constant term");
    const std::size_t V = form.coeffs.size();
    if (!trunc.bounded(V)) throw std::invalid_argument("exp needs a bounded truncation");
    MultiPoly r(V, trunc);
    std::vector<unsigned> bound(V);
    for (std::size_t v = 0; v < V; ++v) {
        bound[v] = trunc.cap(v);
        if (trunc.total) bound[v] = std::min(bound[v], *trunc.total);
        if (form.coeffs[v] == 0) bound[v] = 0;
    }
    // per-variable power tables c^e/e!
    std::vector<std::vector<Rational>> tab(V);
    for (std::size_t v = 0; v < V; ++v) {
        tab[v].push_back(1);
        for (unsigned e = 1; e <= bound[v]; ++e) tab[v].push_back(tab[v].back() * form.coeffs[v] / e);
    }
    Exponent e(V, 0);
    while (true) {
        if (trunc.admits(e)) {
            Rational c = 1;
            for (std::size_t v = 0; v < V; ++v) c *= tab[v][e[v]];
            r.add_term(e, c);
        }
        std::size_t v = 0;
        while (v < V && e[v] == bound[v]) e[v++] = 0;
        if (v == V) break;
        ++e[v];
    }
    return r;
}

// coeff * pi^pi_power
struct PiValue {
    Rational coeff = 0;
    unsigned pi_power = 0;

    PiValue() = default;
    PiValue(Rational c, unsigned p) : coeff(std::move(c)), pi_power(p) {
        if (coeff == 0) pi_power = 0;
    }

    double to_double() const { return coeff.get_d() * std::pow(std::numbers::pi, static_cast<double>(pi_power)); }
    bool operator==(const PiValue&) const = default;
};

}  // namespace rootzeta

