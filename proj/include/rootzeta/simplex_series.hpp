#pragma once

#include "rootzeta/multipoly.hpp"
#include "rootzeta/polytope.hpp"

#include <cmath>
#include <vector>

namespace rootzeta {

// integral over the simplex of exp(sum_c x_c * forms[c]) as a truncated series:
// Vol * sum_k N!/(N+k)! h_k(a.p_0, ..., a.p_N), with a.p_j linear in the ring variables
inline MultiPoly simplex_exp_series(const Simplex& s, const std::vector<MultiPoly>& forms, const Truncation& trunc) {
    const std::size_t N = s.vertices.size() - 1;
    if (forms.size() != (s.vertices.empty() ? 0 : s.vertices[0].size()))
        throw std::invalid_argument("one form per coordinate is required");
    const std::size_t V = forms.empty() ? trunc.caps.size() : forms[0].arity();
    if (!trunc.bounded(V)) throw std::invalid_argument("simplex series needs a bounded truncation");
    unsigned maxdeg = 0;
    if (trunc.total) maxdeg = *trunc.total;
    else
        for (std::size_t v = 0; v < V; ++v) maxdeg += trunc.cap(v);

    MultiPoly prod = MultiPoly::constant(V, 1, trunc);
    for (const auto& p : s.vertices) {
        MultiPoly z(V, trunc);
        for (std::size_t c = 0; c < p.size(); ++c)
            if (p[c] != 0) z += forms[c] * p[c];
        // 1/(1 - z) truncated
        MultiPoly geo = MultiPoly::constant(V, 1, trunc), pw = geo;
        for (unsigned k = 1; k <= maxdeg; ++k) {
            pw = pw * z;
            if (pw.is_zero()) break;
            geo += pw;
        }
        prod = prod * geo;
    }
    Rational vol = s.vertices[0].empty() ? Rational(1) : simplex_volume(s);
    MultiPoly out(V, trunc);
    Integer nf = factorial(static_cast<unsigned>(N));
    for (const auto& [e, c] : prod.terms()) {
        unsigned k = 0;
        for (auto x : e) k += x;
        out.add_term(e, c * vol * ratio(nf, factorial(static_cast<unsigned>(N + k))));
    }
    return out;
}

// Vol * N! * sum_m e^{a.p_m} / prod_{j != m} a.(p_m - p_j), or the series when two a.p_j nearly collide
inline double simplex_exp_numeric(const Simplex& s, const std::vector<double>& a) {
    const std::size_t N = s.vertices.size() - 1;
    std::vector<double> u(N + 1, 0.0);
    for (std::size_t j = 0; j <= N; ++j)
        for (std::size_t c = 0; c < a.size(); ++c) u[j] += a[c] * s.vertices[j][c].get_d();
    double vol = s.vertices[0].empty() ? 1.0 : simplex_volume(s).get_d();
    double nf = std::tgamma(static_cast<double>(N) + 1);

    bool separated = true;
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = i + 1; j <= N; ++j)
            if (std::abs(u[i] - u[j]) <= 1e-9) separated = false;
    if (separated) {
        double sum = 0;
        for (std::size_t m = 0; m <= N; ++m) {
            double den = 1;
            for (std::size_t j = 0; j <= N; ++j)
                if (j != m) den *= u[m] - u[j];
            sum += std::exp(u[m]) / den;
        }
        return nf * vol * sum;
    }
    // h_k by the prefix recurrence H_j(k) = H_{j-1}(k) + u_j H_j(k-1)
    double sum = 0, coef = 1;  // coef = N!/(N+k)!
    std::vector<double> h(N + 1, 1.0);
    for (unsigned k = 0; k < 400; ++k) {
        if (k > 0) {
            h[0] = h[0] * u[0];
            for (std::size_t j = 1; j <= N; ++j) h[j] = h[j - 1] + u[j] * h[j];
            coef /= static_cast<double>(N + k);
        }
        double term = coef * h[N];
        sum += term;
        if (k > 8 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return vol * sum;
}

}  // namespace rootzeta
