#pragma once

#include "rootzeta/classical.hpp"
#include "rootzeta/polytope.hpp"
#include "rootzeta/root_system.hpp"

#include <vector>

namespace rootzeta {

// Integral of a polynomial over a simplex via barycentric coordinates:
// int lambda^a = N! Vol prod a_j! / (N + |a|)!
inline Rational integrate_over_simplex(const MultiPoly& f, const Simplex& s) {
    const std::size_t N = s.vertices.size() - 1;
    if (N == 0) return f.evaluate({});
    std::vector<MultiPoly> images;
    for (std::size_t c = 0; c < N; ++c) {
        MultiPoly x(N + 1);
        for (std::size_t j = 0; j <= N; ++j) {
            Exponent e(N + 1, 0);
            e[j] = 1;
            x.add_term(e, s.vertices[j][c]);
        }
        images.push_back(x);
    }
    MultiPoly g = f.substitute(images);
    Rational vol = simplex_volume(s);
    Rational nf = Rational(factorial(static_cast<unsigned>(N)));
    Rational total = 0;
    for (const auto& [e, c] : g.terms()) {
        Integer num = 1;
        unsigned deg = 0;
        for (auto x : e) {
            num *= factorial(x);
            deg += x;
        }
        total += c * ratio(num, factorial(static_cast<unsigned>(N + deg)));
    }
    return total * vol * nf;
}

// P(k, y) straight from its defining integral over the unit cube: the cube is cut
// where y_i - sum_alpha x_alpha <alpha^vee, lambda_i> crosses an integer, and on each
// piece the periodic Bernoulli factors are ordinary polynomials.
inline Rational P_value_direct(const RootSystem& rs, const std::vector<unsigned>& k, const Vec& y) {
    const std::size_t N = rs.nonsimple.size(), r = rs.r;
    std::vector<MultiPoly> bern;
    unsigned kmax = 0;
    for (auto x : k) kmax = std::max(kmax, x);
    for (unsigned d = 0; d <= kmax; ++d) bern.push_back(bernoulli_polynomial(d));

    MultiPoly cube_part = MultiPoly::constant(N, 1);
    for (std::size_t c = 0; c < N; ++c) {
        MultiPoly xc = MultiPoly::variable(N, c);
        cube_part = cube_part * bern[k[rs.nonsimple[c]]].substitute({xc});
    }

    std::vector<long> lo(r), hi(r);
    for (std::size_t i = 0; i < r; ++i) {
        hi[i] = floor_of(y[i]).get_si();
        lo[i] = hi[i] - rs.two_rho(i);
    }
    std::vector<long> j = lo;
    Rational total = 0;
    while (true) {
        HPolytope P = HPolytope::unit_cube(N);
        MultiPoly f = cube_part;
        for (std::size_t i = 0; i < r; ++i) {
            Vec a(N);
            for (std::size_t c = 0; c < N; ++c) a[c] = rs.pair(rs.nonsimple[c], i);
            // y_i - j_i - 1 <= sum <= y_i - j_i, so the fractional part is y_i - j_i - sum
            P.add_slab(a, y[i] - j[i] - 1, y[i] - j[i]);
            MultiPoly arg = MultiPoly::constant(N, y[i] - j[i]);
            for (std::size_t c = 0; c < N; ++c) arg -= MultiPoly::variable(N, c) * a[c];
            f = f * bern[k[rs.simple[i]]].substitute({arg});
        }
        auto vs = enumerate_vertices(P);
        if (!vs.vertices.empty() && affine_hull(vs.vertices).dim == N) {
            auto T = triangulate_full_flags(face_lattice(P, vs));
            for (std::size_t s = 0; s < T.simplices.size(); ++s) total += integrate_over_simplex(f, simplex_of(T, s));
        }
        std::size_t i = 0;
        while (i < r && j[i] == hi[i]) j[i] = lo[i], ++i;
        if (i == r) break;
        ++j[i];
    }
    return total;
}

}  // namespace rootzeta
