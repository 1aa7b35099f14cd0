#pragma once

#include "rootzeta/generating.hpp"
#include "rootzeta/weyl.hpp"

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace rootzeta {

// Walls inside the parallelotope: n . y in Z, one primitive n for every hyperplane
// spanned by w(Psi^vee minus alpha_j^vee).  y is in simple-coroot coordinates.
inline std::vector<IVec> wall_normals(const RootSystem& rs) {
    std::set<IVec> found;
    auto W = generate_weyl_group(rs);
    for (const auto& w : W)
        for (std::size_t j = 0; j < rs.r; ++j) {
            std::vector<std::vector<long>> span;
            for (std::size_t i = 0; i < rs.r; ++i) {
                if (i == j) continue;
                IVec e(rs.r, 0);
                e[i] = 1;
                span.push_back(act(w.on_coroots, e));
            }
            found.insert(primitive_normal(span, rs.r));
        }
    return {found.begin(), found.end()};
}

struct Chamber {
    std::size_t nu = 0;  // 1-based
    IVec signature;  // floor(n . y) for each wall normal
    Vec sample;  // an interior point (vertex centroid)
    HPolytope region;
};

struct ChamberDecomposition {
    std::vector<IVec> normals;
    std::vector<Chamber> chambers;  // ordered by descending signature

    std::optional<IVec> signature_of(const Vec& y) const {
        IVec sig;
        for (const auto& n : normals) {
            Rational d = 0;
            for (std::size_t i = 0; i < n.size(); ++i) d += y[i] * n[i];
            if (is_integer(d)) return std::nullopt;
            sig.push_back(floor_of(d).get_si());
        }
        return sig;
    }
};

namespace detail {

inline HPolytope chamber_region(std::size_t r, const std::vector<IVec>& normals, const IVec& sig) {
    HPolytope p = HPolytope::unit_cube(r);
    for (std::size_t k = 0; k < sig.size(); ++k) {
        Vec a(normals[k].begin(), normals[k].end());
        p.add_slab(a, sig[k], sig[k] + 1);
    }
    return p;
}

inline bool full_dimensional(const HPolytope& p, Vec* centroid = nullptr) {
    auto vs = enumerate_vertices(p);
    if (vs.vertices.empty() || affine_hull(vs.vertices).dim != p.dim) return false;
    if (centroid) {
        Vec c(p.dim, 0);
        for (const auto& v : vs.vertices)
            for (std::size_t i = 0; i < p.dim; ++i) c[i] += v[i];
        for (auto& x : c) x /= static_cast<long>(vs.vertices.size());
        *centroid = c;
    }
    return true;
}

}  // namespace detail

inline ChamberDecomposition chamber_decomposition(const RootSystem& rs) {
    ChamberDecomposition D;
    D.normals = wall_normals(rs);
    const std::size_t r = rs.r, K = D.normals.size();
    std::vector<IVec> found;
    IVec sig;
    // depth-first over floor values, pruning regions that are already thin
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == K) {
            found.push_back(sig);
            return;
        }
        long lo = 0, hi = 0;
        for (long x : D.normals[k]) (x < 0 ? lo : hi) += x;
        for (long f = lo; f < hi; ++f) {
            sig.push_back(f);
            std::vector<IVec> partial(D.normals.begin(), D.normals.begin() + static_cast<long>(k) + 1);
            if (detail::full_dimensional(detail::chamber_region(r, partial, sig))) rec(k + 1);
            sig.pop_back();
        }
    };
    rec(0);
    std::sort(found.begin(), found.end(), std::greater<>());
    for (std::size_t i = 0; i < found.size(); ++i) {
        Chamber c;
        c.nu = i + 1;
        c.signature = found[i];
        c.region = detail::chamber_region(r, D.normals, found[i]);
        detail::full_dimensional(c.region, &c.sample);
        D.chambers.push_back(std::move(c));
    }
    return D;
}

struct ChamberLocation {
    bool wall = false;
    std::size_t nu = 0;
};

// y is first reduced mod Q^vee
inline ChamberLocation chamber_of(const ChamberDecomposition& D, const Vec& y) {
    auto sig = D.signature_of(fractional_parts(y));
    if (!sig) return {true, 0};
    for (const auto& c : D.chambers)
        if (c.signature == *sig) return {false, c.nu};
    throw std::logic_error("point outside every chamber");
}

inline ChamberLocation chamber_of(const RootSystem& rs, const Vec& y) {
    return chamber_of(chamber_decomposition(rs), y);
}

struct ChamberPolynomial {
    std::size_t nu = 0;
    std::vector<unsigned> k;
    MultiPoly B;  // B^{(nu)}_k(y), in y_1..y_r
    MultiPoly coefficient;  // B / prod k_alpha!, the coefficient of t^k in F

    Rational operator()(const Vec& y) const { return B.evaluate(y); }
};

// The generating-series pipeline with y kept symbolic on one chamber
inline ChamberPolynomial bernoulli_polynomial_of(const RootSystem& rs, const ChamberDecomposition& D,
                                                 const std::vector<unsigned>& k, std::size_t nu,
                                                 unsigned threads = 1) {
    if (rs.r > 2) throw std::invalid_argument("symbolic-y unsupported for rank above 2");
    if (k.size() != rs.n()) throw std::invalid_argument("exponent vector length must be |Delta_+|");
    if (nu < 1 || nu > D.chambers.size()) throw std::invalid_argument("no such chamber");
    const std::size_t n = rs.n(), N = rs.nonsimple.size();
    unsigned kdeg = 0;
    for (auto x : k) kdeg += x;
    SeriesJob job;
    job.tcaps = k;
    job.ycap = kdeg + static_cast<unsigned>(N);
    job.symbolic = true;
    job.point = D.chambers[nu - 1].sample;
    job.threads = threads;
    auto S = assemble_series(rs, job);

    ChamberPolynomial cp;
    cp.nu = nu;
    cp.k = k;
    cp.coefficient = MultiPoly(rs.r);
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (sgn(S.at(i)) == 0) continue;
        Exponent e = S.exponent(i);
        if (!std::equal(k.begin(), k.end(), e.begin())) continue;
        cp.coefficient.add_term(Exponent(e.begin() + static_cast<long>(n), e.end()), S.at(i));
    }
    cp.B = cp.coefficient * factorial_product(k);
    return cp;
}

inline ChamberPolynomial bernoulli_polynomial_of(const RootSystem& rs, const std::vector<unsigned>& k, std::size_t nu,
                                                 unsigned threads = 1) {
    return bernoulli_polynomial_of(rs, chamber_decomposition(rs), k, nu, threads);
}

}  // namespace rootzeta
