#pragma once

#include "rootzeta/classical.hpp"
#include "rootzeta/dense_series.hpp"
#include "rootzeta/parallel.hpp"
#include "rootzeta/polytope.hpp"
#include "rootzeta/root_system.hpp"

#include <vector>

namespace rootzeta {

// c0 + sum_i c[i] y_i
struct AffineForm {
    Rational c0 = 0;
    Vec c;

    Rational at(const Vec& y) const {
        Rational v = c0;
        for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * y[i];
        return v;
    }

    void add_scaled(const AffineForm& o, const Rational& s) {
        c0 += s * o.c0;
        if (c.size() < o.c.size()) c.resize(o.c.size(), 0);
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += s * o.c[i];
    }

    MultiPoly to_poly(std::size_t params) const {
        MultiPoly p = MultiPoly::constant(params, c0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            Exponent e(params, 0);
            e[i] = 1;
            p.add_term(e, c[i]);
        }
        return p;
    }
};

struct ParamHalfspace {
    Vec a;
    AffineForm h;
};

// rows a . x >= h(y)
struct ParamPolytope {
    std::size_t dim = 0;
    std::size_t params = 0;
    std::vector<ParamHalfspace> rows;

    HPolytope at(const Vec& y) const {
        HPolytope p;
        p.dim = dim;
        for (const auto& row : rows) p.add(row.a, row.h.at(y));
        return p;
    }
};

inline Vec fractional_parts(const Vec& y) {
    Vec f;
    for (const auto& v : y) f.push_back(frac(v));
    return f;
}

// P_{m,y} in the variables x_alpha, alpha non-simple: 0 <= x <= 1 and
// {y_i}+m_i-1 <= sum_alpha x_alpha <alpha^vee, lambda_i> <= {y_i}+m_i.
// With symbolic = true the {y_i} are the parameters themselves (y inside the open parallelotope).
inline ParamPolytope box_polytope(const RootSystem& rs, const std::vector<long>& m, const Vec& yfrac, bool symbolic) {
    ParamPolytope P;
    const std::size_t N = rs.nonsimple.size();
    P.dim = N;
    P.params = symbolic ? rs.r : 0;
    auto constant = [&](const Rational& v) {
        AffineForm f;
        f.c0 = v;
        f.c.assign(P.params, 0);
        return f;
    };
    for (std::size_t c = 0; c < N; ++c) {
        Vec e(N, 0);
        e[c] = 1;
        P.rows.push_back({e, constant(0)});
        e[c] = -1;
        P.rows.push_back({e, constant(-1)});
    }
    for (std::size_t i = 0; i < rs.r; ++i) {
        Vec a(N), neg(N);
        for (std::size_t c = 0; c < N; ++c) {
            a[c] = rs.pair(rs.nonsimple[c], i);
            neg[c] = -a[c];
        }
        AffineForm lo = constant(symbolic ? Rational(m[i] - 1) : yfrac[i] + m[i] - 1);
        AffineForm hi = constant(symbolic ? Rational(-m[i]) : -(yfrac[i] + m[i]));
        if (symbolic) {
            lo.c[i] = 1;
            hi.c[i] = -1;
        }
        P.rows.push_back({a, lo});
        P.rows.push_back({neg, hi});
    }
    return P;
}

inline std::vector<std::vector<long>> box_indices(const RootSystem& rs) {
    std::vector<std::vector<long>> out;
    std::vector<long> m(rs.r, 0);
    while (true) {
        out.push_back(m);
        std::size_t i = 0;
        while (i < rs.r && m[i] == rs.two_rho(i) - 1) m[i++] = 0;
        if (i == rs.r) break;
        ++m[i];
    }
    return out;
}

struct Box {
    std::vector<long> m;
    HPolytope poly;
    VertexSet verts;
    std::size_t hull_dim = 0;
    bool full = false;  // nonempty interior
};

struct BoxFamily {
    std::string label;
    Vec y;  // reduced mod 1
    std::size_t dim = 0;
    std::vector<Box> boxes;
};

inline BoxFamily build_boxes(const RootSystem& rs, const Vec& y) {
    if (y.size() != rs.r) throw std::invalid_argument("y needs one coordinate per simple root");
    BoxFamily fam;
    fam.label = rs.label;
    fam.y = fractional_parts(y);
    fam.dim = rs.nonsimple.size();
    for (const auto& m : box_indices(rs)) {
        Box b;
        b.m = m;
        b.poly = box_polytope(rs, m, fam.y, false).at({});
        b.verts = enumerate_vertices(b.poly);
        b.hull_dim = affine_hull(b.verts.vertices).dim;
        b.full = !b.verts.vertices.empty() && b.hull_dim == fam.dim;
        fam.boxes.push_back(std::move(b));
    }
    return fam;
}

inline Rational box_volume(const Box& b) {
    if (!b.full) return 0;
    return lattice_volume(face_lattice(b.poly, b.verts));
}

namespace detail {

struct PreparedSimplex {
    std::vector<std::vector<AffineForm>> verts;
    MultiPoly volume;  // polynomial in the parameters
};

// Picks dim independent tight rows at each vertex and re-solves them with the
// parameters kept symbolic; vertices are affine in y on the whole chamber.
inline std::vector<std::vector<AffineForm>> symbolic_vertices(const ParamPolytope& P, const VertexSet& vs) {
    const std::size_t N = P.dim;
    std::vector<std::vector<AffineForm>> out;
    for (std::size_t v = 0; v < vs.vertices.size(); ++v) {
        Matrix rows;
        std::vector<std::size_t> pick;
        for (auto i : vs.active[v].indices()) {
            rows.push_back(P.rows[i].a);
            if (rank(rows) == rows.size()) pick.push_back(i);
            else rows.pop_back();
            if (pick.size() == N) break;
        }
        if (pick.size() != N) throw std::logic_error("vertex without a full set of tight rows");
        auto inv = inverse(rows);
        std::vector<AffineForm> x(N);
        for (std::size_t c = 0; c < N; ++c) {
            x[c].c.assign(P.params, 0);
            for (std::size_t k = 0; k < N; ++k)
                if ((*inv)[c][k] != 0) x[c].add_scaled(P.rows[pick[k]].h, (*inv)[c][k]);
        }
        out.push_back(std::move(x));
    }
    return out;
}

inline MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m, std::size_t params) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(params, 1);
    if (n == 1) return m[0][0];
    MultiPoly det(params);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * poly_determinant(minor, params);
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

// Triangulates P at the sample point and returns its simplices with vertices affine in the parameters.
inline std::vector<PreparedSimplex> prepare_polytope(const ParamPolytope& P, const Vec& sample,
                                                     std::size_t* simplex_count = nullptr) {
    const std::size_t N = P.dim, p = P.params;
    HPolytope H = P.at(sample);
    auto vs = enumerate_vertices(H);
    std::vector<PreparedSimplex> out;
    if (vs.vertices.empty() || affine_hull(vs.vertices).dim != N) return out;
    auto T = triangulate_full_flags(face_lattice(H, vs));
    if (simplex_count) *simplex_count = T.simplices.size();
    auto sym = p ? symbolic_vertices(P, vs) : std::vector<std::vector<AffineForm>>{};
    if (!p)
        for (const auto& v : vs.vertices) {
            std::vector<AffineForm> x(N);
            for (std::size_t c = 0; c < N; ++c) x[c].c0 = v[c];
            sym.push_back(std::move(x));
        }
    Rational nf = Rational(factorial(static_cast<unsigned>(N)));
    for (const auto& s : T.simplices) {
        PreparedSimplex ps;
        for (auto v : s) ps.verts.push_back(sym[v]);
        if (p == 0) {
            ps.volume = MultiPoly::constant(0, N ? simplex_volume(simplex_of(T, &s - T.simplices.data())) : Rational(1));
        } else {
            std::vector<std::vector<MultiPoly>> m(N, std::vector<MultiPoly>(N));
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    AffineForm d = ps.verts[i + 1][j];
                    d.add_scaled(ps.verts[0][j], -1);
                    m[i][j] = d.to_poly(p);
                }
            MultiPoly det = poly_determinant(m, p);
            Rational at = det.evaluate(sample);
            if (at == 0) throw std::logic_error("degenerate simplex at the sample point");
            ps.volume = det * (sgn(at) > 0 ? 1 / nf : -1 / nf);
        }
        out.push_back(std::move(ps));
    }
    return out;
}

// Numeric y: every simplex is scaled so its vertices are integral, the geometric sweeps
// then run over mpz with no gcds, and the per-degree factors Vol N!/(N+d)! D^{-d} are
// brought to one denominator for the whole box.
inline DenseSeries box_series_numeric(const RootSystem& rs, const std::vector<PreparedSimplex>& simplices,
                                      const std::vector<unsigned>& caps, const std::vector<Rational>& moment) {
    const std::size_t n = rs.n(), r = rs.r, N = rs.nonsimple.size(), V = caps.size();
    const std::size_t tdeg = moment.size() - 1;
    std::vector<std::size_t> stride(V);
    std::size_t size = 1;
    for (std::size_t v = 0; v < V; ++v) {
        stride[v] = size;
        size *= caps[v] + 1;
    }
    std::vector<unsigned> degree(size, 0);
    {
        Exponent e(V, 0);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t v = 0; v < n; ++v) degree[i] += e[v];
            for (std::size_t v = 0; v < V; ++v) {
                if (e[v] < caps[v]) {
                    ++e[v];
                    break;
                }
                e[v] = 0;
            }
        }
    }

    // integral vertex forms and rational degree factors
    std::vector<std::vector<std::vector<std::pair<std::size_t, long>>>> forms;
    std::vector<std::vector<Rational>> factors;
    Integer L = 1;
    for (const auto& ps : simplices) {
        Integer D = 1;
        for (const auto& vert : ps.verts)
            for (const auto& f : vert) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), f.c0.get_den_mpz_t());
        std::vector<std::vector<std::pair<std::size_t, long>>> fs;
        for (const auto& vert : ps.verts) {
            std::vector<Rational> coef(n, 0);
            for (std::size_t c = 0; c < N; ++c) {
                const std::size_t alpha = rs.nonsimple[c];
                coef[alpha] += vert[c].c0;
                for (std::size_t i = 0; i < r; ++i) coef[rs.simple[i]] -= vert[c].c0 * rs.pair(alpha, i);
            }
            std::vector<std::pair<std::size_t, long>> z;
            for (std::size_t v = 0; v < n; ++v) {
                Rational s = coef[v] * D;
                if (s == 0 || caps[v] == 0) continue;
                if (!s.get_num().fits_slong_p()) throw std::overflow_error("vertex scaling overflow");
                z.emplace_back(v, s.get_num().get_si());
            }
            fs.push_back(std::move(z));
        }
        forms.push_back(std::move(fs));
        std::vector<Rational> fac(tdeg + 1);
        Rational vol = ps.volume.coefficient({});
        Integer Dp = 1;
        for (std::size_t d = 0; d <= tdeg; ++d) {
            fac[d] = vol * moment[d] / Rational(Dp);
            fac[d].canonicalize();
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), fac[d].get_den_mpz_t());
            Dp *= D;
        }
        factors.push_back(std::move(fac));
    }

    std::vector<mpz_class> acc(size), buf(size);
    std::vector<mpz_class> F(tdeg + 1);
    Exponent e(V);
    for (std::size_t s = 0; s < simplices.size(); ++s) {
        for (std::size_t d = 0; d <= tdeg; ++d) F[d] = factors[s][d].get_num() * (L / factors[s][d].get_den());
        for (auto& x : buf) x = 0;
        buf[0] = 1;
        for (const auto& z : forms[s]) {
            std::fill(e.begin(), e.end(), 0u);
            for (std::size_t i = 0; i < size; ++i) {
                for (const auto& [v, c] : z) {
                    if (!e[v]) continue;
                    const mpz_class& src = buf[i - stride[v]];
                    if (mpz_sgn(src.get_mpz_t()) == 0) continue;
                    if (c > 0)
                        mpz_addmul_ui(buf[i].get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(c));
                    else
                        mpz_submul_ui(buf[i].get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-c));
                }
                for (std::size_t v = 0; v < V; ++v) {
                    if (e[v] < caps[v]) {
                        ++e[v];
                        break;
                    }
                    e[v] = 0;
                }
            }
        }
        for (std::size_t i = 0; i < size; ++i)
            if (mpz_sgn(buf[i].get_mpz_t()) != 0)
                mpz_addmul(acc[i].get_mpz_t(), F[degree[i]].get_mpz_t(), buf[i].get_mpz_t());
    }
    DenseSeries out(caps);
    for (std::size_t i = 0; i < size; ++i)
        if (mpz_sgn(acc[i].get_mpz_t()) != 0) out.at(i) = ratio(Integer(acc[i]), L);
    return out;
}

}  // namespace detail

// Assembles prod t/(e^t-1) * sum_m exp(sum_i t_{alpha_i}(y_i+m_i)) * int_{P_m} exp(sum t*_alpha x_alpha)
// in the dense ring with variables t_1..t_n followed by the parameters.
struct SeriesJob {
    std::vector<unsigned> tcaps;
    unsigned ycap = 0;  // per-parameter degree cap in the symbolic case
    bool symbolic = false;
    Vec point;  // reduced y (numeric) or a chamber sample point (symbolic)
    unsigned threads = 1;
    std::size_t* simplex_total = nullptr;
    bool integer_kernel = true;  // numeric y only; false keeps every sweep in Q
};

inline DenseSeries assemble_series(const RootSystem& rs, const SeriesJob& job) {
    const std::size_t n = rs.n(), r = rs.r, N = rs.nonsimple.size();
    const std::size_t p = job.symbolic ? r : 0;
    if (job.tcaps.size() != n) throw std::invalid_argument("one cap per positive root is required");
    std::vector<unsigned> caps = job.tcaps;
    for (std::size_t i = 0; i < p; ++i) caps.push_back(job.ycap);
    const std::size_t V = caps.size();
    const Vec yfrac = job.symbolic ? Vec(r, 0) : fractional_parts(job.point);
    const Vec sample = job.symbolic ? job.point : Vec{};

    unsigned tdeg = 0;
    for (auto c : job.tcaps) tdeg += c;
    std::vector<Rational> moment(tdeg + 1);
    for (unsigned k = 0; k <= tdeg; ++k)
        moment[k] = ratio(factorial(static_cast<unsigned>(N)), factorial(static_cast<unsigned>(N + k)));

    auto indices = box_indices(rs);
    unsigned T = std::max(1u, std::min<unsigned>(resolve_threads(job.threads), static_cast<unsigned>(indices.size())));
    std::vector<DenseSeries> acc(T, DenseSeries(caps));
    std::vector<std::size_t> counts(indices.size(), 0);

    parallel_for(indices.size(), T, [&](std::size_t b, unsigned w) {
        const auto& m = indices[b];
        auto P = box_polytope(rs, m, yfrac, job.symbolic);
        auto simplices = detail::prepare_polytope(P, sample, &counts[b]);
        if (simplices.empty()) return;
        DenseSeries box(caps), s(caps);
        const bool fast = p == 0 && job.integer_kernel;
        if (fast) box = detail::box_series_numeric(rs, simplices, caps, moment);
        for (const auto& ps : fast ? std::vector<detail::PreparedSimplex>{} : simplices) {
            s = DenseSeries::one(caps);
            for (const auto& vert : ps.verts) {
                MultiPoly z(V);
                for (std::size_t c = 0; c < N; ++c) {
                    const AffineForm& f = vert[c];
                    const std::size_t alpha = rs.nonsimple[c];
                    // t*_alpha = t_alpha - sum_i <alpha^vee, lambda_i> t_{alpha_i}
                    std::vector<std::pair<std::size_t, long>> star{{alpha, 1}};
                    for (std::size_t i = 0; i < r; ++i)
                        if (rs.pair(alpha, i)) star.emplace_back(rs.simple[i], -rs.pair(alpha, i));
                    for (const auto& [v, w8] : star) {
                        Exponent e(V, 0);
                        e[v] = 1;
                        z.add_term(e, f.c0 * w8);
                        for (std::size_t i = 0; i < p; ++i) {
                            if (f.c[i] == 0) continue;
                            Exponent ey = e;
                            ey[n + i] = 1;
                            z.add_term(ey, f.c[i] * w8);
                        }
                    }
                }
                s.divide_one_minus(s.terms_of(z));
            }
            s.scale_by_degree(n, moment);
            if (p == 0) {
                s.scale(ps.volume.coefficient({}));
                box += s;
            } else {
                MultiPoly vol(V);
                for (const auto& [e, c] : ps.volume.terms()) {
                    Exponent f(V, 0);
                    for (std::size_t i = 0; i < p; ++i) f[n + i] = e[i];
                    vol.add_term(f, c);
                }
                box += s.times(vol);
            }
        }
        // exp(sum_i t_{alpha_i}({y_i} + m_i))
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t v = rs.simple[i];
            Rational shift = yfrac[i] + m[i];
            std::vector<Rational> ex(caps[v] + 1);
            ex[0] = 1;
            for (unsigned j = 1; j <= caps[v]; ++j) ex[j] = ex[j - 1] * shift / j;
            box = box.times_univariate(v, ex);
            if (p) {
                MultiPoly ey(V);
                Rational c = 1;
                for (unsigned j = 0; j <= std::min(caps[v], job.ycap); ++j) {
                    Exponent e(V, 0);
                    e[v] = j;
                    e[n + i] = j;
                    ey.add_term(e, c);
                    c /= j + 1;
                }
                box = box.times(ey);
            }
        }
        acc[w] += box;
    });

    DenseSeries G = std::move(acc[0]);
    for (unsigned w = 1; w < T; ++w) G += acc[w];
    for (std::size_t v = 0; v < n; ++v) G = G.times_univariate(v, t_over_expm1_coefficients(job.tcaps[v]));
    if (job.simplex_total) {
        *job.simplex_total = 0;
        for (auto c : counts) *job.simplex_total += c;
    }
    return G;
}

struct GenSeries {
    MultiPoly series;  // over t_alpha, canonical root order
    std::vector<unsigned> caps;
    Vec y;

    Rational coefficient(const Exponent& k) const { return series.coefficient(k); }
};

inline GenSeries generating_series(const RootSystem& rs, const Vec& y, const std::vector<unsigned>& caps,
                                   unsigned threads = 1) {
    if (y.size() != rs.r) throw std::invalid_argument("y needs one coordinate per simple root");
    SeriesJob job;
    job.tcaps = caps;
    job.point = fractional_parts(y);
    job.threads = threads;
    GenSeries g;
    g.series = assemble_series(rs, job).to_multipoly();
    g.caps = caps;
    g.y = job.point;
    return g;
}

inline Rational factorial_product(const std::vector<unsigned>& k) {
    Integer f = 1;
    for (auto x : k) f *= factorial(x);
    return Rational(f);
}

// P(k, y) = (prod k_alpha!) [t^k] F(t, y)
inline Rational P_value(const RootSystem& rs, const std::vector<unsigned>& k, const Vec& y, unsigned threads = 1) {
    if (k.size() != rs.n()) throw std::invalid_argument("exponent vector length must be |Delta_+|");
    SeriesJob job;
    job.tcaps = k;
    job.point = fractional_parts(y);
    job.threads = threads;
    auto F = assemble_series(rs, job);
    return F.at(F.index(k)) * factorial_product(k);
}

inline Rational bernoulli_number_of(const RootSystem& rs, const std::vector<unsigned>& k, unsigned threads = 1) {
    return P_value(rs, k, Vec(rs.r, 0), threads);
}

// number of full-flag simplices over all boxes at y
inline std::size_t simplex_count(const RootSystem& rs, const Vec& y) {
    std::size_t total = 0;
    for (const auto& m : box_indices(rs)) {
        std::size_t c = 0;
        detail::prepare_polytope(box_polytope(rs, m, fractional_parts(y), false), {}, &c);
        total += c;
    }
    return total;
}

}  // namespace rootzeta
