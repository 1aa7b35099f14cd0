#pragma once

#include "rootzeta/parallel.hpp"
#include "rootzeta/root_system.hpp"
#include "rootzeta/symmetry.hpp"
#include "rootzeta/weyl.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace rootzeta {

using Complex = std::complex<double>;

// Neumaier's variant of compensated summation
struct CompensatedSum {
    double sum = 0, comp = 0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct ComplexSum {
    CompensatedSum re, im;
    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

struct NumericSum {
    Complex value;
    long M = 0;
    double tail = 0;  // estimated omitted terms plus a rounding allowance, never negative
};

namespace detail {

struct PowerTable {
    std::vector<Complex> s;
    std::vector<long> integral;  // s_alpha when it is a real integer, else a sentinel
    static constexpr long kNotIntegral = std::numeric_limits<long>::min();

    explicit PowerTable(const std::vector<Complex>& exps) : s(exps) {
        for (auto z : exps) {
            double re = z.real();
            bool ok = z.imag() == 0 && std::abs(re) < 1e6 && re == std::round(re);
            integral.push_back(ok ? static_cast<long>(re) : kNotIntegral);
        }
    }

    static double int_power(double x, long e) {
        bool inv = e < 0;
        unsigned long u = static_cast<unsigned long>(inv ? -e : e);
        double r = 1, b = x;
        while (u) {
            if (u & 1) r *= b;
            b *= b;
            u >>= 1;
        }
        return inv ? 1 / r : r;
    }

    // p^{-s_alpha}; negative p with integer s uses (-1)^s |p|^{-s}, otherwise the principal branch
    Complex term(std::size_t a, long p) const {
        if (integral[a] != kNotIntegral) {
            double v = int_power(static_cast<double>(p), -integral[a]);
            return {v, 0};
        }
        return std::pow(Complex(static_cast<double>(p), 0), -s[a]);
    }
};

// every m with max |m_i| = K inside the allowed coordinate ranges; the last coordinate
// only takes the values +-K unless an earlier one already reached the shell
template <class Fn>
void for_shell(std::size_t r, long K, const std::vector<long>& lo, Fn fn) {
    std::vector<long> m(r);
    auto rec = [&](auto& self, std::size_t i, bool hit) -> void {
        if (i == r) {
            if (hit) fn(m);
            return;
        }
        long from = std::max(lo[i], -K);
        if (i + 1 == r && !hit) {
            if (-K >= from && K != 0) {
                m[i] = -K;
                fn(m);
            }
            if (K >= from) {
                m[i] = K;
                fn(m);
            }
            return;
        }
        for (long v = from; v <= K; ++v) {
            m[i] = v;
            self(self, i + 1, hit || v == K || v == -K);
        }
    };
    rec(rec, 0, false);
}

// Sums the lattice over max-norm shells 1..M (or 0..M), one compensated sum per shell,
// then combines shells in order so the result is independent of the thread count.
// The tail is extrapolated from the absolute shell masses, assuming they decay like K^{-q}:
// sum_{K>M} A(K) ~ A(M) M/(q-1), doubled for safety. Each term is a product of `factors`
// powers, so 8 * factors * eps * sum |terms| is added for rounding.
template <class Term>
NumericSum shell_sum(std::size_t r, long M, const std::vector<long>& lo, long first, std::size_t factors,
                     unsigned threads, Term term) {
    if (M < first) throw std::invalid_argument("truncation M too small");
    std::size_t count = static_cast<std::size_t>(M - first + 1);
    std::vector<Complex> shells(count);
    std::vector<double> mass(count);
    parallel_for(count, threads, [&](std::size_t k, unsigned) {
        ComplexSum s;
        CompensatedSum a;
        for_shell(r, first + static_cast<long>(k), lo, [&](const std::vector<long>& m) {
            Complex z = term(m);
            s.add(z);
            a.add(std::abs(z));
        });
        shells[k] = s.value();
        mass[k] = a.value();
    });
    ComplexSum total;
    for (auto z : shells) total.add(z);
    NumericSum out;
    out.value = total.value();
    out.M = M;
    CompensatedSum all;
    for (auto a : mass) all.add(a);
    double rounding = 8.0 * static_cast<double>(std::max<std::size_t>(factors, 1)) *
                      std::numeric_limits<double>::epsilon() * all.value();
    double AM = mass.back();
    long half = std::max(first, M / 2);
    double Ah = mass[static_cast<std::size_t>(half - first)];
    if (AM == 0) {
        out.tail = 0;
    } else if (half == M || Ah <= AM) {
        out.tail = std::numeric_limits<double>::infinity();
    } else {
        double q = std::log(Ah / AM) / std::log(static_cast<double>(M) / static_cast<double>(half));
        out.tail = q > 1 ? 2 * AM * static_cast<double>(M) / (q - 1) : std::numeric_limits<double>::infinity();
    }
    out.tail += rounding;
    return out;
}

inline std::vector<double> to_doubles(const Vec& y) {
    std::vector<double> out;
    for (const auto& v : fractional_parts(y)) out.push_back(v.get_d());
    return out;
}

inline Complex phase(const std::vector<double>& y, const std::vector<long>& m) {
    double x = 0;
    for (std::size_t i = 0; i < y.size(); ++i) x += y[i] * static_cast<double>(m[i]);
    if (x == 0) return {1, 0};
    x -= std::floor(x);
    double a = 2 * std::numbers::pi * x;
    return {std::cos(a), std::sin(a)};
}

}  // namespace detail

// zeta_r(s, y) = sum over m in Z_{>0}^r of e^{2 pi i sum y_i m_i} prod_alpha <alpha^vee, lambda>^{-s_alpha},
// truncated to max m_i <= M
inline NumericSum zeta_numeric(const RootSystem& rs, const std::vector<Complex>& s, const Vec& y, long M,
                               unsigned threads = 1) {
    if (s.size() != rs.n()) throw std::invalid_argument("one exponent per positive root is required");
    if (y.size() != rs.r) throw std::invalid_argument("y must have rank many coordinates");
    detail::PowerTable pw(s);
    auto yd = detail::to_doubles(y);
    std::vector<long> lo(rs.r, 1);
    return detail::shell_sum(rs.r, M, lo, 1, rs.n(), threads, [&](const std::vector<long>& m) {
        Complex z = detail::phase(yd, m);
        for (std::size_t a = 0; a < rs.n(); ++a) {
            long p = 0;
            for (std::size_t i = 0; i < rs.r; ++i) p += rs.pair(a, i) * m[i];
            z *= pw.term(a, p);
        }
        return z;
    });
}

inline std::vector<Complex> complex_exponents(const std::vector<long>& s) {
    return {s.begin(), s.end()};
}

// S(s, y; I) over lambda = sum m_i lambda_i with m_i >= 0 for i in I, m_i free otherwise,
// skipping every lambda orthogonal to some root; truncated to |m_i| <= M
inline NumericSum S_numeric(const RootSystem& rs, const std::vector<Complex>& s, const Vec& y,
                            const std::vector<std::size_t>& I, long M, unsigned threads = 1) {
    if (s.size() != rs.n()) throw std::invalid_argument("one exponent per positive root is required");
    if (y.size() != rs.r) throw std::invalid_argument("y must have rank many coordinates");
    detail::PowerTable pw(s);
    auto yd = detail::to_doubles(y);
    std::vector<long> lo(rs.r, -M);
    for (auto i : I) {
        if (i >= rs.r) throw std::invalid_argument("index set entry out of range");
        lo[i] = 0;
    }
    return detail::shell_sum(rs.r, M, lo, 1, rs.n(), threads, [&](const std::vector<long>& m) {
        Complex z = detail::phase(yd, m);
        for (std::size_t a = 0; a < rs.n(); ++a) {
            long p = 0;
            for (std::size_t i = 0; i < rs.r; ++i) p += rs.pair(a, i) * m[i];
            if (p == 0) return Complex(0, 0);
            z *= pw.term(a, p);
        }
        return z;
    });
}

struct FRResidual {
    NumericSum lhs;
    Complex rhs;
    double rhs_tail = 0;
    std::size_t terms = 0;  // |W^I|
    double residual() const { return std::abs(lhs.value - rhs); }
    double tolerance() const { return lhs.tail + rhs_tail; }
};

// S(s, y; I) = sum_{w in W^I} prod_{Delta_{w^{-1}}} (-1)^{s_alpha} zeta_r(w^{-1}s, w^{-1}y)
inline FRResidual check_FR(const RootSystem& rs, const std::vector<long>& s, const Vec& y,
                           const std::vector<std::size_t>& I, long M, unsigned threads = 1) {
    FRResidual out;
    out.lhs = S_numeric(rs, complex_exponents(s), y, I, M, threads);
    ComplexSum rhs;
    for (const auto& w : minimal_coset_reps(rs, I)) {
        auto winv = inverse_of(rs, w);
        auto ws = permute_by_inverse(w, s);
        long parity = 0;
        for (auto a : winv.inversions) parity += s[a];
        auto z = zeta_numeric(rs, complex_exponents(ws), act_on_y(winv, y), M, threads);
        rhs.add(parity % 2 ? -z.value : z.value);
        out.rhs_tail += z.tail;
        ++out.terms;
    }
    out.rhs = rhs.value();
    return out;
}

// Riemann zeta for real s > 1: direct sum below M, Euler-Maclaurin from M on
inline double riemann_zeta(double s, long M = 1000) {
    CompensatedSum acc;
    for (long n = M - 1; n >= 1; --n) acc.add(std::pow(static_cast<double>(n), -s));
    double m = static_cast<double>(M);
    double f = std::pow(m, -s);
    acc.add(m * f / (s - 1));
    acc.add(f / 2);
    acc.add(s * f / m / 12);
    acc.add(-s * (s + 1) * (s + 2) * f / (m * m * m) / 720);
    acc.add(s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * f / (m * m * m * m * m) / 30240);
    return acc.value();
}

struct MordellResidual {
    double lhs = 0, rhs = 0, tail = 0;
    double residual() const { return std::abs(lhs - rhs); }
    double relative() const { return residual() / std::abs(rhs); }
};

// 2 zeta_2(2,s,2;A2) + zeta_2(2,2,s;A2) = 4 zeta(2) zeta(s+2) - 6 zeta(s+4)
inline MordellResidual check_mordell_relation(long s, long M, unsigned threads = 1) {
    if (s < 2) throw std::invalid_argument("s must be at least 2");
    auto a2 = build_root_system("A2");
    Vec y0(2, 0);
    auto z1 = zeta_numeric(a2, complex_exponents({2, s, 2}), y0, M, threads);
    auto z2 = zeta_numeric(a2, complex_exponents({2, 2, s}), y0, M, threads);
    MordellResidual out;
    out.lhs = 2 * z1.value.real() + z2.value.real();
    double sd = static_cast<double>(s);
    out.rhs = 4 * riemann_zeta(2) * riemann_zeta(sd + 2) - 6 * riemann_zeta(sd + 4);
    out.tail = 2 * z1.tail + z2.tail;
    return out;
}

struct ParityReport {
    bool applicable = false;
    bool stabilizes_s = false, stabilizes_y = false;
    long inversion_sum = 0;
    NumericSum S;
    bool vanishes() const { return std::abs(S.value) <= S.tail; }
};

// S(s, y) = 0 whenever w fixes s and y mod Q^vee and sum_{Delta_{w^{-1}}} s_alpha is odd
inline ParityReport check_parity_vanishing(const RootSystem& rs, const std::vector<long>& s, const Vec& y,
                                           const WeylElement& w, long M, unsigned threads = 1) {
    ParityReport out;
    auto winv = inverse_of(rs, w);
    out.stabilizes_s = permute_by_inverse(winv, s) == s;
    Vec moved = act_on_y(w, y);
    out.stabilizes_y = true;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!is_integer(moved[i] - y[i])) out.stabilizes_y = false;
    for (auto a : winv.inversions) out.inversion_sum += s[a];
    out.applicable = out.stabilizes_s && out.stabilizes_y && out.inversion_sum % 2 != 0;
    if (out.applicable) out.S = S_numeric(rs, complex_exponents(s), y, {}, M, threads);
    return out;
}

}  // namespace rootzeta
