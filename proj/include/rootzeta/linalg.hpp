#pragma once

#include "rootzeta/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rootzeta {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

// Bareiss elimination after clearing each row's denominators
inline Rational determinant(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
        scale /= Rational(l);
    }
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return scale * Rational(a[n - 1][n - 1]) * s;
}

struct Elimination {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

inline Elimination row_reduce(Matrix m) {
    Elimination e;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rref = std::move(m);
    return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

// unique solution of a square system, or nothing when singular
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    const std::size_t n = a.size();
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto e = row_reduce(std::move(aug));
    if (e.pivots.size() != n || (n && e.pivots.back() != n - 1)) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e.rref[i][n];
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
    }
    auto e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || (n && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rref[i][n + j];
    return inv;
}

// primitive integer vector orthogonal to d-1 independent integer vectors in dimension d
inline std::vector<long> primitive_normal(const std::vector<std::vector<long>>& vs, std::size_t d) {
    std::vector<Integer> n(d);
    for (std::size_t c = 0; c < d; ++c) {
        Matrix minor;
        for (const auto& v : vs) {
            Vec row;
            for (std::size_t j = 0; j < d; ++j)
                if (j != c) row.push_back(v[j]);
            minor.push_back(row);
        }
        Rational det = determinant(minor);
        n[c] = det.get_num() * ((c % 2) ? -1 : 1);
    }
    Integer g = 0;
    for (const auto& x : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<long> out(d, 0);
    if (g == 0) return out;
    for (std::size_t c = 0; c < d; ++c) out[c] = Integer(n[c] / g).get_si();
    // first nonzero entry positive
    for (long x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

}  // namespace rootzeta
