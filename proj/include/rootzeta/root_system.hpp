#pragma once

#include "rootzeta/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootzeta {

struct UnsupportedType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using IVec = std::vector<long>;
using IMatrix = std::vector<IVec>;

// Cartan convention A_ij = <alpha_i^vee, alpha_j>
struct RootSystem {
    std::string label;
    char family = 'A';
    std::size_t r = 0;
    IMatrix cartan;
    std::vector<IVec> roots;    // positive roots, simple-root coordinates, canonical order
    std::vector<IVec> coroots;  // the matching coroots in simple-coroot coordinates
    std::vector<Rational> norms;  // squared lengths, shortest root has length 1
    std::vector<Rational> rho_pair;  // <rho^vee, lambda_i>
    std::vector<std::size_t> simple;  // simple[i] = index of alpha_i in roots
    std::vector<std::size_t> nonsimple;  // the remaining indices, ascending
    std::map<IVec, std::size_t> index;

    std::size_t n() const { return roots.size(); }
    std::size_t rank() const { return r; }

    // <alpha^vee, lambda_i>
    long pair(std::size_t a, std::size_t i) const { return coroots[a][i]; }

    // 2<rho^vee, lambda_i>, the number of box layers along i
    long two_rho(std::size_t i) const { return Rational(2 * rho_pair[i]).get_num().get_si(); }

    bool is_simple(std::size_t a) const { return std::find(simple.begin(), simple.end(), a) != simple.end(); }

    long height(std::size_t a) const {
        long h = 0;
        for (long c : roots[a]) h += c;
        return h;
    }

    // +-(index+1) for a root given in simple-root coordinates, 0 if not a root
    long signed_index(const IVec& v) const {
        if (auto it = index.find(v); it != index.end()) return static_cast<long>(it->second) + 1;
        IVec neg(v);
        for (auto& x : neg) x = -x;
        if (auto it = index.find(neg); it != index.end()) return -static_cast<long>(it->second) - 1;
        return 0;
    }
};

inline IMatrix cartan_matrix(char family, std::size_t r) {
    IMatrix a(r, IVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    switch (family) {
        case 'A':
            for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case 'B':
            for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            a[r - 1][r - 2] = -2;  // alpha_r short
            break;
        case 'C':
            for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
            a[r - 2][r - 1] = -2;  // alpha_r long
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            break;
        case 'G':
            a[0][1] = -3;  // alpha_1 short
            a[1][0] = -1;
            break;
        default:
            throw UnsupportedType("unsupported family");
    }
    return a;
}

inline RootSystem build_root_system(const std::string& label) {
    static const std::vector<std::string> supported = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                                       "C2", "C3", "C4", "D3", "D4", "G2"};
    if (std::find(supported.begin(), supported.end(), label) == supported.end())
        throw UnsupportedType("unsupported type: " + label);

    RootSystem rs;
    rs.label = label;
    rs.family = label[0];
    rs.r = static_cast<std::size_t>(label[1] - '0');
    const std::size_t r = rs.r;
    rs.cartan = label == "D3" ? cartan_matrix('A', 3) : cartan_matrix(rs.family, r);
    const IMatrix& A = rs.cartan;

    // simple root lengths along the Dynkin graph: |a_j|^2 A_ji = |a_i|^2 A_ij
    std::vector<Rational> len(r, 0);
    len[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (len[i] != 0 && len[j] == 0 && A[i][j] != 0) {
                    len[j] = len[i] * A[i][j] / A[j][i];
                    changed = true;
                }
    }
    Rational shortest = *std::min_element(len.begin(), len.end());
    for (auto& l : len) l /= shortest;

    // positive roots by alpha_i-strings, level by level
    std::vector<IVec> roots;
    std::map<IVec, bool> seen;
    std::vector<IVec> level;
    for (std::size_t i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        level.push_back(e);
        seen[e] = true;
    }
    while (!level.empty()) {
        roots.insert(roots.end(), level.begin(), level.end());
        std::vector<IVec> next;
        for (const auto& b : level)
            for (std::size_t i = 0; i < r; ++i) {
                long p = 0;
                for (IVec d = b;;) {
                    d[i] -= 1;
                    if (!seen.count(d)) break;
                    ++p;
                }
                long q = p;
                for (std::size_t j = 0; j < r; ++j) q -= A[i][j] * b[j];
                if (q <= 0) continue;
                IVec c = b;
                c[i] += 1;
                if (!seen.count(c)) {
                    seen[c] = true;
                    next.push_back(c);
                }
            }
        level = std::move(next);
    }
    std::sort(roots.begin(), roots.end(), [](const IVec& a, const IVec& b) {
        long ha = 0, hb = 0;
        for (long x : a) ha += x;
        for (long x : b) hb += x;
        return ha != hb ? ha < hb : a > b;  // alpha_1 before alpha_2 before ...
    });
    rs.roots = roots;

    for (std::size_t a = 0; a < roots.size(); ++a) {
        const IVec& c = roots[a];
        Rational norm = 0;
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) norm += Rational(c[j] * c[k] * A[j][k]) * len[j] / 2;
        rs.norms.push_back(norm);
        IVec co(r);
        for (std::size_t j = 0; j < r; ++j) {
            Rational x = Rational(c[j]) * len[j] / norm;
            if (!is_integer(x)) throw std::logic_error("non-integral coroot");
            co[j] = x.get_num().get_si();
        }
        rs.coroots.push_back(co);
        rs.index[c] = a;
    }
    for (std::size_t i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        rs.simple.push_back(rs.index.at(e));
    }
    for (std::size_t a = 0; a < rs.n(); ++a)
        if (!rs.is_simple(a)) rs.nonsimple.push_back(a);
    rs.rho_pair.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t a = 0; a < rs.n(); ++a) rs.rho_pair[i] += rs.pair(a, i);
        rs.rho_pair[i] /= 2;
    }
    return rs;
}

inline std::size_t classical_root_count(char family, std::size_t r) {
    switch (family) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'G': return 6;
    }
    return 0;
}

// K = prod_alpha <alpha^vee, lambda_1 + ... + lambda_r>
inline Integer k_constant(const RootSystem& rs) {
    Integer k = 1;
    for (std::size_t a = 0; a < rs.n(); ++a) {
        long s = 0;
        for (std::size_t i = 0; i < rs.r; ++i) s += rs.pair(a, i);
        k *= s;
    }
    return k;
}

}  // namespace rootzeta
