#pragma once

#include "rootzeta/bitset.hpp"
#include "rootzeta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace rootzeta {

// a . x >= h
struct Halfspace {
    Vec a;
    Rational h;
};

struct HPolytope {
    std::size_t dim = 0;
    std::vector<Halfspace> rows;

    void add(Vec a, Rational h) { rows.push_back({std::move(a), std::move(h)}); }

    // lo <= a . x <= hi
    void add_slab(const Vec& a, const Rational& lo, const Rational& hi) {
        add(a, lo);
        Vec neg(a);
        for (auto& x : neg) x = -x;
        add(std::move(neg), -hi);
    }

    bool contains(const Vec& x) const {
        for (const auto& row : rows) {
            Rational s = 0;
            for (std::size_t j = 0; j < dim; ++j) s += row.a[j] * x[j];
            if (s < row.h) return false;
        }
        return true;
    }

    static HPolytope unit_cube(std::size_t d) {
        HPolytope p;
        p.dim = d;
        for (std::size_t j = 0; j < d; ++j) {
            Vec e(d, 0);
            e[j] = 1;
            p.add_slab(e, 0, 1);
        }
        return p;
    }
};

struct VertexSet {
    std::vector<Vec> vertices;  // lexicographic order
    std::vector<DynBitset> active;  // constraints tight at each vertex
};

namespace detail {

inline Rational dot(const Vec& a, const Vec& x) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != 0) s += a[j] * x[j];
    return s;
}

inline bool has_coordinate_bounds(const HPolytope& p) {
    std::vector<int> lo(p.dim, 0), hi(p.dim, 0);
    for (const auto& row : p.rows) {
        std::size_t nz = 0, at = 0;
        for (std::size_t j = 0; j < p.dim; ++j)
            if (row.a[j] != 0) ++nz, at = j;
        if (nz != 1) continue;
        (row.a[at] > 0 ? lo : hi)[at] = 1;
    }
    for (std::size_t j = 0; j < p.dim; ++j)
        if (!lo[j] || !hi[j]) return false;
    return true;
}

// the recession cone {d : A d >= 0} is {0} iff A has full column rank and no
// extreme ray cut out by dim-1 tight rows survives
inline bool is_bounded(const HPolytope& p) {
    if (p.dim == 0 || has_coordinate_bounds(p)) return true;
    Matrix all;
    for (const auto& row : p.rows) all.push_back(row.a);
    if (all.empty() || rank(all) < p.dim) return false;
    const std::size_t m = p.rows.size(), k = p.dim - 1;
    std::vector<std::size_t> pick(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) -> bool {
        if (depth == k) {
            Matrix sub;
            for (auto i : pick) sub.push_back(p.rows[i].a);
            auto e = row_reduce(sub);
            if (e.pivots.size() != k) return true;
            std::size_t free = 0;
            while (std::find(e.pivots.begin(), e.pivots.end(), free) != e.pivots.end()) ++free;
            Vec d(p.dim, 0);
            d[free] = 1;
            for (std::size_t i = 0; i < k; ++i) d[e.pivots[i]] = -e.rref[i][free];
            for (int s : {1, -1}) {
                bool ray = true;
                for (const auto& row : p.rows)
                    if (s * dot(row.a, d) < 0) ray = false;
                if (ray) return false;
            }
            return true;
        }
        for (std::size_t i = from; i < m; ++i) {
            pick[depth] = i;
            if (!rec(depth + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace detail

inline VertexSet vertex_set(const HPolytope& p, std::vector<Vec> verts) {
    VertexSet out;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.vertices = std::move(verts);
    for (const auto& v : out.vertices) {
        DynBitset act(p.rows.size());
        for (std::size_t i = 0; i < p.rows.size(); ++i)
            if (detail::dot(p.rows[i].a, v) == p.rows[i].h) act.set(i);
        out.active.push_back(std::move(act));
    }
    return out;
}

namespace detail {

// rows[i] is 0 <= x_j or x_j <= 1 for some j; every coordinate needs both
inline std::vector<bool> unit_cube_rows(const HPolytope& p) {
    std::vector<bool> cube(p.rows.size(), false);
    std::vector<int> lo(p.dim, 0), hi(p.dim, 0);
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const auto& row = p.rows[i];
        std::size_t nz = 0, at = 0;
        for (std::size_t j = 0; j < p.dim; ++j)
            if (row.a[j] != 0) ++nz, at = j;
        if (nz != 1) continue;
        if (row.a[at] == 1 && row.h == 0) cube[i] = true, lo[at] = 1;
        if (row.a[at] == -1 && row.h == -1) cube[i] = true, hi[at] = 1;
    }
    for (std::size_t j = 0; j < p.dim; ++j)
        if (!lo[j] || !hi[j]) return {};
    return cube;
}

}  // namespace detail

// Vertices of a polytope inside the unit cube.  At a vertex x the coordinates strictly
// between 0 and 1 form a set F, and some |F| of the non-cube rows are tight there and
// independent on F, so |F| never exceeds their rank.  Coordinates are set to 0, 1 or
// free depth first, pruned as soon as a row can no longer be met; at a leaf every
// choice of |F| rows from distinct parallel classes is solved for x_F.
inline VertexSet enumerate_vertices_in_cube(const HPolytope& p, const std::vector<bool>& cube) {
    const std::size_t N = p.dim;
    std::vector<std::size_t> extra;
    for (std::size_t i = 0; i < p.rows.size(); ++i)
        if (!cube[i]) extra.push_back(i);
    const std::size_t K = extra.size();
    Matrix E;
    for (auto i : extra) E.push_back(p.rows[i].a);
    const std::size_t smax = K ? rank(E) : 0;

    // rows sharing a direction up to sign cannot be tight together at a vertex
    std::vector<std::size_t> cls(K);
    for (std::size_t e = 0; e < K; ++e) {
        cls[e] = e;
        for (std::size_t f = 0; f < e; ++f)
            if (rank(Matrix{E[e], E[f]}) == 1) {
                cls[e] = cls[f];
                break;
            }
    }

    std::vector<std::vector<double>> A(K, std::vector<double>(N));
    std::vector<double> H(K), tol(K);
    std::vector<std::vector<double>> suffix(K, std::vector<double>(N + 1, 0));
    for (std::size_t e = 0; e < K; ++e) {
        double s = std::abs(p.rows[extra[e]].h.get_d());
        for (std::size_t j = 0; j < N; ++j) {
            A[e][j] = p.rows[extra[e]].a[j].get_d();
            s += std::abs(A[e][j]);
        }
        H[e] = p.rows[extra[e]].h.get_d();
        tol[e] = 1e-9 * (1 + s);
        for (std::size_t j = N; j-- > 0;) suffix[e][j] = suffix[e][j + 1] + std::max(0.0, A[e][j]);
    }

    std::vector<int> state(N, 0);  // 0, 1, or 2 for free
    std::vector<double> fixed(K, 0), freemax(K, 0), freemin(K, 0);
    std::vector<std::size_t> free, pick;
    std::vector<Vec> verts;

    auto solve_leaf = [&]() {
        const std::size_t s = free.size();
        std::vector<std::vector<double>> M(s, std::vector<double>(s + 1));
        for (std::size_t k = 0; k < s; ++k) {
            const std::size_t e = pick[k];
            M[k][s] = H[e] - fixed[e];
            for (std::size_t c = 0; c < s; ++c) M[k][c] = A[e][free[c]];
        }
        for (std::size_t c = 0; c < s; ++c) {
            std::size_t best = c;
            for (std::size_t k = c + 1; k < s; ++k)
                if (std::abs(M[k][c]) > std::abs(M[best][c])) best = k;
            if (std::abs(M[best][c]) < 1e-9) return;
            std::swap(M[best], M[c]);
            for (std::size_t k = 0; k < s; ++k) {
                if (k == c || M[k][c] == 0) continue;
                double f = M[k][c] / M[c][c];
                for (std::size_t q = c; q <= s; ++q) M[k][q] -= f * M[c][q];
            }
        }
        std::vector<double> xd(N);
        for (std::size_t j = 0; j < N; ++j) xd[j] = state[j] == 1 ? 1 : 0;
        for (std::size_t c = 0; c < s; ++c) {
            double v = M[c][s] / M[c][c];
            if (v < -1e-9 || v > 1 + 1e-9) return;
            xd[free[c]] = v;
        }
        for (std::size_t e = 0; e < K; ++e) {
            double t = 0;
            for (std::size_t j = 0; j < N; ++j) t += A[e][j] * xd[j];
            if (t < H[e] - tol[e]) return;
        }
        Matrix a(s, Vec(s));
        Vec b(s);
        Vec x(N, 0);
        for (std::size_t j = 0; j < N; ++j)
            if (state[j] == 1) x[j] = 1;
        for (std::size_t k = 0; k < s; ++k) {
            const auto& row = p.rows[extra[pick[k]]];
            b[k] = row.h;
            for (std::size_t j = 0; j < N; ++j)
                if (state[j] == 1) b[k] -= row.a[j];
            for (std::size_t c = 0; c < s; ++c) a[k][c] = row.a[free[c]];
        }
        auto sol = solve(a, b);
        if (!sol) return;
        for (std::size_t c = 0; c < s; ++c) {
            if ((*sol)[c] <= 0 || (*sol)[c] >= 1) return;
            x[free[c]] = (*sol)[c];
        }
        if (p.contains(x)) verts.push_back(std::move(x));
    };

    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
        if (depth == free.size()) {
            solve_leaf();
            return;
        }
        for (std::size_t e = from; e + (free.size() - depth) <= K; ++e) {
            // a tight row must be reachable as an equality
            if (fixed[e] + freemin[e] > H[e] + tol[e] || fixed[e] + freemax[e] < H[e] - tol[e]) continue;
            bool clash = false;
            for (std::size_t k = 0; k < depth; ++k)
                if (cls[pick[k]] == cls[e]) clash = true;
            if (clash) continue;
            pick[depth] = e;
            choose(depth + 1, e + 1);
        }
    };

    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        for (std::size_t e = 0; e < K; ++e)
            if (fixed[e] + freemax[e] + suffix[e][j] < H[e] - tol[e]) return;
        if (j == N) {
            if (free.empty()) {
                Vec x(N, 0);
                for (std::size_t c = 0; c < N; ++c)
                    if (state[c] == 1) x[c] = 1;
                if (p.contains(x)) verts.push_back(std::move(x));
                return;
            }
            pick.assign(free.size(), 0);
            choose(0, 0);
            return;
        }
        for (int v : {0, 1, 2}) {
            if (v == 2 && free.size() == smax) continue;
            state[j] = v;
            for (std::size_t e = 0; e < K; ++e) {
                if (v == 1) fixed[e] += A[e][j];
                if (v == 2) freemax[e] += std::max(0.0, A[e][j]), freemin[e] += std::min(0.0, A[e][j]);
            }
            if (v == 2) free.push_back(j);
            rec(j + 1);
            if (v == 2) free.pop_back();
            for (std::size_t e = 0; e < K; ++e) {
                if (v == 1) fixed[e] -= A[e][j];
                if (v == 2) freemax[e] -= std::max(0.0, A[e][j]), freemin[e] -= std::min(0.0, A[e][j]);
            }
        }
        state[j] = 0;
    };
    rec(0);
    return vertex_set(p, std::move(verts));
}

// Every dim-subset of rows with an invertible matrix is a vertex candidate.  The
// subsets are walked depth first with a floating-point echelon form so that
// dependent prefixes are pruned early; surviving candidates are re-solved and
// checked exactly.
inline VertexSet enumerate_vertices_generic(const HPolytope& p) {
    const std::size_t N = p.dim, m = p.rows.size();
    if (!detail::is_bounded(p)) throw std::invalid_argument("polytope is unbounded");
    if (N == 0) {
        std::vector<Vec> verts;
        if (p.contains({})) verts.push_back({});
        return vertex_set(p, std::move(verts));
    }

    std::vector<std::vector<double>> A(m, std::vector<double>(N));
    std::vector<double> H(m), scale(m);
    for (std::size_t i = 0; i < m; ++i) {
        double s = std::abs(p.rows[i].h.get_d());
        for (std::size_t j = 0; j < N; ++j) {
            A[i][j] = p.rows[i].a[j].get_d();
            s += std::abs(A[i][j]);
        }
        H[i] = p.rows[i].h.get_d();
        scale[i] = 1 + s;
    }

    // basis rows stored reduced, with their pivot column and right-hand side
    std::vector<std::vector<double>> basis(N, std::vector<double>(N));
    std::vector<double> rhs(N);
    std::vector<std::size_t> pivot(N), chosen(N);
    std::map<std::vector<long long>, bool> seen;
    std::vector<Vec> verts;
    std::vector<double> x(N);

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
        if (depth == N) {
            for (std::size_t k = N; k-- > 0;) {
                double v = rhs[k];
                for (std::size_t c = 0; c < N; ++c)
                    if (c != pivot[k]) v -= basis[k][c] * x[c];
                x[pivot[k]] = v;
            }
            for (std::size_t i = 0; i < m; ++i) {
                double s = 0;
                for (std::size_t j = 0; j < N; ++j) s += A[i][j] * x[j];
                if (s < H[i] - 1e-7 * scale[i]) return;
            }
            std::vector<long long> key(N);
            for (std::size_t j = 0; j < N; ++j) key[j] = std::llround(x[j] * 1e6);
            if (seen.count(key)) return;
            Matrix a;
            Vec b;
            for (auto i : chosen) {
                a.push_back(p.rows[i].a);
                b.push_back(p.rows[i].h);
            }
            auto sol = solve(a, b);
            if (!sol || !p.contains(*sol)) return;
            seen[key] = true;
            verts.push_back(std::move(*sol));
            return;
        }
        for (std::size_t i = from; i + (N - depth) <= m; ++i) {
            auto& row = basis[depth];
            row = A[i];
            double r = H[i];
            for (std::size_t k = 0; k < depth; ++k) {
                double f = row[pivot[k]];
                if (f == 0) continue;
                for (std::size_t c = 0; c < N; ++c) row[c] -= f * basis[k][c];
                r -= f * rhs[k];
            }
            std::size_t pc = 0;
            for (std::size_t c = 1; c < N; ++c)
                if (std::abs(row[c]) > std::abs(row[pc])) pc = c;
            if (std::abs(row[pc]) < 1e-9 * scale[i]) continue;
            double inv = 1 / row[pc];
            for (auto& v : row) v *= inv;
            row[pc] = 1;
            pivot[depth] = pc;
            rhs[depth] = r * inv;
            chosen[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return vertex_set(p, std::move(verts));
}

inline VertexSet enumerate_vertices(const HPolytope& p) {
    auto cube = detail::unit_cube_rows(p);
    if (p.dim > 0 && !cube.empty()) return enumerate_vertices_in_cube(p, cube);
    return enumerate_vertices_generic(p);
}

// dimension of the affine hull of a point set, and the coordinates on which it projects bijectively
struct AffineHull {
    std::size_t dim = 0;
    std::vector<std::size_t> coords;
};

inline AffineHull affine_hull(const std::vector<Vec>& pts) {
    AffineHull h;
    if (pts.size() <= 1) return h;
    Matrix d;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec row(pts[i].size());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
        d.push_back(std::move(row));
    }
    auto e = row_reduce(d);
    h.dim = e.pivots.size();
    h.coords = e.pivots;
    return h;
}

struct Face {
    DynBitset vertices;
    DynBitset active;  // constraints tight on the whole face
    std::size_t dim = 0;
    std::vector<std::size_t> facets;  // indices of the faces one dimension down
};

struct FaceLattice {
    std::vector<Vec> vertices;
    std::vector<Face> faces;  // faces[0] is the polytope itself
    std::size_t dim = 0;

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f(faces.empty() ? 0 : dim + 1, 0);
        for (const auto& fc : faces) ++f[fc.dim];
        return f;
    }
};

// faces of F are the sets F cap T_j; the inclusion-maximal proper ones are the facets of F
inline FaceLattice face_lattice(const HPolytope& p, const VertexSet& vs) {
    FaceLattice L;
    L.vertices = vs.vertices;
    const std::size_t nv = vs.vertices.size(), m = p.rows.size();
    if (nv == 0) return L;
    std::vector<DynBitset> tight(m, DynBitset(nv));
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t i = 0; i < m; ++i)
            if (vs.active[v].test(i)) tight[i].set(v);

    auto active_of = [&](const DynBitset& verts) {
        DynBitset act(m);
        for (std::size_t i = 0; i < m; ++i)
            if (verts.subset_of(tight[i])) act.set(i);
        return act;
    };

    DynBitset all(nv);
    for (std::size_t v = 0; v < nv; ++v) all.set(v);
    L.dim = affine_hull(vs.vertices).dim;
    L.faces.push_back({all, active_of(all), L.dim, {}});
    std::map<DynBitset, std::size_t> index{{all, 0}};

    for (std::size_t cur = 0; cur < L.faces.size(); ++cur) {
        if (L.faces[cur].dim == 0) continue;
        const DynBitset F = L.faces[cur].vertices;
        std::vector<DynBitset> cand;
        for (std::size_t i = 0; i < m; ++i) {
            if (L.faces[cur].active.test(i)) continue;
            DynBitset g = F & tight[i];
            if (g.none()) continue;
            if (std::find(cand.begin(), cand.end(), g) == cand.end()) cand.push_back(g);
        }
        std::vector<std::size_t> facets;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < cand.size() && maximal; ++b)
                if (a != b && cand[a].subset_of(cand[b]) && !(cand[a] == cand[b])) maximal = false;
            if (!maximal) continue;
            auto [it, fresh] = index.try_emplace(cand[a], L.faces.size());
            if (fresh) L.faces.push_back({cand[a], active_of(cand[a]), L.faces[cur].dim - 1, {}});
            facets.push_back(it->second);
        }
        L.faces[cur].facets = std::move(facets);
    }
    return L;
}

struct Triangulation {
    std::vector<Vec> vertices;
    std::vector<std::vector<std::size_t>> simplices;  // vertex indices, one per flag level, bottom first
    std::size_t dim = 0;
};

// Full flags F_0 < ... < F_d with N(F_j) not in F_{j-1}; N(F) is the vertex of F that
// comes first under `order` (default: the lexicographic numbering).
inline Triangulation triangulate_full_flags(const FaceLattice& L, const std::vector<std::size_t>& order = {}) {
    Triangulation T;
    T.vertices = L.vertices;
    T.dim = L.dim;
    if (L.faces.empty()) return T;
    const std::size_t nv = L.vertices.size();
    std::vector<std::size_t> rank(nv);
    for (std::size_t v = 0; v < nv; ++v) rank[v] = order.empty() ? v : order[v];
    auto lowest = [&](const DynBitset& b) {
        std::size_t best = nv;
        for (std::size_t v = 0; v < nv; ++v)
            if (b.test(v) && (best == nv || rank[v] < rank[best])) best = v;
        return best;
    };
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
    std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> tri =
        [&](std::size_t f) -> const std::vector<std::vector<std::size_t>>& {
        if (auto it = memo.find(f); it != memo.end()) return it->second;
        const Face& face = L.faces[f];
        std::size_t apex = lowest(face.vertices);
        std::vector<std::vector<std::size_t>> out;
        if (face.dim == 0) {
            out.push_back({apex});
        } else {
            for (auto g : face.facets) {
                if (L.faces[g].vertices.test(apex)) continue;
                for (const auto& s : tri(g)) {
                    auto t = s;
                    t.push_back(apex);
                    out.push_back(std::move(t));
                }
            }
        }
        return memo[f] = std::move(out);
    };
    T.simplices = tri(0);
    return T;
}

struct Simplex {
    std::vector<Vec> vertices;
};

// |det(p_1 - p_0, ..., p_d - p_0)| / d!, in the given coordinates (all when empty)
inline Rational simplex_volume(const Simplex& s, const std::vector<std::size_t>& coords = {}) {
    if (s.vertices.empty()) throw std::invalid_argument("empty simplex");
    const std::size_t d = s.vertices.size() - 1;
    std::vector<std::size_t> cs = coords;
    if (cs.empty())
        for (std::size_t j = 0; j < s.vertices[0].size(); ++j) cs.push_back(j);
    if (cs.size() != d) throw std::invalid_argument("simplex vertex count does not match dimension");
    Matrix m(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = s.vertices[i + 1][cs[j]] - s.vertices[0][cs[j]];
    Rational det = determinant(m);
    if (det == 0) throw std::domain_error("degenerate simplex");
    return abs(det) / Rational(factorial(static_cast<unsigned>(d)));
}

inline Simplex simplex_of(const Triangulation& T, std::size_t k) {
    Simplex s;
    for (auto v : T.simplices[k]) s.vertices.push_back(T.vertices[v]);
    return s;
}

// volume in the affine hull, measured in the projection coordinates of the hull
inline Rational triangulation_volume(const Triangulation& T) {
    if (T.simplices.empty()) return 0;
    auto hull = affine_hull(T.vertices);
    Rational vol = 0;
    for (std::size_t k = 0; k < T.simplices.size(); ++k) vol += simplex_volume(simplex_of(T, k), hull.coords);
    return vol;
}

// The same cone-over-facets recursion as the full-flag triangulation, but summed per face
// instead of per simplex.  Each face keeps its volume in the coordinates where its affine
// hull has reduced-echelon pivots; the cone from apex a over a facet G of a k-face F has
// volume |det(B_G, a - g_0)| Vol(G) / k in the pivot coordinates of F.
inline Rational lattice_volume(const FaceLattice& L, const std::vector<std::size_t>& order = {}) {
    if (L.faces.empty()) return 0;
    const std::size_t nv = L.vertices.size();
    std::vector<std::size_t> rank_of(nv);
    for (std::size_t v = 0; v < nv; ++v) rank_of[v] = order.empty() ? v : order[v];
    struct Hull {
        Matrix basis;  // rref rows
        std::vector<std::size_t> pivots;
        std::size_t origin = 0;
        Rational vol;
    };
    std::vector<Hull> hull(L.faces.size());
    for (std::size_t f = L.faces.size(); f-- > 0;) {
        const Face& face = L.faces[f];
        auto idx = face.vertices.indices();
        Hull& h = hull[f];
        h.origin = idx[0];
        if (face.dim > 0) {
            Matrix d;
            for (std::size_t i = 1; i < idx.size(); ++i) {
                Vec row(L.vertices[idx[i]].size());
                for (std::size_t j = 0; j < row.size(); ++j) row[j] = L.vertices[idx[i]][j] - L.vertices[idx[0]][j];
                d.push_back(std::move(row));
            }
            auto e = row_reduce(d);
            h.pivots = e.pivots;
            h.basis.assign(e.rref.begin(), e.rref.begin() + static_cast<long>(e.pivots.size()));
        }
        if (face.dim == 0) {
            h.vol = 1;
            continue;
        }
        std::size_t apex = idx[0];
        for (auto v : idx)
            if (rank_of[v] < rank_of[apex]) apex = v;
        const std::size_t k = face.dim;
        Rational total = 0;
        for (auto g : face.facets) {
            if (L.faces[g].vertices.test(apex)) continue;
            const Hull& hg = hull[g];
            Matrix m;
            for (const auto& row : hg.basis) {
                Vec r(k);
                for (std::size_t c = 0; c < k; ++c) r[c] = row[h.pivots[c]];
                m.push_back(std::move(r));
            }
            Vec last(k);
            for (std::size_t c = 0; c < k; ++c)
                last[c] = L.vertices[apex][h.pivots[c]] - L.vertices[hg.origin][h.pivots[c]];
            m.push_back(std::move(last));
            total += abs(determinant(m)) * hg.vol;
        }
        h.vol = total / static_cast<long>(k);
    }
    return hull[0].vol;
}

inline Triangulation triangulate(const HPolytope& p) {
    auto vs = enumerate_vertices(p);
    return triangulate_full_flags(face_lattice(p, vs));
}

// shoelace area of a convex polygon given by its vertices in any order
inline Rational polygon_area(std::vector<Vec> pts) {
    if (pts.size() < 3) return 0;
    Rational cx = 0, cy = 0;
    for (const auto& q : pts) cx += q[0], cy += q[1];
    cx /= static_cast<long>(pts.size());
    cy /= static_cast<long>(pts.size());
    auto angle = [&](const Vec& q) { return std::atan2(Rational(q[1] - cy).get_d(), Rational(q[0] - cx).get_d()); };
    std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) { return angle(a) < angle(b); });
    Rational twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec& a = pts[i];
        const Vec& b = pts[(i + 1) % pts.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

}  // namespace rootzeta
