#pragma once

#include "rootzeta/classical.hpp"
#include "rootzeta/generating.hpp"
#include "rootzeta/polytope.hpp"
#include "rootzeta/root_system.hpp"
#include "rootzeta/weyl.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace rootzeta {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_json(c)}});
    return {{"arity", p.arity()}, {"terms", terms}};
}

inline MultiPoly multipoly_from_json(const Json& j) {
    MultiPoly p(j.at("arity").get<std::size_t>());
    for (const auto& t : j.at("terms")) p.add_term(t.at("exponents").get<Exponent>(), rational_from_json(t.at("coeff")));
    return p;
}

inline Json to_json(const PiValue& v) { return {{"pi_power", v.pi_power}, {"coeff", to_json(v.coeff)}}; }

inline PiValue pivalue_from_json(const Json& j) {
    return PiValue(rational_from_json(j.at("coeff")), j.at("pi_power").get<unsigned>());
}

inline Json to_json(const RootSystem& rs) {
    Json roots = Json::array();
    for (std::size_t a = 0; a < rs.n(); ++a)
        roots.push_back({{"index", a + 1},
                         {"root", rs.roots[a]},
                         {"coroot", rs.coroots[a]},
                         {"pairing", rs.coroots[a]},  // <alpha^vee, lambda_i>, equal to the coroot coordinates
                         {"height", rs.height(a)},
                         {"norm", to_json(rs.norms[a])}});
    Json rho = Json::array();
    for (std::size_t i = 0; i < rs.r; ++i) rho.push_back(rs.two_rho(i));
    return {{"type", rs.label}, {"rank", rs.r}, {"positive_roots", rs.n()}, {"cartan", rs.cartan},
            {"two_rho_vee", rho}, {"K", k_constant(rs).get_str()}, {"roots", roots}};
}

inline Json to_json(const WeylElement& w) {
    std::vector<std::size_t> inv;
    for (auto a : w.inversions) inv.push_back(a + 1);
    std::vector<std::size_t> word;
    for (auto i : w.word) word.push_back(i + 1);
    return {{"word", word}, {"length", w.length()}, {"root_permutation", w.perm}, {"inversions", inv}};
}

inline Json to_json(const HPolytope& p) {
    Json rows = Json::array();
    for (const auto& h : p.rows) rows.push_back({{"a", to_json(h.a)}, {"h", to_json(h.h)}});
    return {{"dim", p.dim}, {"rows", rows}};
}

inline HPolytope hpolytope_from_json(const Json& j) {
    HPolytope p;
    p.dim = j.at("dim").get<std::size_t>();
    for (const auto& row : j.at("rows")) {
        Vec a;
        for (const auto& x : row.at("a")) a.push_back(rational_from_json(x));
        if (a.size() != p.dim) throw std::invalid_argument("row length differs from dim");
        p.add(a, rational_from_json(row.at("h")));
    }
    return p;
}

inline Json to_json(const Triangulation& T) {
    Json verts = Json::array();
    for (const auto& v : T.vertices) verts.push_back(to_json(v));
    return {{"dim", T.dim}, {"vertices", verts}, {"simplices", T.simplices}, {"volume", to_json(triangulation_volume(T))}};
}

inline Json to_json(const BoxFamily& f) {
    Json boxes = Json::array();
    Rational total = 0;
    for (const auto& b : f.boxes) {
        Json verts = Json::array();
        for (const auto& v : b.verts.vertices) verts.push_back(to_json(v));
        Rational vol = box_volume(b);
        total += vol;
        boxes.push_back({{"m", b.m}, {"full", b.full}, {"volume", to_json(vol)}, {"vertices", verts}});
    }
    return {{"y", to_json(f.y)}, {"boxes", boxes}, {"total_volume", to_json(total)}};
}

// t_1^2 t_3 style, variables 1-based
inline std::string latex_monomial(const Exponent& e, const char* var = "t") {
    std::ostringstream out;
    bool first = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (!e[v]) continue;
        if (!first) out << ' ';
        first = false;
        out << var << '_' << (v + 1);
        if (e[v] > 1) out << '^' << e[v];
    }
    return out.str();
}

// Monomial coefficients ordered by total degree, as the series is usually displayed
inline std::string to_latex(const MultiPoly& p, const char* var = "t") {
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    auto degree = [](const Exponent& e) {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational a = abs(c);
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << '-';
        first = false;
        std::string mono = latex_monomial(e, var);
        bool unit = a == 1 && !mono.empty();
        if (!unit) {
            if (a.get_den() == 1) out << a.get_num().get_str();
            else out << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << '}';
        }
        if (!mono.empty()) out << (unit ? "" : " ") << mono;
    }
    if (first) out << '0';
    return out.str();
}

}  // namespace rootzeta
