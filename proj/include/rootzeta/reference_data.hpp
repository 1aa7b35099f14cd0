#pragma once

// Published closed forms and series coefficients used as regression data.

#include "rootzeta/classical.hpp"
#include "rootzeta/multipoly.hpp"

#include <string>
#include <vector>

namespace rootzeta::reference {

struct Coefficient {
    Exponent exponents;
    long num = 0, den = 1;
    // the printed sign disagrees with the value obtained from the defining integral
    bool sign_misprint = false;

    Rational value() const { return rat(num, den); }
};

// F(t; A2) at y = 0, variables (alpha1, alpha2, alpha1+alpha2)
inline std::vector<Coefficient> a2_series() {
    return {
        {{1, 1, 0}, 1, 12},     {{1, 0, 1}, -1, 12},    {{0, 1, 1}, -1, 12},
        {{1, 1, 2}, 1, 360},    {{2, 1, 1}, -1, 360},   {{1, 2, 1}, -1, 360},
        {{2, 2, 0}, 1, 720},    {{2, 0, 2}, 1, 720},    {{0, 2, 2}, 1, 720},
        {{2, 2, 2}, 1, 30240},
    };
}

// F(t; C2) at y = 0 as printed, variables (alpha1, alpha2, 2alpha1+alpha2, alpha1+alpha2);
// the canonical order lists alpha1+alpha2 before 2alpha1+alpha2, see c2_to_canonical
inline std::vector<Coefficient> c2_series_printed() {
    return {
        {{1, 1, 2, 0}, 2, 2880},         {{1, 1, 0, 2}, -4, 2880, true}, {{1, 2, 1, 0}, -2, 2880},
        {{1, 2, 0, 1}, 4, 2880},         {{1, 0, 1, 2}, -4, 2880},       {{1, 0, 2, 1}, -4, 2880},
        {{2, 1, 1, 0}, 1, 2880},         {{2, 1, 0, 1}, -4, 2880},       {{2, 0, 1, 1}, -4, 2880},
        {{0, 1, 1, 2}, -1, 2880},        {{0, 1, 2, 1}, -2, 2880},       {{0, 2, 1, 1}, -2, 2880},
        {{1, 1, 2, 2}, 3, 241920},       {{1, 2, 1, 2}, -3, 241920},     {{2, 1, 2, 1}, -3, 241920},
        {{2, 2, 1, 1}, -3, 241920},      {{2, 2, 2, 0}, 2, 241920},      {{2, 2, 0, 2}, 8, 241920},
        {{2, 0, 2, 2}, 8, 241920},       {{0, 2, 2, 2}, 2, 241920},      {{2, 2, 2, 2}, 1, 9676800},
    };
}

inline Exponent c2_to_canonical(const Exponent& e) { return {e[0], e[1], e[3], e[2]}; }

// B^{(1)}_{2,2,2}(y; A2) on 0 < y2 < y1 < 1, in the normalization with constant term 1/30240
inline MultiPoly a2_chamber1_222() {
    MultiPoly p(2);
    auto add = [&](unsigned a, unsigned b, long num, long den) { p.add_term({a, b}, rat(num, den)); };
    add(0, 0, 1, 30240);
    add(1, 1, 1, 360), add(2, 0, -1, 360), add(0, 2, -1, 360);
    add(1, 2, 3, 144), add(2, 1, -3, 144), add(3, 0, 2, 144);
    add(1, 3, -2, 72), add(2, 2, -3, 72), add(3, 1, 4, 72), add(4, 0, -2, 72), add(0, 4, 1, 72);
    add(1, 4, -5, 240), add(2, 3, 10, 240), add(3, 2, 10, 240), add(4, 1, -15, 240), add(5, 0, 6, 240);
    add(1, 5, 6, 240), add(2, 4, -5, 240), add(4, 2, -5, 240), add(5, 1, 6, 240), add(6, 0, -2, 240),
        add(0, 6, -2, 240);
    return p;
}

enum class Kind { special, witten, mixed };

struct ClosedForm {
    std::string name;
    std::string type;
    Kind kind;
    std::vector<unsigned> args;  // k per orbit for special/witten, s per root (canonical) for mixed
    PiValue value;
};

inline std::vector<ClosedForm> closed_forms() {
    return {
        {"zeta_2(2,2,2;A2)", "A2", Kind::special, {1}, PiValue(rat(1, 2835), 6)},
        {"zeta_2(2,2,2,2;C2)", "C2", Kind::special, {1, 1}, PiValue(rat(1, 302400), 8)},
        {"zeta_W(2;C2)", "C2", Kind::witten, {1}, PiValue(rat(1, 8400), 8)},
        {"zeta_3(2,...,2;A3)", "A3", Kind::special, {1}, PiValue(rat(23, 2554051500), 12)},
        {"zeta_W(2;A3)", "A3", Kind::witten, {1}, PiValue(rat(92, 70945875), 12)},
        {"zeta_2(2,4,4,2;C2)", "C2", Kind::mixed, {2, 4, 2, 4}, PiValue(rat(53, 6810804000), 12)},
    };
}

// sum of L(m) over boxes as reported for the full-flag triangulation at y = 0
struct SimplexCountReport {
    std::string type;
    long reported_terms;
    long per_term_factor;  // n - r + 1
};

inline std::vector<SimplexCountReport> simplex_counts() {
    return {{"G2", 1010, 5}, {"A4", 5040, 7}, {"B3", 19908, 7}, {"C3", 20916, 7}};
}

}  // namespace rootzeta::reference
