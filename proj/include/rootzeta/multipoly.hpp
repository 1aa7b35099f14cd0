#pragma once

#include "rootzeta/rational.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootzeta {

using Exponent = std::vector<unsigned>;

inline constexpr unsigned kNoCap = std::numeric_limits<unsigned>::max();

struct Truncation {
    std::vector<unsigned> caps;  // per variable; empty or kNoCap entries mean uncapped
    std::optional<unsigned> total;

    static Truncation none() { return {}; }
    static Truncation per_variable(std::vector<unsigned> c) { return {std::move(c), std::nullopt}; }
    static Truncation total_degree(unsigned d) { return {{}, d}; }

    unsigned cap(std::size_t v) const { return v < caps.size() ? caps[v] : kNoCap; }

    bool admits(const Exponent& e) const {
        unsigned deg = 0;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] > cap(v)) return false;
            deg += e[v];
        }
        return !total || deg <= *total;
    }

    bool bounded(std::size_t arity) const {
        if (total) return true;
        for (std::size_t v = 0; v < arity; ++v)
            if (cap(v) == kNoCap) return false;
        return true;
    }

    // the stricter of the two policies
    Truncation meet(const Truncation& o) const {
        Truncation t;
        std::size_t n = std::max(caps.size(), o.caps.size());
        t.caps.resize(n);
        for (std::size_t v = 0; v < n; ++v) t.caps[v] = std::min(cap(v), o.cap(v));
        if (total && o.total) t.total = std::min(*total, *o.total);
        else if (total) t.total = total;
        else t.total = o.total;
        return t;
    }

    bool operator==(const Truncation&) const = default;
};

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t arity, Truncation t = {}) : arity_(arity), trunc_(std::move(t)) {}

    static MultiPoly constant(std::size_t arity, const Rational& c, Truncation t = {}) {
        MultiPoly p(arity, std::move(t));
        p.add_term(Exponent(arity, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t arity, std::size_t v, Truncation t = {}) {
        MultiPoly p(arity, std::move(t));
        Exponent e(arity, 0);
        e.at(v) = 1;
        p.add_term(e, 1);
        return p;
    }

    std::size_t arity() const { return arity_; }
    const Truncation& truncation() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
        if (c == 0 || !trunc_.admits(e)) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    unsigned degree_in(std::size_t v) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    MultiPoly with_truncation(Truncation t) const {
        MultiPoly p(arity_, std::move(t));
        for (const auto& [e, c] : terms_) p.add_term(e, c);
        return p;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    MultiPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const { return *this * Rational(-1); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.arity_, a.trunc_.meet(b.trunc_));
        Exponent e(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t v = 0; v < a.arity_; ++v) e[v] = ea[v] + eb[v];
                if (r.trunc_.admits(e)) r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    Rational evaluate(const std::vector<Rational>& x) const {
        if (x.size() != arity_) throw std::invalid_argument("evaluation point arity mismatch");
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (std::size_t v = 0; v < arity_; ++v)
                for (unsigned k = 0; k < e[v]; ++k) m *= x[v];
            sum += m;
        }
        return sum;
    }

    // replaces variable v by images[v]; all images share one arity
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != arity_) throw std::invalid_argument("substitution arity mismatch");
        std::size_t out_arity = images.empty() ? 0 : images[0].arity();
        MultiPoly r(out_arity);
        std::vector<std::vector<MultiPoly>> powers(arity_);
        for (std::size_t v = 0; v < arity_; ++v) powers[v].push_back(MultiPoly::constant(out_arity, 1));
        for (const auto& [e, c] : terms_) {
            MultiPoly m = MultiPoly::constant(out_arity, c);
            for (std::size_t v = 0; v < arity_; ++v) {
                while (powers[v].size() <= e[v]) powers[v].push_back(powers[v].back() * images[v]);
                if (e[v]) m = m * powers[v][e[v]];
            }
            r += m;
        }
        return r;
    }

    MultiPoly derivative(std::size_t v) const {
        MultiPoly r(arity_, trunc_);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exponent f = e;
            --f[v];
            r.add_term(f, c * e[v]);
        }
        return r;
    }

    // exchanges the roles of variables according to perm: new variable perm[v] gets old v
    MultiPoly permuted(const std::vector<std::size_t>& perm) const {
        MultiPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            Exponent f(arity_);
            for (std::size_t v = 0; v < arity_; ++v) f[perm[v]] = e[v];
            r.add_term(f, c);
        }
        return r;
    }

private:
    void check(const MultiPoly& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    }

    std::size_t arity_ = 0;
    Truncation trunc_;
    Terms terms_;
};

// plain text, e.g. "1/2*x1^2*x3 - x2 + 3"
inline std::string to_string(const MultiPoly& p, const char* var = "x") {
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += '*';
            mono += var + std::to_string(v + 1);
            if (e[v] > 1) mono += '^' + std::to_string(e[v]);
        }
        if (mono.empty()) out += a.get_str();
        else if (a == 1) out += mono;
        else out += a.get_str() + '*' + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace rootzeta
