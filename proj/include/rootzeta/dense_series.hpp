#pragma once

#include "rootzeta/multipoly.hpp"

#include <stdexcept>
#include <vector>

namespace rootzeta {

// Truncated series stored densely on the box 0 <= e_v <= caps[v] in mixed radix.
// This is the working representation for single-coefficient extraction, where
// every monomial below the target is needed anyway.
class DenseSeries {
public:
    struct Term {
        std::vector<std::pair<std::size_t, unsigned>> shift;  // (variable, power), nonzero powers only
        std::size_t offset = 0;
        Rational c;
    };

    DenseSeries() = default;
    explicit DenseSeries(std::vector<unsigned> caps) : caps_(std::move(caps)) {
        stride_.resize(caps_.size());
        std::size_t s = 1;
        for (std::size_t v = 0; v < caps_.size(); ++v) {
            stride_[v] = s;
            s *= caps_[v] + 1;
        }
        data_.assign(s, Rational(0));
    }

    static DenseSeries one(std::vector<unsigned> caps) {
        DenseSeries d(std::move(caps));
        d.data_[0] = 1;
        return d;
    }

    std::size_t arity() const { return caps_.size(); }
    std::size_t size() const { return data_.size(); }
    const std::vector<unsigned>& caps() const { return caps_; }
    const Rational& at(std::size_t i) const { return data_[i]; }
    Rational& at(std::size_t i) { return data_[i]; }

    std::size_t index(const Exponent& e) const {
        std::size_t i = 0;
        for (std::size_t v = 0; v < caps_.size(); ++v) i += e[v] * stride_[v];
        return i;
    }

    Exponent exponent(std::size_t i) const {
        Exponent e(caps_.size());
        for (std::size_t v = 0; v < caps_.size(); ++v) {
            e[v] = static_cast<unsigned>((i / stride_[v]) % (caps_[v] + 1));
        }
        return e;
    }

    // a monomial term c * x^e, or nothing when it exceeds the caps
    bool make_term(const Exponent& e, const Rational& c, Term& t) const {
        t.shift.clear();
        t.offset = 0;
        for (std::size_t v = 0; v < caps_.size(); ++v) {
            if (e[v] > caps_[v]) return false;
            if (e[v]) {
                t.shift.emplace_back(v, e[v]);
                t.offset += e[v] * stride_[v];
            }
        }
        t.c = c;
        return true;
    }

    std::vector<Term> terms_of(const MultiPoly& p) const {
        if (p.arity() != caps_.size()) throw std::invalid_argument("dense ring arity mismatch");
        std::vector<Term> out;
        Term t;
        for (const auto& [e, c] : p.terms())
            if (make_term(e, c, t)) out.push_back(t);
        return out;
    }

    // *this /= (1 - z); z has no constant term, so an ascending sweep is exact
    void divide_one_minus(const std::vector<Term>& z) {
        for (const auto& t : z)
            if (t.offset == 0) throw std::invalid_argument("geometric series of a form with constant term");
        Exponent e(caps_.size(), 0);
        Rational tmp;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            for (const auto& t : z) {
                bool fits = true;
                for (const auto& [v, p] : t.shift)
                    if (e[v] < p) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                const Rational& src = data_[i - t.offset];
                if (sgn(src) == 0) continue;
                mpq_mul(tmp.get_mpq_t(), src.get_mpq_t(), t.c.get_mpq_t());
                mpq_add(data_[i].get_mpq_t(), data_[i].get_mpq_t(), tmp.get_mpq_t());
            }
            advance(e);
        }
    }

    DenseSeries times(const std::vector<Term>& p) const {
        DenseSeries out(caps_);
        Exponent e(caps_.size(), 0);
        Rational tmp;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (sgn(data_[i]) != 0) {
                for (const auto& t : p) {
                    bool fits = true;
                    for (const auto& [v, pw] : t.shift)
                        if (e[v] + pw > caps_[v]) {
                            fits = false;
                            break;
                        }
                    if (!fits) continue;
                    mpq_mul(tmp.get_mpq_t(), data_[i].get_mpq_t(), t.c.get_mpq_t());
                    Rational& dst = out.data_[i + t.offset];
                    mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
                }
            }
            advance(e);
        }
        return out;
    }

    DenseSeries times(const MultiPoly& p) const { return times(terms_of(p)); }

    // multiply by a univariate series sum_j c[j] x_v^j
    DenseSeries times_univariate(std::size_t v, const std::vector<Rational>& c) const {
        DenseSeries out(caps_);
        Exponent e(caps_.size(), 0);
        Rational tmp;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (sgn(data_[i]) != 0) {
                for (unsigned j = 0; j < c.size() && e[v] + j <= caps_[v]; ++j) {
                    if (sgn(c[j]) == 0) continue;
                    mpq_mul(tmp.get_mpq_t(), data_[i].get_mpq_t(), c[j].get_mpq_t());
                    Rational& dst = out.data_[i + j * stride_[v]];
                    mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
                }
            }
            advance(e);
        }
        return out;
    }

    // entry e is multiplied by f[sum of e_v over the first `prefix` variables]
    void scale_by_degree(std::size_t prefix, const std::vector<Rational>& f) {
        Exponent e(caps_.size(), 0);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (sgn(data_[i]) != 0) {
                unsigned d = 0;
                for (std::size_t v = 0; v < prefix; ++v) d += e[v];
                data_[i] *= f.at(d);
            }
            advance(e);
        }
    }

    void scale(const Rational& s) {
        for (auto& x : data_)
            if (sgn(x) != 0) x *= s;
    }

    DenseSeries& operator+=(const DenseSeries& o) {
        if (o.caps_ != caps_) throw std::invalid_argument("dense ring mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
        return *this;
    }

    MultiPoly to_multipoly() const {
        MultiPoly p(caps_.size(), Truncation::per_variable(caps_));
        Exponent e(caps_.size(), 0);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (sgn(data_[i]) != 0) p.add_term(e, data_[i]);
            advance(e);
        }
        return p;
    }

private:
    void advance(Exponent& e) const {
        for (std::size_t v = 0; v < caps_.size(); ++v) {
            if (e[v] < caps_[v]) {
                ++e[v];
                return;
            }
            e[v] = 0;
        }
    }

    std::vector<unsigned> caps_;
    std::vector<std::size_t> stride_;
    std::vector<Rational> data_;
};

}  // namespace rootzeta
