#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rootzeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q{num, den};
    q.canonicalize();
    return q;
}

// "p/q", or "p" when q = 1
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

// accepts "p", "p/q" and plain decimals like "-0.125"; decimals convert exactly
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) fail();

    auto parse_int = [&](std::string_view t) {
        std::string_view digits = t;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
        if (digits.empty()) fail();
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        std::string buf(t.front() == '+' ? t.substr(1) : t);
        return Integer(buf);
    };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_int(s.substr(0, slash));
        Integer den = parse_int(s.substr(slash + 1));
        if (den == 0) fail();
        Rational q{num, den};
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
        if (ip.empty() && fp.empty()) fail();
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        Integer whole = ip.empty() ? Integer(0) : parse_int(ip);
        Integer part = fp.empty() ? Integer(0) : Integer(std::string(fp));
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        Rational q{whole * scale + part, scale};
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    return Rational(parse_int(s));
}

inline std::vector<Rational> parse_rational_list(std::string_view s) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string_view::npos) comma = s.size();
        out.push_back(parse_rational(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

}  // namespace rootzeta
