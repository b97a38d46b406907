#pragma once

/*
 * The scalar type used everywhere: exact arbitrary-precision rationals.
 *
 * Rational is GMP's mpq_class, always kept canonical (lowest terms, positive
 * denominator).  The textual wire format is "p/q", or "p" for integers.
 */

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icalg {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonnegative_integer(const Rational& q) {
    return is_integer(q) && sgn(q) >= 0;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Decimal rendering for display only; exact when the denominator divides a
// power of ten, otherwise truncated to `digits` places with a trailing "...".
inline std::string to_decimal(const Rational& q, int digits = 6) {
    Integer num = q.get_num();
    Integer den = q.get_den();
    std::string out;
    if (sgn(num) < 0) {
        out += '-';
        num = -num;
    }
    Integer whole = num / den;
    Integer rem = num % den;
    out += whole.get_str();
    if (rem == 0) return out;
    out += '.';
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        Integer d = rem / den;
        rem = rem % den;
        out += d.get_str();
    }
    if (rem != 0) out += "...";
    return out;
}

// Parses "p", "p/q" or a finite decimal such as "-2.5".  Throws
// std::invalid_argument naming the token on malformed input.
inline Rational parse_rational(std::string_view token) {
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&]() {
        return std::invalid_argument("not an exact rational: '" + std::string(token) + "'");
    };
    if (s.empty()) throw bad();

    auto is_int_text = [](std::string_view t) {
        std::size_t i = 0;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto to_int = [](std::string_view t) {
        if (!t.empty() && t[0] == '+') t.remove_prefix(1);
        return Integer(std::string(t), 10);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string_view num(s.data(), slash);
        std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
        if (!is_int_text(num) || !is_int_text(den)) throw bad();
        Integer d = to_int(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
        Rational q(to_int(num), d);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !is_int_text(whole) || !is_int_text(frac) || frac[0] == '-' ||
            frac[0] == '+')
            throw bad();
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational q(to_int(whole) * scale + to_int(frac), scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }
    if (!is_int_text(s)) throw bad();
    return Rational(to_int(s));
}

// Parses a comma-separated list such as "0,18,-9/2".  An empty string is an
// empty list.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string_view rest = text;
    bool all_space = true;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) all_space = false;
    if (all_space) return out;
    while (true) {
        auto comma = rest.find(',');
        out.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

// a/b in lowest terms; mpq_class(a, b) alone does not reduce.
inline Rational frac(long a, long b) {
    if (b == 0) throw std::domain_error("frac: zero denominator");
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline Rational factorial(unsigned k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace icalg
