#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hyplat {

// Exact arithmetic everywhere: no floating point enters any certified path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

/// Canonical form: "p" when integral, else "p/q" with q > 0 and gcd(p,q) = 1
/// (cpp_rational keeps that normalization internally).
inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string to_string(const Int& n) { return n.str(); }

namespace detail {
inline Int parse_integer(const std::string& text) {
    bool ok = !text.empty();
    for (std::size_t i = 0; i < text.size() && ok; ++i) {
        char ch = text[i];
        ok = (ch >= '0' && ch <= '9') || (i == 0 && (ch == '+' || ch == '-') && text.size() > 1);
    }
    if (!ok) throw std::invalid_argument("bad integer literal '" + text + "'");
    return Int(text);
}
}  // namespace detail

/// Parses "p", "p/q", or a plain decimal like "-1.5e-8" into an exact rational.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int p = detail::parse_integer(text.substr(0, slash));
        Int q = detail::parse_integer(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rat(p, q);
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
        return Rat(detail::parse_integer(text));
    }
    // decimal form: sign, digits, optional fraction, optional exponent
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') { neg = text[i] == '-'; ++i; }
    Int mantissa = 0;
    long frac_digits = 0, exponent = 0;
    bool seen_digit = false, in_frac = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            mantissa = mantissa * 10 + (ch - '0');
            if (in_frac) ++frac_digits;
            seen_digit = true;
        } else if (ch == '.' && !in_frac) {
            in_frac = true;
        } else if (ch == 'e' || ch == 'E') {
            exponent = std::strtol(text.c_str() + i + 1, nullptr, 10);
            break;
        } else {
            throw std::invalid_argument("bad rational literal '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational literal '" + text + "'");
    Rat r(mantissa);
    long shift = exponent - frac_digits;
    Int pow10 = 1;
    for (long k = 0; k < (shift < 0 ? -shift : shift); ++k) pow10 *= 10;
    if (shift >= 0) r *= Rat(pow10); else r /= Rat(pow10);
    return neg ? Rat(-r) : r;
}

/// gcd over a range of integers (0 for empty input).
template <class It>
Int gcd_range(It first, It last) {
    Int g = 0;
    for (; first != last; ++first) g = gcd(g, *first);
    return g;
}

}  // namespace hyplat
