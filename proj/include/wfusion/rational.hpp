#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "wfusion/errors.hpp"

namespace wfusion {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

/// floor(a/b) for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rat_floor(const Rational& q) { return floor_div(rat_num(q), rat_den(q)); }

/// Representative of q modulo m in [0, m), m > 0.
inline Rational rat_mod(const Rational& q, const Rational& m) {
    Rational r = q - Rational(rat_floor(q / m)) * m;
    if (r < 0) r += m; // paranoia against rounding at exact multiples
    if (r >= m) r -= m;
    return r;
}

inline std::string rat_str(const Rational& q) { return q.str(); }

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

/// Parse "a" or "a/b" with optional leading sign. Rejects anything else.
Rational parse_rational(const std::string& text);

} // namespace wfusion
