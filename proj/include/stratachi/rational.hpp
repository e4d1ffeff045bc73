#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratachi {

/// Exact arbitrary-precision rational, the coordinate/coefficient type used
/// throughout the kernel. All geometric predicates are exact; nothing in the
/// convex-geometry layer ever touches floating point.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& x) { return x.str(); }

/// Parses "p", "-p" or "p/q" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

inline Rational pow_rational(const Rational& base, int exp) {
    Rational r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace stratachi
