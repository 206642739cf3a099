#pragma once

#include "loomlab/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace loomlab {

// Exact arbitrary-precision rational; denominators positive, gcd-reduced
// (maintained by the GMP backend).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q" with q >= 1, always including the denominator.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Human form: "p" when integral, else "p/q".
inline std::string rational_pretty(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return rational_to_string(r);
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

inline int rational_ceil_int(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;
    if (num > 0 && num % den != 0) q += 1;
    return q.convert_to<int>();
}

}  // namespace loomlab
