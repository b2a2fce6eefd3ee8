#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace starcfg {

// Exact arithmetic over the rationals. GMP keeps every value canonical:
// lowest terms, positive denominator, zero stored as 0/1.
using Int = mpz_class;
using Rational = mpq_class;

/// Affine representative of a point, as used by Form::evaluate.
using Point3 = std::array<Rational, 3>;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws ParseError.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& q);

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace starcfg
