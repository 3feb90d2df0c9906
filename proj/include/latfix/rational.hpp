#pragma once

#include <gmpxx.h>

#include "latfix/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace latfix {

// Arbitrary-precision rationals. mpq_class keeps values canonical
// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws InvalidInput on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical p/q; mpq_class(p, q) alone does not reduce.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Rational& q) { return sgn(q); }

/// Least common multiple of all denominators.
Integer common_denominator(const std::vector<Rational>& values);

/// gcd of numerators of an integral vector (0 for the zero vector).
Integer content(const std::vector<Integer>& values);

}  // namespace latfix
