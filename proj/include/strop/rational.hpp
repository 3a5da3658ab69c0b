#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strop {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0. Throws Error{Malformed} otherwise.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Exponent of the prime p in a nonzero rational.
long ord_p(const Rational& q, unsigned long p);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace strop
