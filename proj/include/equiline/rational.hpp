#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace equiline {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact "p/q" rendering, or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Approximate decimal rendering for display only.
std::string to_decimal_string(const Rational& value, int digits = 6);

// num/den in lowest terms. mpq_class(num, den) alone does not canonicalise.
inline Rational fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// C(m, 2) as an exact integer.
inline Integer choose2(std::int64_t m) { return Integer(m) * Integer(m - 1) / 2; }

Integer binomial(unsigned long n, unsigned long k);

Integer ceil(const Rational& value);

}  // namespace equiline
