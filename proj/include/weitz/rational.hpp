#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "weitz/errors.hpp"

namespace weitz {

/// All scalar arithmetic in the library is exact. GMP rationals are the
/// single kernel; half-integers are rationals with denominator 2.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True when r is in Z + 1/2.
inline bool is_half_odd(const Rational& r) { return r.get_den() == 2; }

/// True when 2r is an integer (the only denominators weights may carry).
inline bool is_half_integral(const Rational& r) {
  return r.get_den() == 1 || r.get_den() == 2;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
  Rational result(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return Integer(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    fail(ErrorKind::InternalNonInteger,
         "expected a machine-size integer, got " + r.get_str());
  return r.get_num().get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(const std::string& text);

/// Decimal rendering at the given number of significant digits; only for
/// human-facing output, never fed back into computations.
std::string approx_string(const Rational& r, int significant_digits = 12);

}  // namespace weitz
