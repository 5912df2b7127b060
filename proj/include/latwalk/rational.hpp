#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace latwalk {

/// Exact coefficient field: arbitrary-precision rational, always canonical
/// (gmp keeps gcd-reduced form with positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// n! / (k1! k2! ... kr!) with sum(ki) <= n; remaining mass goes to an implicit last part.
inline Integer multinomial(long n, std::initializer_list<long> parts) {
  long used = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    used += p;
  }
  if (used > n || n < 0) return 0;
  Integer r = factorial(n);
  for (long p : parts) r /= factorial(p);
  r /= factorial(n - used);
  return r;
}

inline Integer pow_integer(const Integer& b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Rational pow_rational(const Rational& b, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (b == 0) throw std::domain_error("pow_rational: zero to negative power");
    return 1 / pow_rational(b, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

} // namespace latwalk
