#pragma once

#include <gmpxx.h>

#include <string>

namespace symcalc {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return Rational(r);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational power(const Rational& base, unsigned long k) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace symcalc
