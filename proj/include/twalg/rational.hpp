// Exact scalars: arbitrary-precision integers and rationals on top of GMP.
//
// Every rational handled by the library is kept canonical (lowest terms,
// positive denominator, zero as 0/1); mpq arithmetic preserves that form as
// long as values are created through the factories below.
#pragma once

#include <gmpxx.h>

#include <string>

#include "twalg/errors.hpp"

namespace twalg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den = 1) {
  if (sgn(den) == 0) throw DomainError("rat: zero denominator");
  Rat q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  q.canonicalize();
  return q;
}

// Accepts "7", "-3/4", ... (base 10).
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw DomainError("rat_from_string: bad literal '" + s + "'");
  q.canonicalize();
  return q;
}

// Always "num/den", e.g. "3/1", "-2/5".  Inverse of rat_from_string.
inline std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline long long to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw DomainError("to_i64: value does not fit in 64 bits");
  return v.get_si();
}

// mpz_class has no long long constructor; long is 64-bit on every platform
// this library targets.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

}  // namespace twalg
