#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mld {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer abs(const Integer& a) { return ::abs(a); }

/// Floor and ceiling of a rational as integers.
inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

static_assert(sizeof(long) == 8, "Integer <-> int64 conversions assume an LP64 platform");

inline bool fits_int64(const Integer& a) { return a.fits_slong_p(); }

inline std::int64_t to_int64(const Integer& a) { return static_cast<std::int64_t>(a.get_si()); }

inline std::string to_string(const Integer& a) { return a.get_str(); }

}  // namespace mld
