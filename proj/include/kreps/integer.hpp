#pragma once

#include <gmpxx.h>

#include <string>

namespace kreps {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = mpz_class;

inline std::string to_string(Integer const &v) { return v.get_str(); }

inline Integer abs(Integer const &v) { return ::abs(v); }

inline Integer gcd(Integer const &a, Integer const &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Least nonnegative residue of v modulo r (r > 0).
inline Integer mod(Integer const &v, Integer const &r) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), v.get_mpz_t(), r.get_mpz_t());
  return out;
}

/// Exact conversion to long; throws std::overflow_error when out of range.
long to_long(Integer const &v);

} // namespace kreps
