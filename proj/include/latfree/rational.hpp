#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace latfree {

// Arbitrary-precision rational, always kept in canonical form
// (positive denominator, gcd(num, den) = 1) by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p".
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  if (q.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

// Exact integer square root if n is a perfect square.
inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Exact rational square root if q is a square of a rational.
inline std::optional<Rational> rational_sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto num = integer_sqrt_exact(Integer(q.get_num()));
  if (!num) return std::nullopt;
  auto den = integer_sqrt_exact(Integer(q.get_den()));
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

inline Integer rational_floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer rational_ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace latfree
