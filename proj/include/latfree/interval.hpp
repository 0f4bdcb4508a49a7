#pragma once

#include <mpfr.h>

#include <string>

#include "latfree/rational.hpp"

namespace latfree {

// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
// Every operation returns an enclosure of the exact result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  static Interval from_long(long v, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator-() const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // requires 0 not in o
  Interval sqrt() const;                        // requires hi >= 0; lo clamped to 0

  bool contains_zero() const;
  // -1, 0 (=unknown/contains zero), +1
  int sign() const;

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  Rational lo_rational() const;
  Rational hi_rational() const;
  Rational width() const;
  // max(|lo|, |hi|) as a rational
  Rational mag() const;

  // strictly-certified comparisons; false means "not provable at this precision"
  bool certainly_less(const Interval& o) const;
  bool certainly_greater(const Interval& o) const;

  std::string decimal_midpoint(int sig_digits) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
  friend class FieldScalar;
};

// Exported interval snapshot of an exact value.
struct IntervalApprox {
  Rational lower;
  Rational upper;
  long precision = 0;  // requested bits

  Rational width() const { return upper - lower; }
  bool contains_zero() const { return lower <= 0 && upper >= 0; }
};

}  // namespace latfree
