#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "latfree/interval.hpp"
#include "latfree/rational.hpp"

namespace latfree {

class FieldScalar;
struct Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// One level of a real quadratic extension tower. `radicand` is an element of
// the base level, positive and certified non-square there.
struct Tower {
  TowerPtr base;  // nullptr: extension of the rationals
  std::shared_ptr<const FieldScalar> radicand;
  int depth = 1;
};

// Exact real number in a tower of quadratic extensions of Q.
//
// Representation: either a rational leaf, or a + b*sqrt(r) where a, b live in
// the tower one level below and r is that level's radicand. Values are
// immutable; copies share subtrees.
class FieldScalar {
 public:
  FieldScalar() : q_(0) {}
  FieldScalar(long v) : q_(v) {}  // NOLINT: implicit by design
  FieldScalar(const Rational& q) : q_(q) {}

  bool is_rational_leaf() const { return tw_ == nullptr; }
  int depth() const { return tw_ ? tw_->depth : 0; }

  // True iff the value is exactly zero (coefficient-wise; sound because
  // radicands are certified non-square in their level).
  bool is_zero() const;
  bool is_one() const;

  // Collapses to a plain rational when all radical parts vanish.
  std::optional<Rational> as_rational() const;

  friend FieldScalar operator+(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator-(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y);
  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& y) { return *this = *this + y; }
  FieldScalar& operator-=(const FieldScalar& y) { return *this = *this - y; }
  FieldScalar& operator*=(const FieldScalar& y) { return *this = *this * y; }
  FieldScalar& operator/=(const FieldScalar& y) { return *this = *this / y; }

  FieldScalar inverse() const;
  FieldScalar pow(unsigned long e) const;

  // Exact sign in {-1, 0, +1}. Interval evaluation is used as a fast
  // pre-check; the recursive exact comparison is the final arbiter.
  int sign() const;

  friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const FieldScalar& x, const FieldScalar& y) {
    return !(x == y);
  }
  friend bool operator<(const FieldScalar& x, const FieldScalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const FieldScalar& x, const FieldScalar& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const FieldScalar& x, const FieldScalar& y) {
    return (x - y).sign() > 0;
  }
  friend bool operator>=(const FieldScalar& x, const FieldScalar& y) {
    return (x - y).sign() >= 0;
  }

  // Principal square root. Returns a value in the existing tower whenever the
  // argument is a certified square there, otherwise adjoins a new radicand.
  // Throws std::domain_error for negative arguments.
  static FieldScalar sqrt(const FieldScalar& x);

  // Certified enclosure at the given working precision.
  Interval enclosure(mpfr_prec_t prec) const;

  // Enclosure refined until width <= 2^(2-bits) * max(1, |x|). bits >= 16.
  IntervalApprox to_interval(long bits) const;

  double to_double() const;
  std::string decimal(int sig_digits = 17) const;
  std::string to_string() const;  // exact, human-readable

  // JSON: rational leaves as "p/q", otherwise {"a":..,"b":..,"r":..}.
  nlohmann::json to_json() const;
  static FieldScalar from_json(const nlohmann::json& j);

  // Exact integer floor/ceil.
  Integer floor() const;
  Integer ceil() const;

 private:
  TowerPtr tw_;   // nullptr: rational leaf
  Rational q_;    // leaf payload (unused otherwise)
  std::shared_ptr<const FieldScalar> a_, b_;  // parts at tw_->base level

  FieldScalar(TowerPtr tw, FieldScalar a, FieldScalar b);

  static FieldScalar embed(const FieldScalar& x, const TowerPtr& tower);
  static bool tower_is_prefix(const TowerPtr& pre, const TowerPtr& full);
  static void align(FieldScalar& x, FieldScalar& y);
  static std::pair<TowerPtr, FieldScalar> lift_into(const FieldScalar& x,
                                                    TowerPtr tower);
  static std::pair<TowerPtr, FieldScalar> ensure_sqrt(const FieldScalar& x,
                                                      TowerPtr tower);
  static std::optional<FieldScalar> try_sqrt(const FieldScalar& x);
  static FieldScalar add_same(const FieldScalar& x, const FieldScalar& y);
  static FieldScalar mul_same(const FieldScalar& x, const FieldScalar& y);
  int sign_exact() const;
};

inline FieldScalar operator+(const FieldScalar& x, long y) { return x + FieldScalar(y); }
inline FieldScalar operator-(const FieldScalar& x, long y) { return x - FieldScalar(y); }
inline FieldScalar operator*(const FieldScalar& x, long y) { return x * FieldScalar(y); }
inline FieldScalar operator+(long x, const FieldScalar& y) { return FieldScalar(x) + y; }
inline FieldScalar operator-(long x, const FieldScalar& y) { return FieldScalar(x) - y; }
inline FieldScalar operator*(long x, const FieldScalar& y) { return FieldScalar(x) * y; }

}  // namespace latfree
