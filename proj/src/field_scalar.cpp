#include "latfree/field_scalar.hpp"

#include <nlohmann/json.hpp>

#include <utility>

namespace latfree {

namespace {
std::shared_ptr<const FieldScalar> box(FieldScalar x) {
  return std::make_shared<const FieldScalar>(std::move(x));
}
}  // namespace

FieldScalar::FieldScalar(TowerPtr tw, FieldScalar a, FieldScalar b)
    : tw_(std::move(tw)), a_(box(std::move(a))), b_(box(std::move(b))) {}

bool FieldScalar::is_zero() const {
  if (!tw_) return q_ == 0;
  return a_->is_zero() && b_->is_zero();
}

bool FieldScalar::is_one() const {
  if (!tw_) return q_ == 1;
  return a_->is_one() && b_->is_zero();
}

std::optional<Rational> FieldScalar::as_rational() const {
  if (!tw_) return q_;
  if (!b_->is_zero()) return std::nullopt;
  return a_->as_rational();
}

bool FieldScalar::tower_is_prefix(const TowerPtr& pre, const TowerPtr& full) {
  if (!pre) return true;
  for (TowerPtr t = full; t; t = t->base)
    if (t == pre) return true;
  return false;
}

FieldScalar FieldScalar::embed(const FieldScalar& x, const TowerPtr& tower) {
  if (x.tw_ == tower) return x;
  if (!tower) throw std::logic_error("embed into shallower tower");
  return FieldScalar(tower, embed(x, tower->base), FieldScalar(0));
}

// Brings x and y to a shared tower. Fast paths: identical towers and
// prefix relations; otherwise a full merge lifts y into x's tower,
// extending it only where a radicand is not already a square.
void FieldScalar::align(FieldScalar& x, FieldScalar& y) {
  if (x.tw_ == y.tw_) return;
  if (tower_is_prefix(x.tw_, y.tw_)) {
    x = embed(x, y.tw_);
    return;
  }
  if (tower_is_prefix(y.tw_, x.tw_)) {
    y = embed(y, x.tw_);
    return;
  }
  auto [tower, ylift] = lift_into(y, x.tw_);
  x = embed(x, tower);
  y = std::move(ylift);
}

std::pair<TowerPtr, FieldScalar> FieldScalar::lift_into(const FieldScalar& x,
                                                        TowerPtr tower) {
  if (!x.tw_) return {tower, x};
  auto [t1, rad] = lift_into(*x.tw_->radicand, tower);
  auto [t2, root] = ensure_sqrt(rad, t1);
  auto [t3, a] = lift_into(*x.a_, t2);
  auto [t4, b] = lift_into(*x.b_, t3);
  FieldScalar result = embed(a, t4) + embed(b, t4) * embed(root, t4);
  return {t4, std::move(result)};
}

std::pair<TowerPtr, FieldScalar> FieldScalar::ensure_sqrt(const FieldScalar& x,
                                                          TowerPtr tower) {
  FieldScalar lifted = embed(x, tower);
  if (auto r = try_sqrt(lifted)) return {tower, std::move(*r)};
  auto ext = std::make_shared<Tower>();
  ext->base = tower;
  ext->radicand = box(lifted);
  ext->depth = tower ? tower->depth + 1 : 1;
  TowerPtr t(ext);
  FieldScalar root(t, FieldScalar(0), FieldScalar(1));
  return {t, std::move(root)};
}

// Exact square root within the value's own tower, or nullopt when the value
// is not a square there. x = a + b*sqrt(r): a root c + d*sqrt(r) satisfies
// c^2 + d^2 r = a and 2cd = b, so c^2 = (a +- sqrt(a^2 - b^2 r)) / 2.
std::optional<FieldScalar> FieldScalar::try_sqrt(const FieldScalar& x) {
  if (!x.tw_) {
    auto r = rational_sqrt_exact(x.q_);
    if (!r) return std::nullopt;
    return FieldScalar(*r);
  }
  const FieldScalar& a = *x.a_;
  const FieldScalar& b = *x.b_;
  FieldScalar r = embed(*x.tw_->radicand, x.tw_->base);
  if (b.is_zero()) {
    if (auto s = try_sqrt(a)) return FieldScalar(x.tw_, std::move(*s), FieldScalar(0));
    if (auto t = try_sqrt(a / r)) return FieldScalar(x.tw_, FieldScalar(0), std::move(*t));
    return std::nullopt;
  }
  FieldScalar norm = a * a - b * b * r;
  auto s = try_sqrt(norm);
  if (!s) return std::nullopt;
  const FieldScalar half(make_rational(1, 2));
  for (int variant = 0; variant < 2; ++variant) {
    FieldScalar c2 = variant == 0 ? (a + *s) * half : (a - *s) * half;
    auto c = try_sqrt(c2);
    if (!c || c->is_zero()) continue;
    FieldScalar d = b / (FieldScalar(2) * *c);
    FieldScalar root(x.tw_, std::move(*c), std::move(d));
    if (root.sign() < 0) root = -root;
    return root;
  }
  return std::nullopt;
}

FieldScalar FieldScalar::add_same(const FieldScalar& x, const FieldScalar& y) {
  if (!x.tw_) return FieldScalar(Rational(x.q_ + y.q_));
  return FieldScalar(x.tw_, *x.a_ + *y.a_, *x.b_ + *y.b_);
}

FieldScalar FieldScalar::mul_same(const FieldScalar& x, const FieldScalar& y) {
  if (!x.tw_) return FieldScalar(Rational(x.q_ * y.q_));
  FieldScalar r = embed(*x.tw_->radicand, x.tw_->base);
  return FieldScalar(x.tw_, *x.a_ * *y.a_ + *x.b_ * *y.b_ * r,
                     *x.a_ * *y.b_ + *x.b_ * *y.a_);
}

FieldScalar operator+(const FieldScalar& x, const FieldScalar& y) {
  FieldScalar xx = x, yy = y;
  FieldScalar::align(xx, yy);
  return FieldScalar::add_same(xx, yy);
}

FieldScalar operator-(const FieldScalar& x, const FieldScalar& y) {
  return x + (-y);
}

FieldScalar FieldScalar::operator-() const {
  if (!tw_) return FieldScalar(Rational(-q_));
  return FieldScalar(tw_, -*a_, -*b_);
}

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
  FieldScalar xx = x, yy = y;
  FieldScalar::align(xx, yy);
  return FieldScalar::mul_same(xx, yy);
}

FieldScalar FieldScalar::inverse() const {
  if (!tw_) {
    if (q_ == 0) throw std::domain_error("division by zero");
    return FieldScalar(Rational(1 / q_));
  }
  // 1/(a + b sqrt(r)) = (a - b sqrt(r)) / (a^2 - b^2 r); the denominator
  // vanishes only for the zero element since r is non-square in its level.
  FieldScalar r = embed(*tw_->radicand, tw_->base);
  FieldScalar norm = *a_ * *a_ - *b_ * *b_ * r;
  if (norm.is_zero()) {
    if (is_zero()) throw std::domain_error("division by zero");
    throw std::logic_error("square radicand slipped into a tower");
  }
  FieldScalar ninv = norm.inverse();
  return FieldScalar(tw_, *a_ * ninv, -(*b_ * ninv));
}

FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) {
  return x * y.inverse();
}

FieldScalar FieldScalar::pow(unsigned long e) const {
  FieldScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

int FieldScalar::sign() const {
  if (!tw_) return sgn(q_);
  if (is_zero()) return 0;
  // fast path: a coarse certified enclosure decides whenever it excludes 0
  Interval approx = enclosure(64);
  if (int s = approx.sign(); s != 0) return s;
  return sign_exact();
}

int FieldScalar::sign_exact() const {
  if (!tw_) return sgn(q_);
  int sa = a_->sign();
  int sb = b_->sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2 r
  FieldScalar r = embed(*tw_->radicand, tw_->base);
  int t = (*a_ * *a_ - *b_ * *b_ * r).sign();
  return sa > 0 ? t : -t;
}

FieldScalar FieldScalar::sqrt(const FieldScalar& x) {
  int s = x.sign();
  if (s < 0) throw std::domain_error("sqrt of a negative value");
  if (s == 0) return FieldScalar(0);
  auto [tower, root] = ensure_sqrt(x, x.tw_);
  return root;
}

Interval FieldScalar::enclosure(mpfr_prec_t prec) const {
  if (!tw_) return Interval::from_rational(q_, prec);
  Interval r = tw_->radicand->enclosure(prec);
  return a_->enclosure(prec) + b_->enclosure(prec) * r.sqrt();
}

IntervalApprox FieldScalar::to_interval(long bits) const {
  if (bits < 16) throw std::invalid_argument("to_interval: precision < 16 bits");
  for (mpfr_prec_t p = bits + 16;; p *= 2) {
    Interval box = enclosure(p);
    Rational bound(1);
    Rational m = box.mag();
    if (m > bound) bound = m;
    mpq_div_2exp(bound.get_mpq_t(), bound.get_mpq_t(),
                 static_cast<unsigned long>(bits - 2));
    if (box.width() <= bound)
      return IntervalApprox{box.lo_rational(), box.hi_rational(), bits};
    if (p > 64 * (bits + 16))
      throw std::runtime_error("to_interval failed to converge");
  }
}

double FieldScalar::to_double() const {
  Interval box = enclosure(64);
  return (box.lo_double() + box.hi_double()) / 2;
}

std::string FieldScalar::decimal(int sig_digits) const {
  long bits = static_cast<long>(sig_digits * 3.33) + 16;
  return enclosure(bits).decimal_midpoint(sig_digits);
}

std::string FieldScalar::to_string() const {
  if (!tw_) return rational_to_string(q_);
  return "(" + a_->to_string() + " + " + b_->to_string() + "*sqrt(" +
         tw_->radicand->to_string() + "))";
}

nlohmann::json FieldScalar::to_json() const {
  if (auto q = as_rational()) return rational_to_string(*q);
  nlohmann::json j;
  j["a"] = a_->to_json();
  j["b"] = b_->to_json();
  j["r"] = tw_->radicand->to_json();
  return j;
}

FieldScalar FieldScalar::from_json(const nlohmann::json& j) {
  if (j.is_string()) return FieldScalar(rational_from_string(j.get<std::string>()));
  if (j.is_number_integer()) return FieldScalar(j.get<long>());
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("r"))
    throw std::invalid_argument("bad FieldScalar JSON");
  FieldScalar a = from_json(j.at("a"));
  FieldScalar b = from_json(j.at("b"));
  FieldScalar r = from_json(j.at("r"));
  return a + b * sqrt(r);
}

Integer FieldScalar::floor() const {
  if (auto q = as_rational()) return rational_floor(*q);
  for (mpfr_prec_t p = 64;; p *= 2) {
    Interval box = enclosure(p);
    Integer flo = rational_floor(box.lo_rational());
    Integer fhi = rational_floor(box.hi_rational());
    if (flo == fhi) return flo;
    if (fhi == flo + 1) {
      // x might be exactly the integer fhi
      int s = (*this - FieldScalar(Rational(fhi))).sign();
      if (s == 0) return fhi;
      return s > 0 ? fhi : flo;
    }
    if (p > 1 << 20) throw std::runtime_error("floor failed to converge");
  }
}

Integer FieldScalar::ceil() const {
  return -((-*this).floor());
}

}  // namespace latfree
