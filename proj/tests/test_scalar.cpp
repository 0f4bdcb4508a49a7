#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include <random>

#include "latfree/field_scalar.hpp"

using latfree::FieldScalar;
using latfree::Rational;
using latfree::make_rational;

namespace {

FieldScalar sqrt_of(long v) { return FieldScalar::sqrt(FieldScalar(v)); }

// random rational with small numerator/denominator
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return make_rational(num(rng), den(rng));
}

// random nested-radical value: q0 + q1*sqrt(n1) + q2*sqrt(q3 + sqrt(n1))
FieldScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> rad(2, 30);
  FieldScalar s1 = sqrt_of(rad(rng));
  FieldScalar x = FieldScalar(random_rational(rng)) +
                  FieldScalar(random_rational(rng)) * s1;
  std::uniform_int_distribution<int> deep(0, 1);
  if (deep(rng)) {
    FieldScalar inner = FieldScalar(Rational(rad(rng))) + s1;
    x = x + FieldScalar(random_rational(rng)) * FieldScalar::sqrt(inner);
  }
  return x;
}

}  // namespace

TEST_CASE("conjugate product (1+sqrt2)(1-sqrt2) = -1") {
  FieldScalar s2 = sqrt_of(2);
  FieldScalar p = (FieldScalar(1) + s2) * (FieldScalar(1) - s2);
  CHECK(p == FieldScalar(-1));
}

TEST_CASE("x/x = 1 for nonzero x") {
  FieldScalar x = FieldScalar(3) + FieldScalar(2) * sqrt_of(7);
  CHECK((x / x).is_one());
  CHECK_THROWS_AS(FieldScalar(1) / FieldScalar(0), std::domain_error);
}

TEST_CASE("delta(3) = 1/(1 - sqrt(1/2)) = 2 + sqrt(2)") {
  FieldScalar half(make_rational(1, 2));
  FieldScalar delta = FieldScalar(1) / (FieldScalar(1) - FieldScalar::sqrt(half));
  FieldScalar expect = FieldScalar(2) + sqrt_of(2);
  CHECK(delta == expect);
  auto box = delta.to_interval(53);
  CHECK(box.lower <= make_rational(341421357, 100000000));
  CHECK(box.upper >= make_rational(341421356, 100000000));
}

TEST_CASE("sign determination") {
  CHECK((sqrt_of(2) - FieldScalar(1)).sign() == 1);
  FieldScalar z = FieldScalar(0) + FieldScalar(0) * sqrt_of(5);
  CHECK(z.sign() == 0);
  CHECK(z.is_zero());
  // sqrt(5 - 2 sqrt 5) vs 0.7265425 (true value 0.72654253...)
  FieldScalar inner = FieldScalar(5) - FieldScalar(2) * sqrt_of(5);
  FieldScalar s = FieldScalar::sqrt(inner);
  CHECK((s - FieldScalar(make_rational(7265425, 10000000))).sign() == 1);
  CHECK((s - FieldScalar(make_rational(7265426, 10000000))).sign() == -1);
}

TEST_CASE("adjoin_sqrt of perfect squares stays in the lower level") {
  FieldScalar four = FieldScalar(4);
  CHECK(FieldScalar::sqrt(four) == FieldScalar(2));
  CHECK(FieldScalar::sqrt(four).depth() == 0);
  // square inside a tower: sqrt((2+sqrt2)^2) = 2+sqrt2
  FieldScalar x = FieldScalar(2) + sqrt_of(2);
  CHECK(FieldScalar::sqrt(x * x) == x);
  CHECK_THROWS_AS(FieldScalar::sqrt(FieldScalar(-1)), std::domain_error);
}

TEST_CASE("nested radical identities over Q(sqrt5)") {
  FieldScalar s5 = sqrt_of(5);
  FieldScalar p = FieldScalar(5) + FieldScalar(2) * s5;
  FieldScalar m = FieldScalar(5) - FieldScalar(2) * s5;
  FieldScalar sp = FieldScalar::sqrt(p);
  FieldScalar sm = FieldScalar::sqrt(m);
  CHECK(sp * sm == s5);  // (5+2s5)(5-2s5) = 5
  FieldScalar sum = sp + sm;
  FieldScalar target = FieldScalar::sqrt(FieldScalar(10) + FieldScalar(2) * s5);
  CHECK(sum == target);
  CHECK(sum * sum == FieldScalar(10) + FieldScalar(2) * s5);
}

TEST_CASE("to_interval width contract") {
  FieldScalar third(make_rational(1, 3));
  auto box = third.to_interval(53);
  Rational budget(1);
  mpq_div_2exp(budget.get_mpq_t(), budget.get_mpq_t(), 51);
  CHECK(box.width() <= budget);
  CHECK(box.lower <= make_rational(1, 3));
  CHECK(box.upper >= make_rational(1, 3));

  // delta(2) = 3 + sqrt(6) ~ 5.44948974
  FieldScalar d2 = FieldScalar(1) / (FieldScalar(1) - FieldScalar::sqrt(FieldScalar(make_rational(2, 3))));
  CHECK(d2 == FieldScalar(3) + sqrt_of(6));
  auto b2 = d2.to_interval(53);
  CHECK(b2.lower <= make_rational(544948975, 100000000));
  CHECK(b2.upper >= make_rational(544948974, 100000000));
  CHECK_THROWS_AS(third.to_interval(8), std::invalid_argument);
}

TEST_CASE("field axioms on randomized inputs") {
  std::mt19937 rng(20260826);
  for (int iter = 0; iter < 40; ++iter) {
    FieldScalar x = random_scalar(rng);
    FieldScalar y = random_scalar(rng);
    FieldScalar z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("sign agrees with interval sign when interval excludes zero") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    FieldScalar x = random_scalar(rng);
    auto box = x.enclosure(80);
    if (int s = box.sign(); s != 0) CHECK(s == x.sign());
  }
}

TEST_CASE("sqrt(x)^2 = x for randomized positive x") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    FieldScalar x = random_scalar(rng);
    if (x.sign() <= 0) x = x * x + FieldScalar(1);
    FieldScalar r = FieldScalar::sqrt(x);
    CHECK(r * r == x);
    CHECK(r.sign() > 0);
  }
}

TEST_CASE("json round trip") {
  FieldScalar x = FieldScalar(make_rational(-7, 3)) +
                  FieldScalar(make_rational(2, 5)) *
                      FieldScalar::sqrt(FieldScalar(3) + sqrt_of(2));
  nlohmann::json j = x.to_json();
  FieldScalar y = FieldScalar::from_json(j);
  CHECK(x == y);
  CHECK(FieldScalar::from_json(nlohmann::json("5/7")) ==
        FieldScalar(make_rational(5, 7)));
}

TEST_CASE("floor and ceil") {
  FieldScalar s2 = sqrt_of(2);
  CHECK(s2.floor() == 1);
  CHECK(s2.ceil() == 2);
  CHECK(FieldScalar(3).floor() == 3);
  CHECK((-s2).floor() == -2);
  CHECK((FieldScalar(2) + s2 * FieldScalar(0)).floor() == 2);
}
