#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latfree/construct.hpp>
#include <latfree/continuum.hpp>

#include <nlohmann/json.hpp>

#include <cmath>

using namespace latfree;

TEST_CASE("trapezoid integral on simple functions") {
  CHECK(integral(sample_grid(10, [](double) { return 1.0; })) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integral(sample_grid(10, [](double t) { return t; })) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // trapezoid is exact for piecewise-linear integrands
  CHECK(integral(sample_grid(1000, [](double t) { return std::exp(t); })) ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-6));
}

TEST_CASE("convolution with zero or constant weights") {
  GridFunction y = sample_grid(40, [](double t) { return t * t; });
  GridFunction zero = sample_grid(40, [](double) { return 0.0; });
  for (double v : convolve(y, zero).samples) CHECK(v == 0.0);

  GridFunction one = sample_grid(40, [](double) { return 1.0; });
  GridFunction ones = sample_grid(40, [](double) { return 1.0; });
  for (double v : convolve(one, ones).samples)
    CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("wrapped convolution of y(t) = t against constant weight") {
  // split at s = 1 - t by hand:
  //   integral_0^{1-t} (t+s) ds + integral_{1-t}^1 (t+s-1) ds
  //   = (1-t)t + (1-t)^2/2 + t^2/2 = 1/2 for every t
  // (the full-period integral of the wrapped ramp), so C omega is the
  // constant 1/2; trapezoid is exact on each linear piece.
  GridFunction y = sample_grid(16, [](double t) { return t; });
  GridFunction ones = sample_grid(16, [](double) { return 1.0; });
  GridFunction c = convolve(y, ones);
  for (double v : c.samples) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));

  GridFunction small = sample_grid(8, [](double) { return 1.0; });
  CHECK_THROWS_AS(convolve(y, small), std::invalid_argument);
}

TEST_CASE("residual of a deliberately wrong triple") {
  // y = t, omega = 0, lambda = 0: residual = sup |1 - y| = 1 (at t = 0)
  GridFunction y = sample_grid(50, [](double t) { return t; });
  GridFunction zero = sample_grid(50, [](double) { return 0.0; });
  CHECK(residual_sup(y, zero, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exponential solution satisfies the equation to second order") {
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (int n : {100, 1000}) {
      ExponentialSolution sol = exponential_solution(gamma, n);
      CHECK(sol.y.samples.front() == 0.0);
      CHECK(sol.y.samples.back() == doctest::Approx(1.0).epsilon(1e-15));
      GridFunction omega =
          sample_grid(n, [&](double) { return sol.omega; });
      double r = residual_sup(sol.y, omega, sol.lambda);
      CAPTURE(gamma);
      CAPTURE(n);
      CHECK(r <= 10.0 / (double(n) * n));
    }
  }
  CHECK_THROWS_AS(exponential_solution(0.0, 100), std::invalid_argument);
}

TEST_CASE("doubling the grid cuts the residual about fourfold") {
  ExponentialSolution s1 = exponential_solution(1.5, 200);
  ExponentialSolution s2 = exponential_solution(1.5, 400);
  GridFunction w1 = sample_grid(200, [&](double) { return s1.omega; });
  GridFunction w2 = sample_grid(400, [&](double) { return s2.omega; });
  double r1 = residual_sup(s1.y, w1, s1.lambda);
  double r2 = residual_sup(s2.y, w2, s2.lambda);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("lambda equals one minus the integral of y") {
  for (double gamma : {0.5, 1.0, 2.0, 5.0}) {
    ExponentialSolution sol = exponential_solution(gamma, 1000);
    CHECK(std::abs(sol.lambda - (1.0 - integral(sol.y))) < 1e-6);
    CHECK(sol.lambda <= 1.0);
  }
  // gamma large: integral of y -> 0, so lambda -> 1
  CHECK(exponential_solution(50.0, 100).lambda ==
        doctest::Approx(1.0 - 1.0 / 50.0).epsilon(1e-10));
  CHECK(exponential_solution(200.0, 100).lambda > 0.99);
}

TEST_CASE("discretization picks aligned samples") {
  GridFunction ramp = sample_grid(10, [](double t) { return t; });
  std::vector<double> a = discretize_to_a(ramp, 2);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == 0.0);
  CHECK(a[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(discretize_to_a(ramp, 3), std::invalid_argument);
}

TEST_CASE("family coefficients are an exponential discretization") {
  // (delta^{i-1} - 1)/(delta^d - 1) = (e^{gamma (i-1)/d} - 1)/(e^gamma - 1)
  // with gamma = d ln(delta)
  for (int d : {4, 8, 16}) {
    Params p = make_params(d);
    double delta = p.delta.to_double();
    double gamma = d * std::log(delta);
    ExponentialSolution sol = exponential_solution(gamma, d);
    std::vector<double> a = discretize_to_a(sol.y, d);
    AVector fam = build_a(p).normalized();
    for (int i = 0; i <= d; ++i)
      CHECK(a[i] == doctest::Approx(fam.entries[i].to_double()).epsilon(1e-12));
  }
}

TEST_CASE("discrete lambda grows toward the continuum value") {
  // fixed gamma: the finite systems approach the continuum solution at
  // rate O(1/d); along the family's own gamma = d ln(delta) the continuum
  // value drifts with d, so a fixed-gamma sweep is the meaningful closure
  const double gamma = 2.0;
  double lambda = exponential_solution(gamma, 2).lambda;
  double prev = 0;
  for (int d : {8, 16, 32, 64, 128}) {
    ExponentialSolution sol = exponential_solution(gamma, d);
    double ld = discrete_lambda(discretize_to_a(sol.y, d));
    CAPTURE(d);
    CHECK(std::abs(ld - lambda) <= 5.0 / d);
    CHECK(ld > prev);
    prev = ld;
  }
}

TEST_CASE("discrete lambda increases along the family pairing") {
  double prev = 0;
  for (int d : {4, 8, 16, 32, 64}) {
    Params p = make_params(d);
    double gamma = d * std::log(p.delta.to_double());
    ExponentialSolution sol = exponential_solution(gamma, d);
    double ld = discrete_lambda(discretize_to_a(sol.y, d));
    CHECK(ld > prev);
    prev = ld;
  }
}

TEST_CASE("grid functions and reports serialize round-trip") {
  GridFunction g = sample_grid(6, [](double t) { return t * t - t; });
  GridFunction back = grid_from_json(grid_to_json(g));
  CHECK(back.samples == g.samples);

  ExponentialSolution sol = exponential_solution(1.0, 100);
  GridFunction omega = sample_grid(100, [&](double) { return sol.omega; });
  ContinuumReport rep = continuum_report(sol.y, omega, sol.lambda);
  nlohmann::json j = continuum_report_to_json(rep);
  CHECK(j.at("lambda").get<double>() == rep.lambda);
  CHECK(j.at("residual_sup").get<double>() == rep.residual_sup);
  CHECK(std::abs(rep.lambda - (1.0 - rep.integral_y)) < 1e-5);

  nlohmann::json bad = {{"n", 3}, {"samples", {0.0, 1.0}}};
  CHECK_THROWS_AS(grid_from_json(bad), std::invalid_argument);
}
