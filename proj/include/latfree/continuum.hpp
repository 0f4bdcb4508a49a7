#pragma once

#include <nlohmann/json_fwd.hpp>

#include <vector>

namespace latfree {

// Uniform samples of a function on [0, 1] at t = 0, 1/n, ..., 1.
struct GridFunction {
  std::vector<double> samples;  // size n + 1

  int n() const { return static_cast<int>(samples.size()) - 1; }
  double at(int i) const { return samples[i]; }
};

// Sample f at the n + 1 grid points.
template <typename F>
GridFunction sample_grid(int n, F&& f) {
  GridFunction g;
  g.samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i)
    g.samples.push_back(f(static_cast<double>(i) / n));
  return g;
}

// Composite-trapezoid integral over [0, 1].
double integral(const GridFunction& f);

// (C omega)(t) = integral over s in [0,1] of y(t+s) omega(s), where y wraps
// as y(t) = y(t-1) on (1, 2]. The wrap makes the integrand jump at
// s = 1 - t (a grid point), so the quadrature is split there to stay
// second order. Throws std::invalid_argument on grid mismatch.
GridFunction convolve(const GridFunction& y, const GridFunction& omega);

// Sup over the grid of |lambda y' - (1 - C omega - (1 - int omega) y)|,
// with y' from central differences (second-order one-sided at the ends).
double residual_sup(const GridFunction& y, const GridFunction& omega,
                    double lambda);

struct ExponentialSolution {
  GridFunction y;   // (e^{gamma t} - 1)/(e^gamma - 1)
  double gamma = 0;
  double omega = 0;   // the constant omega solving the equation
  double lambda = 0;  // = 1 - 1/gamma + 1/(e^gamma - 1)
};

// The constant-omega solution of the width equation: matching the
// exponential parts forces lambda*gamma = omega - 1 and the constant parts
// then pin both values; the identity lambda = 1 - integral(y) holds exactly.
// Throws std::invalid_argument for gamma = 0 (the affine limit).
ExponentialSolution exponential_solution(double gamma, int n);

// a_i = y((i-1)/d) for i = 1..d+1; requires the grid to contain these
// points (n divisible by d). For y-type functions a_1 = 0, a_{d+1} = 1.
std::vector<double> discretize_to_a(const GridFunction& y, int d);

// (v_1 - v_{d+1}) / (2d) with v from the double-precision circulant solve.
double discrete_lambda(const std::vector<double>& a);

struct ContinuumReport {
  double lambda = 0;
  double residual_sup = 0;
  double integral_y = 0;
};

ContinuumReport continuum_report(const GridFunction& y,
                                 const GridFunction& omega, double lambda);

nlohmann::json grid_to_json(const GridFunction& g);
GridFunction grid_from_json(const nlohmann::json& j);
nlohmann::json continuum_report_to_json(const ContinuumReport& r);

}  // namespace latfree
