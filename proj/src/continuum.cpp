#include "latfree/continuum.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

#include "latfree/construct.hpp"

namespace latfree {

double integral(const GridFunction& f) {
  const int n = f.n();
  if (n < 1) throw std::invalid_argument("integral: need at least two samples");
  double sum = 0.5 * (f.samples.front() + f.samples.back());
  for (int i = 1; i < n; ++i) sum += f.samples[i];
  return sum / n;
}

GridFunction convolve(const GridFunction& y, const GridFunction& omega) {
  const int n = y.n();
  if (omega.n() != n)
    throw std::invalid_argument("convolve: grid sizes differ");
  GridFunction out;
  out.samples.resize(n + 1);
  const double h = 1.0 / n;
  for (int k = 0; k <= n; ++k) {
    // s in [0, 1-t]: y(t+s) directly; s in [1-t, 1]: y(t+s-1).
    // y(1) != y(0) in general, so the two pieces are integrated separately.
    double acc = 0;
    const int split = n - k;
    for (int j = 0; j + 1 <= split; ++j) {
      double g0 = y.samples[k + j] * omega.samples[j];
      double g1 = y.samples[k + j + 1] * omega.samples[j + 1];
      acc += 0.5 * h * (g0 + g1);
    }
    for (int j = split; j + 1 <= n; ++j) {
      double g0 = y.samples[k + j - n] * omega.samples[j];
      double g1 = y.samples[k + j + 1 - n] * omega.samples[j + 1];
      acc += 0.5 * h * (g0 + g1);
    }
    out.samples[k] = acc;
  }
  return out;
}

double residual_sup(const GridFunction& y, const GridFunction& omega,
                    double lambda) {
  const int n = y.n();
  if (omega.n() != n)
    throw std::invalid_argument("residual: grid sizes differ");
  if (n < 2) throw std::invalid_argument("residual: need n >= 2");
  GridFunction conv = convolve(y, omega);
  const double one_minus_int = 1.0 - integral(omega);
  const double h = 1.0 / n;
  const auto& s = y.samples;
  double worst = 0;
  for (int i = 0; i <= n; ++i) {
    double dy;
    if (i == 0)
      dy = (-3 * s[0] + 4 * s[1] - s[2]) / (2 * h);
    else if (i == n)
      dy = (3 * s[n] - 4 * s[n - 1] + s[n - 2]) / (2 * h);
    else
      dy = (s[i + 1] - s[i - 1]) / (2 * h);
    double r = lambda * dy - (1.0 - conv.samples[i] - one_minus_int * s[i]);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

ExponentialSolution exponential_solution(double gamma, int n) {
  if (gamma == 0)
    throw std::invalid_argument(
        "exponential_solution: gamma = 0 degenerates to the affine solution");
  if (n < 2) throw std::invalid_argument("exponential_solution: n >= 2");
  ExponentialSolution sol;
  sol.gamma = gamma;
  const double denom = std::expm1(gamma);
  sol.y = sample_grid(n, [&](double t) { return std::expm1(gamma * t) / denom; });
  // lambda = 1 - integral(y) evaluated in closed form
  sol.lambda = 1.0 - 1.0 / gamma + 1.0 / denom;
  sol.omega = 1.0 + sol.lambda * gamma;
  return sol;
}

std::vector<double> discretize_to_a(const GridFunction& y, int d) {
  const int n = y.n();
  if (d < 1 || n % d != 0)
    throw std::invalid_argument(
        "discretize_to_a: grid size must be a multiple of d");
  const int stride = n / d;
  std::vector<double> a;
  a.reserve(d + 1);
  for (int i = 0; i <= d; ++i) a.push_back(y.samples[i * stride]);
  return a;
}

double discrete_lambda(const std::vector<double>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  if (d < 1) throw std::invalid_argument("discrete_lambda: need d >= 1");
  std::vector<double> v;
  double residual;
  if (!solve_circulant_numeric(a, v, residual))
    throw std::domain_error("discrete_lambda: singular circulant system");
  return (v.front() - v.back()) / (2.0 * d);
}

ContinuumReport continuum_report(const GridFunction& y,
                                 const GridFunction& omega, double lambda) {
  ContinuumReport r;
  r.lambda = lambda;
  r.residual_sup = residual_sup(y, omega, lambda);
  r.integral_y = integral(y);
  return r;
}

nlohmann::json grid_to_json(const GridFunction& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["samples"] = g.samples;
  return j;
}

GridFunction grid_from_json(const nlohmann::json& j) {
  GridFunction g;
  g.samples = j.at("samples").get<std::vector<double>>();
  if (j.at("n").get<int>() != g.n())
    throw std::invalid_argument("grid_from_json: inconsistent grid size");
  return g;
}

nlohmann::json continuum_report_to_json(const ContinuumReport& r) {
  nlohmann::json j;
  j["lambda"] = r.lambda;
  j["residual_sup"] = r.residual_sup;
  j["integral_y"] = r.integral_y;
  return j;
}

}  // namespace latfree
