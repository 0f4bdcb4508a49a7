#include "latfree/extremal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace latfree {

namespace {

ExtremalSimplex from_vertex(int dim, Vector v, FieldScalar claimed) {
  ExtremalSimplex s;
  s.dim = dim;
  s.claimed_width = std::move(claimed);
  for (int i = 0; i <= dim; ++i) s.vertices.push_back(cyclic_shift(v, i));
  // construction-time invariants: coordinates sum to 1, shifts distinct
  for (const auto& vert : s.vertices) {
    FieldScalar sum(0);
    for (const auto& c : vert) sum += c;
    if (!sum.is_one())
      throw std::logic_error("extremal vertex does not lie in H");
  }
  for (size_t i = 0; i < s.vertices.size(); ++i)
    for (size_t j = i + 1; j < s.vertices.size(); ++j)
      if (s.vertices[i] == s.vertices[j])
        throw std::logic_error("extremal shifts not distinct");
  return s;
}

}  // namespace

ExtremalSimplex build_delta4() {
  FieldScalar s5 = FieldScalar::sqrt(FieldScalar(5));
  FieldScalar sA = FieldScalar::sqrt(FieldScalar(5) - FieldScalar(2) * s5);
  FieldScalar sB = FieldScalar::sqrt(FieldScalar(5) + FieldScalar(2) * s5);
  FieldScalar sC = FieldScalar::sqrt(FieldScalar(10) + FieldScalar(2) * s5);
  FieldScalar fifth(make_rational(1, 5));
  Vector v(5);
  v[0] = (FieldScalar(7) - FieldScalar(2) * s5 + FieldScalar(2) * sC) * fifth;
  v[1] = (FieldScalar(-3) + FieldScalar(4) * s5 - FieldScalar(4) * sA) * fifth;
  v[2] = (FieldScalar(7) - FieldScalar(4) * s5 + FieldScalar(6) * sA) * fifth;
  v[3] = v[1];
  v[4] = (FieldScalar(-3) - FieldScalar(2) * s5 - FieldScalar(2) * sB) * fifth;
  FieldScalar claimed =
      FieldScalar(2) +
      FieldScalar(2) * FieldScalar::sqrt(FieldScalar(1) +
                                         FieldScalar(2) / s5);
  return from_vertex(4, std::move(v), std::move(claimed));
}

ExtremalSimplex build_delta5() {
  FieldScalar s3 = FieldScalar::sqrt(FieldScalar(3));
  FieldScalar e18(make_rational(1, 18));
  FieldScalar e3(make_rational(1, 3));
  Vector v(6);
  v[0] = (FieldScalar(57) - FieldScalar(7) * s3) * e18;
  v[1] = (FieldScalar(4) * s3 - FieldScalar(5)) * e3;
  v[2] = (FieldScalar(27) - FieldScalar(11) * s3) * e18;
  v[3] = v[2];
  v[4] = v[1];
  v[5] = (FieldScalar(-33) - FieldScalar(19) * s3) * e18;
  FieldScalar claimed = FieldScalar(5) + FieldScalar(2) / s3;
  return from_vertex(5, std::move(v), std::move(claimed));
}

// Recover the defining inequality <a, x> <= a_{d+1} (normalized a_1 = 0,
// a_{d+1} = 1) of the facet spanned by vertices 1..d; circulant symmetry
// then gives the whole description.
static AVector recover_a(const ExtremalSimplex& s) {
  const int d = s.dim;
  // unknowns u = (a_2, ..., a_{d+1}, c); equations:
  //   sum_j a_j vert_m[j] - c = 0  for m = 1..d   (a_1 = 0)
  //   a_{d+1} = 1
  const int n = d + 1;
  Matrix m(n, Vector(n, FieldScalar(0)));
  Vector rhs(n, FieldScalar(0));
  for (int eq = 0; eq < d; ++eq) {
    const Vector& vert = s.vertices[eq + 1];
    for (int j = 1; j <= d; ++j) m[eq][j - 1] = vert[j];
    m[eq][n - 1] = FieldScalar(-1);
  }
  m[n - 1][d - 1] = FieldScalar(1);
  rhs[n - 1] = FieldScalar(1);
  Vector u = solve_linear(std::move(m), std::move(rhs));

  AVector a;
  a.entries.push_back(FieldScalar(0));
  for (int j = 0; j < d; ++j) a.entries.push_back(u[j]);
  const FieldScalar& c = u[n - 1];

  // sanity: every vertex satisfies <a, x> <= c, vertex 0 strictly
  for (size_t i = 0; i < s.vertices.size(); ++i) {
    int cmp = (dot(a.entries, s.vertices[i]) - c).sign();
    if (i == 0 ? cmp >= 0 : cmp != 0)
      throw std::logic_error("recovered facet does not support the simplex");
  }
  if (!(c == a.entries.back()))
    throw std::logic_error("recovered offset is not a_{d+1}");
  return a;
}

ExtremalVerification verify_extremal(const ExtremalSimplex& s, int workers) {
  ExtremalVerification out;
  out.recovered_a = recover_a(s);
  out.lattice_free_certificate =
      latticefree_certificate(out.recovered_a).has_value();

  SimplexSpec spec;
  spec.params.d = s.dim;
  spec.a = out.recovered_a;
  spec.vertices = s.vertices;
  ProjectedPolytope proj = project(spec);
  out.lattice_free_brute_force = brute_force_interior_points(proj).empty();

  out.width = lattice_width(proj, workers);
  out.width_matches_exactly = (out.width.value == s.claimed_width);
  auto claimed_box = s.claimed_width.to_interval(60);
  auto value_box = out.width.value.to_interval(60);
  out.width_matches_60bit = !(claimed_box.upper < value_box.lower ||
                              value_box.upper < claimed_box.lower);
  out.certification_path =
      "exhaustive primitive-direction enumeration up to radius " +
      rational_to_string(out.width.enumeration_radius) +
      " with e1 upper bound";
  return out;
}

namespace {

bool solve_at(int d, const std::vector<double>& free_coords,
              std::vector<double>& v, double& residual) {
  std::vector<double> a(d + 1);
  a[0] = 0.0;
  for (int i = 0; i < d - 1; ++i) a[i + 1] = free_coords[i];
  a[d] = 1.0;
  // a large residual means the system is effectively singular at double
  // precision; the objective diverges there, so reject the iterate
  return solve_circulant_numeric(a, v, residual) && residual <= 1e-9;
}

// candidate width directions: nonzero sign vectors in {-1,0,1}^d up to
// global sign (the minimizing direction at the optima of interest is a
// 0/1 vector, and ties between several of them create the local maximum)
std::vector<std::vector<int>> sign_directions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(d, -1);
  for (;;) {
    int first = 0;
    while (first < d && c[first] == 0) ++first;
    if (first < d && c[first] > 0) out.push_back(c);
    int i = d - 1;
    while (i >= 0 && c[i] == 1) c[i--] = -1;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

// min over candidate directions of the directional width of the projected
// simplex; this is the quantity the optimizer maximizes (v_1 - v_{d+1} alone
// is unbounded and only coincides with the width where directions tie)
double width_objective(int d, const std::vector<double>& free_coords,
                       const std::vector<std::vector<int>>& dirs) {
  std::vector<double> v;
  double residual;
  if (!solve_at(d, free_coords, v, residual))
    return -std::numeric_limits<double>::infinity();
  const int n = d + 1;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : dirs) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int shift = 0; shift < n; ++shift) {
      double s = 0;  // c . (cyclic right shift of v by `shift`, last dropped)
      for (int j = 0; j < d; ++j) s += c[j] * v[((j - shift) % n + n) % n];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    best = std::min(best, hi - lo);
  }
  return best;
}

}  // namespace

OptimizationResult optimize_a(int d, const OptimizeConfig& config) {
  if (d < 2) throw std::invalid_argument("optimize_a: d >= 2 required");
  const int n = d - 1;  // free coordinates

  std::vector<double> x0;
  if (!config.start.empty()) {
    if (config.start.size() != size_t(n))
      throw std::invalid_argument("optimize_a: start size must be d - 1");
    x0 = config.start;
  } else {
    // family start: a_i = (delta^{i-1} - 1) / (delta^d - 1)
    Params p = make_params(d);
    double delta = p.delta.to_double();
    double scale = std::pow(delta, d) - 1;
    for (int i = 2; i <= d; ++i)
      x0.push_back((std::pow(delta, i - 1) - 1) / scale);
  }

  OptimizationResult result;
  const auto dirs = sign_directions(d);
  auto f = [&](const std::vector<double>& x) {
    return width_objective(d, x, dirs);
  };

  std::vector<double> best_x = x0;
  double best_f = f(x0);
  result.trace.push_back(best_f);
  double step = config.step;

  for (int round = 0; round <= config.restarts; ++round) {
    // Nelder-Mead from best_x
    std::vector<std::vector<double>> simplex(n + 1, best_x);
    std::vector<double> fv(n + 1);
    for (int i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (int i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    for (; result.iterations < config.max_iter; ++result.iterations) {
      // order descending (maximization)
      std::vector<int> idx(n + 1);
      for (int i = 0; i <= n; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(),
                [&](int a, int b) { return fv[a] > fv[b]; });
      {
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (int i : idx) {
          s2.push_back(simplex[i]);
          f2.push_back(fv[i]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
      }
      if (fv[0] > best_f) {
        best_f = fv[0];
        best_x = simplex[0];
        result.trace.push_back(best_f);
      }
      if (std::isfinite(fv[n]) && fv[0] - fv[n] < config.tol) break;

      std::vector<double> centroid(n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;
      auto blend = [&](double t) {
        std::vector<double> p(n);
        for (int j = 0; j < n; ++j)
          p[j] = centroid[j] + t * (simplex[n][j] - centroid[j]);
        return p;
      };
      std::vector<double> xr = blend(-1.0);
      double fr = f(xr);
      if (fr > fv[0]) {
        std::vector<double> xe = blend(-2.0);
        double fe = f(xe);
        if (fe > fr) {
          simplex[n] = xe;
          fv[n] = fe;
        } else {
          simplex[n] = xr;
          fv[n] = fr;
        }
      } else if (fr > fv[n - 1]) {
        simplex[n] = xr;
        fv[n] = fr;
      } else {
        std::vector<double> xc = blend(0.5);
        double fc = f(xc);
        if (fc > fv[n]) {
          simplex[n] = xc;
          fv[n] = fc;
        } else {
          for (int i = 1; i <= n; ++i) {
            for (int j = 0; j < n; ++j)
              simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
            fv[i] = f(simplex[i]);
          }
        }
      }
    }
    step *= 0.3;  // restart with a finer probe around the incumbent
  }

  if (!std::isfinite(best_f))
    throw std::runtime_error("optimize_a: no nonsingular iterate found");

  // report v_1 - v_{d+1} at the optimum; it coincides with the width there
  std::vector<double> v;
  double residual = 0;
  if (!solve_at(d, best_x, v, residual))
    throw std::runtime_error("optimize_a: final solve is singular");
  result.objective = v[0] - v[d];
  result.solve_residual = residual;
  result.a_star.assign(1, 0.0);
  for (double c : best_x) result.a_star.push_back(c);
  result.a_star.push_back(1.0);
  result.monotone = true;
  for (size_t i = 0; i + 1 < result.a_star.size(); ++i)
    if (result.a_star[i + 1] - result.a_star[i] < -1e-9) result.monotone = false;
  return result;
}

ProbeReport perturbation_probe(const ExtremalSimplex& s, double epsilon,
                               int samples, unsigned seed) {
  if (epsilon < 0) throw std::invalid_argument("probe: epsilon must be >= 0");
  SimplexSpec spec;
  spec.params.d = s.dim;
  spec.vertices = s.vertices;
  ProjectedPolytope base = project(spec);

  std::mt19937 rng(seed);
  // rational noise on a 2^-20 grid so the perturbed polytope stays exact
  const long grid = 1L << 20;
  std::uniform_int_distribution<long> noise(
      -static_cast<long>(epsilon * grid), static_cast<long>(epsilon * grid));

  ProbeReport rep;
  rep.samples = samples;
  for (int it = 0; it < samples; ++it) {
    ProjectedPolytope q = base;
    for (auto& v : q.vertices)
      for (auto& coord : v)
        coord += FieldScalar(make_rational(noise(rng), grid));
    bool lattice_free = brute_force_interior_points(q).empty();
    if (lattice_free) ++rep.lattice_free;
    WidthReport w = lattice_width(q);
    bool wider = (w.value - s.claimed_width).sign() > 0;
    if (wider) ++rep.wider_than_claimed;
    if (lattice_free && wider) ++rep.violations;
  }
  return rep;
}

nlohmann::json optimization_to_json(const OptimizationResult& r) {
  nlohmann::json j;
  j["a_star"] = r.a_star;
  j["objective"] = r.objective;
  j["solve_residual"] = r.solve_residual;
  j["monotone"] = r.monotone;
  j["iterations"] = r.iterations;
  j["trace"] = r.trace;
  return j;
}

nlohmann::json verification_to_json(const ExtremalVerification& v) {
  nlohmann::json j;
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : v.recovered_a.entries) a.push_back(e.to_json());
  j["recovered_a"] = a;
  j["lattice_free_certificate"] = v.lattice_free_certificate;
  j["lattice_free_brute_force"] = v.lattice_free_brute_force;
  j["width"] = width_report_to_json(v.width);
  j["width_matches_exactly"] = v.width_matches_exactly;
  j["width_matches_60bit"] = v.width_matches_60bit;
  j["certification_path"] = v.certification_path;
  return j;
}

nlohmann::json probe_to_json(const ProbeReport& r) {
  nlohmann::json j;
  j["samples"] = r.samples;
  j["lattice_free"] = r.lattice_free;
  j["wider_than_claimed"] = r.wider_than_claimed;
  j["violations"] = r.violations;
  return j;
}

OptimizeConfig optimize_config_from_json(const nlohmann::json& j) {
  OptimizeConfig c;
  if (j.contains("start")) c.start = j.at("start").get<std::vector<double>>();
  if (j.contains("tol")) c.tol = j.at("tol").get<double>();
  if (j.contains("max_iter")) c.max_iter = j.at("max_iter").get<int>();
  if (j.contains("restarts")) c.restarts = j.at("restarts").get<int>();
  if (j.contains("step")) c.step = j.at("step").get<double>();
  if (j.contains("seed")) c.seed = j.at("seed").get<unsigned>();
  return c;
}

}  // namespace latfree
