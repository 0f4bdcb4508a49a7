#pragma once

#include <nlohmann/json_fwd.hpp>

#include "latfree/width.hpp"

namespace latfree {

struct ExtremalSimplex {
  int dim = 0;                    // 4 or 5
  std::vector<Vector> vertices;   // d+1 cyclic shifts of v, in R^{d+1}
  FieldScalar claimed_width;
};

// Exact coordinates of the explicit 4- and 5-dimensional local maximizers.
ExtremalSimplex build_delta4();
ExtremalSimplex build_delta5();

struct ExtremalVerification {
  AVector recovered_a;            // normalized to a_1 = 0, a_{d+1} = 1
  bool lattice_free_certificate = false;  // monotone-a path
  bool lattice_free_brute_force = false;
  WidthReport width;
  bool width_matches_exactly = false;
  bool width_matches_60bit = false;
  std::string certification_path;
};

// Recovers the circulant inequality description from the vertex list,
// certifies lattice-freeness (monotone a, cross-checked by brute force) and
// computes the lattice width of the projection.
ExtremalVerification verify_extremal(const ExtremalSimplex& s, int workers = 1);

struct OptimizeConfig {
  std::vector<double> start;      // free coordinates a_2..a_d; empty = family
  double tol = 1e-13;
  int max_iter = 40000;
  int restarts = 7;
  double step = 0.05;
  unsigned seed = 0;
};

struct OptimizationResult {
  std::vector<double> a_star;     // full vector, a_1 = 0, a_{d+1} = 1
  double objective = 0;           // v_1 - v_{d+1}
  double solve_residual = 0;      // inf-norm residual of the final solve
  bool monotone = false;          // adjacent differences >= -1e-9
  std::vector<double> trace;      // best objective per accepted improvement
  long iterations = 0;
};

// Derivative-free (Nelder-Mead) maximization of v_1 - v_{d+1} over the free
// coordinates a_2..a_d with a_1 = 0, a_{d+1} = 1; v solves the circulant
// system numerically at each iterate. Deterministic given the config.
OptimizationResult optimize_a(int d, const OptimizeConfig& config = {});

struct ProbeReport {
  int samples = 0;
  int lattice_free = 0;
  int wider_than_claimed = 0;
  int violations = 0;  // simultaneously lattice-free and strictly wider
};

// Stochastic local-maximality sanity check: perturbs the projected vertices
// by rational noise of magnitude <= epsilon and tests each sample for
// lattice-freeness and for lattice width exceeding the claimed width.
ProbeReport perturbation_probe(const ExtremalSimplex& s, double epsilon,
                               int samples, unsigned seed);

nlohmann::json optimization_to_json(const OptimizationResult& r);
nlohmann::json verification_to_json(const ExtremalVerification& v);
nlohmann::json probe_to_json(const ProbeReport& r);
OptimizeConfig optimize_config_from_json(const nlohmann::json& j);

}  // namespace latfree
