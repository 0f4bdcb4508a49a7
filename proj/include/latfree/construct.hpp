#pragma once

#include <nlohmann/json_fwd.hpp>

#include "latfree/linalg.hpp"

namespace latfree {

// Family parameters: dimension d and the exact growth factor
// delta = 1 / (1 - sqrt(2/(d+1))), living in Q(sqrt(2(d+1))).
struct Params {
  int d = 0;
  FieldScalar delta;
  long radicand = 0;  // 2(d+1)
};

// Normalization of the facet vector a. The family uses a_1 = 0 and
// a_{d+1} = delta^d - 1; the solver also accepts vectors rescaled to
// a_{d+1} = 1 (the form the circulant system is usually written in).
struct AVector {
  Vector entries;  // size d+1

  int d() const { return static_cast<int>(entries.size()) - 1; }
  const FieldScalar& last() const { return entries.back(); }
  bool is_nondecreasing() const;
  bool is_strictly_increasing() const;
  // rescale to a_1 = 0, a_{d+1} = 1
  AVector normalized() const;
};

struct SimplexSpec {
  Params params;
  AVector a;
  std::vector<Vector> vertices;  // d+1 cyclic shifts of v, each in R^{d+1}
};

struct ProjectedPolytope {
  int dim = 0;
  std::vector<Vector> vertices;  // in R^dim
};

Params make_params(int d);  // throws std::invalid_argument for d < 2

// a_i = delta^{i-1} - 1 via the recurrence a_{i+1} = delta a_i + (delta - 1).
AVector build_a(const Params& params);

// Entries moved `shift` positions to the right, wrapping.
Vector cyclic_shift(const Vector& x, int shift);

// The closed-form vertex v of the simplex (v_2 = ... = v_d).
Vector vertex_closed_form(const Params& params);

// Exact solution of the circulant vertex system: the first equation is
// <1, v> = 1 and the remaining d equations are <shift(a, i), v> = a_{d+1}
// for i = 1..d. With a normalized to a_{d+1} = 1 this is exactly the system
// with all-ones right-hand side.
Vector solve_circulant(const AVector& a);

// The full circulant coefficient matrix (first row ones, then left-shifts
// of a), exposed for residual checks.
Matrix circulant_matrix(const AVector& a);

// Double-precision companion of solve_circulant for iterative callers
// (a normalized to a_{d+1} = 1 expected). Returns false when elimination
// hits a vanishing pivot; otherwise fills v and the inf-norm residual.
bool solve_circulant_numeric(const std::vector<double>& a,
                             std::vector<double>& v, double& residual);

SimplexSpec build_simplex(const Params& params);

// Drop the last coordinate of every vertex.
ProjectedPolytope project(const SimplexSpec& s);

nlohmann::json simplex_to_json(const SimplexSpec& s);
nlohmann::json polytope_to_json(const ProjectedPolytope& p);
ProjectedPolytope polytope_from_json(const nlohmann::json& j);

}  // namespace latfree
