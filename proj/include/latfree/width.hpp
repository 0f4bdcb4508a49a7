#pragma once

#include <nlohmann/json_fwd.hpp>

#include "latfree/certify.hpp"

namespace latfree {

struct WidthReport {
  FieldScalar value;
  std::vector<long> direction;      // primitive integer vector
  Rational enumeration_radius;      // bound on ||c||_2
  Rational inradius_bound;          // rho
  long candidates_checked = 0;
};

struct BoundPair {
  FieldScalar alpha;                // closed-form family width, exact
  IntervalApprox floor_bound;       // 2d - sqrt(8d+8) + 3
  bool alpha_exceeds_floor = false; // certified
  bool alpha_equals_vertex_gap = false;  // exact check alpha = v1 - v_{d+1}
};

// max - min of <c, vertex> over the vertex list, exact. c != 0.
FieldScalar directional_width(const ProjectedPolytope& p,
                              const std::vector<long>& c);

// Rational rho > 0 with: p contains a ball of radius rho around the vertex
// centroid. Throws for degenerate input.
Rational inradius_lower_bound(const ProjectedPolytope& p);

// Certified exact lattice width by bounded enumeration of primitive integer
// directions. Guarded to dim <= 5. `workers` splits the candidate list; the
// result is deterministic (reduce by value, then lexicographic direction).
WidthReport lattice_width(const ProjectedPolytope& p, int workers = 1);

// Exact alpha for the family plus the floor bound 2d - sqrt(8d+8) + 3.
BoundPair alpha_formula(const Params& params);

// Certified alpha(d) > 2d - sqrt(8d+8) + 3 via interval arithmetic only
// (no exact tower arithmetic); usable for the full d-chain.
bool alpha_exceeds_floor_certified(int d);

nlohmann::json width_report_to_json(const WidthReport& r);

}  // namespace latfree
