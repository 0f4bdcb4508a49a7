#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>

#include "latfree/construct.hpp"

namespace latfree {

// Output of the prefix-sum shift analysis: after shifting x by `ell`
// positions, every proper prefix sum is at most <1, x> (strictly when
// <1, x> > 0).
struct ShiftResult {
  int ell = 0;           // shift amount, d + 1 - k
  int k = 0;             // smallest prefix-argmax index (1-based)
  Vector prefix_sums;    // S_1, ..., S_{d+1} of the unshifted input
};

struct Certificate {
  enum class Kind { monotone_a, exhaustive_enumeration };
  Kind kind = Kind::monotone_a;
  // monotone_a payload: the verified adjacent comparisons a_i <= a_{i+1}
  std::vector<std::string> ordering_chain;
  // enumeration payload
  std::vector<Integer> box_lo, box_hi;
  long points_scanned = 0;
  bool interior_empty = true;
};

// Shift finder: x must satisfy <1, x> >= 0. The postcondition is re-verified
// exactly before returning.
ShiftResult find_shift(const Vector& x);

// For x != 0 with <1, x> = 0 and strictly increasing a, returns a shift
// index i with <shift(a, i), x> > 0, verified by exact sign check.
int positive_functional(const Vector& x, const AVector& a);

// Monotone-a lattice-freeness certificate; nullopt when a is not
// non-decreasing (not a disproof).
std::optional<Certificate> latticefree_certificate(const AVector& a);

// Facets of a simplex given by its vertex list: inequalities
// <normal, x> <= offset, oriented so all vertices satisfy them.
struct Facet {
  Vector normal;
  FieldScalar offset;
};
std::vector<Facet> simplex_facets(const ProjectedPolytope& p);

// Exhaustive scan of the integer bounding box; returns all integer points
// strictly inside. Guarded to dim <= 6.
std::vector<std::vector<Integer>> brute_force_interior_points(
    const ProjectedPolytope& p);

// Enumeration-record certificate produced from a completed scan.
Certificate enumeration_certificate(const ProjectedPolytope& p);

nlohmann::json certificate_to_json(const Certificate& c);

}  // namespace latfree
