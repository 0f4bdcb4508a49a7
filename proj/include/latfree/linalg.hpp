#pragma once

#include <stdexcept>
#include <vector>

#include "latfree/field_scalar.hpp"

namespace latfree {

using Vector = std::vector<FieldScalar>;
using Matrix = std::vector<Vector>;

// Thrown when an operation would exceed its enumeration budget (e.g. exact
// brute-force scans or width enumeration in too high a dimension).
struct ResourceGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrixError : std::runtime_error {
  int step;
  explicit SingularMatrixError(int s)
      : std::runtime_error("singular matrix at elimination step " +
                           std::to_string(s)),
        step(s) {}
};

// Exact Gaussian elimination over the field; pivot is the first row with a
// nonzero entry in the current column.
Vector solve_linear(Matrix m, Vector rhs);

FieldScalar determinant(Matrix m);

FieldScalar dot(const Vector& x, const Vector& y);

// Normal of the hyperplane through `points` (size n, each in R^n... size must
// be dim) via generalized cross product of the difference vectors.
// points.size() == dim, normal is the cofactor vector of the (dim-1) x dim
// difference matrix.
Vector hyperplane_normal(const std::vector<Vector>& points);

}  // namespace latfree
