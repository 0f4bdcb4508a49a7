#include "latfree/linalg.hpp"

namespace latfree {

Vector solve_linear(Matrix m, Vector rhs) {
  const size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("solve_linear: not square");

  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularMatrixError(static_cast<int>(col));
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    FieldScalar inv = m[col][col].inverse();
    for (size_t j = col; j < n; ++j) m[col][j] = m[col][j] * inv;
    rhs[col] = rhs[col] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      FieldScalar f = m[r][col];
      for (size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  return rhs;
}

FieldScalar determinant(Matrix m) {
  const size_t n = m.size();
  FieldScalar det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return FieldScalar(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    FieldScalar inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      FieldScalar f = m[r][col] * inv;
      for (size_t j = col; j < n; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  return det;
}

FieldScalar dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  FieldScalar s(0);
  for (size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
  return s;
}

Vector hyperplane_normal(const std::vector<Vector>& points) {
  const size_t dim = points.size();
  if (dim < 2) throw std::invalid_argument("hyperplane_normal: need >= 2 points");
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("hyperplane_normal: shape");
  // rows: p_i - p_0, i = 1..dim-1
  Matrix diff(dim - 1, Vector(dim));
  for (size_t i = 1; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) diff[i - 1][j] = points[i][j] - points[0][j];
  Vector normal(dim);
  for (size_t j = 0; j < dim; ++j) {
    Matrix minor(dim - 1, Vector(dim - 1));
    for (size_t r = 0; r < dim - 1; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < dim; ++c) {
        if (c == j) continue;
        minor[r][cc++] = diff[r][c];
      }
    }
    FieldScalar d = determinant(minor);
    normal[j] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

}  // namespace latfree
