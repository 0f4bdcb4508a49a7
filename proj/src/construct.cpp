#include "latfree/construct.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace latfree {

bool AVector::is_nondecreasing() const {
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if ((entries[i + 1] - entries[i]).sign() < 0) return false;
  return true;
}

bool AVector::is_strictly_increasing() const {
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if ((entries[i + 1] - entries[i]).sign() <= 0) return false;
  return true;
}

AVector AVector::normalized() const {
  FieldScalar scale = entries.back() - entries.front();
  if (scale.sign() <= 0)
    throw std::domain_error("AVector::normalized: a_{d+1} must exceed a_1");
  AVector out;
  out.entries.reserve(entries.size());
  for (const auto& e : entries)
    out.entries.push_back((e - entries.front()) / scale);
  return out;
}

Params make_params(int d) {
  if (d < 2)
    throw std::invalid_argument(
        "make_params: d >= 2 required (d = 1 makes delta undefined)");
  Params p;
  p.d = d;
  p.radicand = 2L * (d + 1);
  FieldScalar root = FieldScalar::sqrt(FieldScalar(p.radicand));
  // sqrt(2/(d+1)) = sqrt(2(d+1)) / (d+1)
  FieldScalar frac = root / FieldScalar(static_cast<long>(d + 1));
  p.delta = FieldScalar(1) / (FieldScalar(1) - frac);
  return p;
}

AVector build_a(const Params& params) {
  AVector a;
  a.entries.reserve(params.d + 1);
  FieldScalar cur(0);
  FieldScalar step = params.delta - FieldScalar(1);
  a.entries.push_back(cur);
  for (int i = 1; i <= params.d; ++i) {
    cur = params.delta * cur + step;
    a.entries.push_back(cur);
  }
  return a;
}

Vector cyclic_shift(const Vector& x, int shift) {
  const int n = static_cast<int>(x.size());
  Vector out(n);
  int s = ((shift % n) + n) % n;
  for (int j = 0; j < n; ++j) out[(j + s) % n] = x[j];
  return out;
}

Vector vertex_closed_form(const Params& params) {
  const long d = params.d;
  const FieldScalar& delta = params.delta;
  FieldScalar dd = FieldScalar(d);
  FieldScalar pd = delta.pow(d);
  FieldScalar pd1 = pd * delta;
  FieldScalar pd2 = pd1 * delta;
  FieldScalar denom = (delta - FieldScalar(1)) * (pd1 - FieldScalar(1));
  FieldScalar v1 =
      (FieldScalar(1) - dd * pd + FieldScalar(d - 2) * pd1 + pd2) / denom;
  FieldScalar vmid = (delta - FieldScalar(1)) * pd / (pd1 - FieldScalar(1));
  FieldScalar vlast =
      (-delta + pd + FieldScalar(d - 1) * pd1 - FieldScalar(d - 1) * pd2) / denom;
  Vector v(d + 1);
  v[0] = v1;
  for (long i = 1; i < d; ++i) v[i] = vmid;
  v[d] = vlast;
  return v;
}

Matrix circulant_matrix(const AVector& a) {
  const int n = static_cast<int>(a.entries.size());
  Matrix m(n, Vector(n));
  for (int j = 0; j < n; ++j) m[0][j] = FieldScalar(1);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a.entries[(i + j) % n];
  return m;
}

Vector solve_circulant(const AVector& a) {
  const int n = static_cast<int>(a.entries.size());
  if (n < 3) throw std::invalid_argument("solve_circulant: need d >= 2");
  Matrix m = circulant_matrix(a);
  Vector rhs(n, a.last());
  rhs[0] = FieldScalar(1);
  return solve_linear(std::move(m), std::move(rhs));
}

SimplexSpec build_simplex(const Params& params) {
  SimplexSpec s;
  s.params = params;
  s.a = build_a(params);
  Vector v = vertex_closed_form(params);
  s.vertices.reserve(params.d + 1);
  for (int i = 0; i <= params.d; ++i) s.vertices.push_back(cyclic_shift(v, i));
  return s;
}

ProjectedPolytope project(const SimplexSpec& s) {
  ProjectedPolytope p;
  p.dim = s.params.d;
  p.vertices.reserve(s.vertices.size());
  for (const auto& v : s.vertices)
    p.vertices.emplace_back(v.begin(), v.end() - 1);
  return p;
}

static nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.to_json());
  return arr;
}

static Vector vector_from_json(const nlohmann::json& j) {
  Vector v;
  for (const auto& e : j) v.push_back(FieldScalar::from_json(e));
  return v;
}

nlohmann::json simplex_to_json(const SimplexSpec& s) {
  nlohmann::json j;
  j["d"] = s.params.d;
  j["radicand"] = s.params.radicand;
  j["delta"] = s.params.delta.to_json();
  j["delta_decimal"] = s.params.delta.decimal(50);
  j["a"] = vector_to_json(s.a.entries);
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : s.vertices) verts.push_back(vector_to_json(v));
  j["vertices"] = verts;
  return j;
}

nlohmann::json polytope_to_json(const ProjectedPolytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices) verts.push_back(vector_to_json(v));
  j["vertices"] = verts;
  return j;
}

ProjectedPolytope polytope_from_json(const nlohmann::json& j) {
  ProjectedPolytope p;
  p.dim = j.at("dim").get<int>();
  for (const auto& v : j.at("vertices")) p.vertices.push_back(vector_from_json(v));
  return p;
}

bool solve_circulant_numeric(const std::vector<double>& a,
                             std::vector<double>& v, double& residual) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  for (int j = 0; j < n; ++j) m[0][j] = 1.0;
  m[0][n] = 1.0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[(i + j) % n];
    m[i][n] = a[n - 1];
  }
  auto msave = m;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-13) return false;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  v.resize(n);
  for (int i = 0; i < n; ++i) v[i] = m[i][n] / m[i][i];
  residual = 0;
  for (int i = 0; i < n; ++i) {
    double s = -msave[i][n];
    for (int j = 0; j < n; ++j) s += msave[i][j] * v[j];
    residual = std::max(residual, std::abs(s));
  }
  return true;
}

}  // namespace latfree
