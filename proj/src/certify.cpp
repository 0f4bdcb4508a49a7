#include "latfree/certify.hpp"

#include <nlohmann/json.hpp>

namespace latfree {

ShiftResult find_shift(const Vector& x) {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw std::invalid_argument("find_shift: empty vector");
  ShiftResult res;
  res.prefix_sums.reserve(n);
  FieldScalar running(0);
  for (const auto& xi : x) {
    running += xi;
    res.prefix_sums.push_back(running);
  }
  const FieldScalar& total = res.prefix_sums.back();
  int total_sign = total.sign();
  if (total_sign < 0) throw std::invalid_argument("find_shift: <1, x> < 0");

  // smallest k maximizing S_k; ties resolved by smallest k
  int k = 1;
  for (int j = 2; j <= n; ++j)
    if ((res.prefix_sums[j - 1] - res.prefix_sums[k - 1]).sign() > 0) k = j;
  res.k = k;
  res.ell = n - k;

  // re-verify the postcondition on the shifted vector
  Vector shifted = cyclic_shift(x, res.ell);
  FieldScalar s(0);
  for (int j = 0; j + 1 < n; ++j) {
    s += shifted[j];
    int cmp = (s - total).sign();
    bool ok = total_sign > 0 ? cmp < 0 : cmp <= 0;
    if (!ok) throw std::logic_error("find_shift: postcondition violated");
  }
  return res;
}

int positive_functional(const Vector& x, const AVector& a) {
  const int n = static_cast<int>(x.size());
  if (n != static_cast<int>(a.entries.size()))
    throw std::invalid_argument("positive_functional: size mismatch");
  if (!a.is_strictly_increasing())
    throw std::invalid_argument("positive_functional: a not strictly increasing");
  bool zero = true;
  FieldScalar total(0);
  for (const auto& xi : x) {
    total += xi;
    if (!xi.is_zero()) zero = false;
  }
  if (zero) throw std::invalid_argument("positive_functional: x = 0");
  if (!total.is_zero())
    throw std::invalid_argument("positive_functional: <1, x> != 0");

  ShiftResult sr = find_shift(x);
  int i = (n - sr.ell) % n;
  FieldScalar val = dot(cyclic_shift(a.entries, i), x);
  if (val.sign() <= 0)
    throw std::logic_error("positive_functional: certified shift not positive");
  return i;
}

std::optional<Certificate> latticefree_certificate(const AVector& a) {
  Certificate c;
  c.kind = Certificate::Kind::monotone_a;
  for (size_t i = 0; i + 1 < a.entries.size(); ++i) {
    int s = (a.entries[i + 1] - a.entries[i]).sign();
    if (s < 0) return std::nullopt;
    c.ordering_chain.push_back("a" + std::to_string(i + 1) +
                               (s == 0 ? " = a" : " < a") + std::to_string(i + 2));
  }
  return c;
}

std::vector<Facet> simplex_facets(const ProjectedPolytope& p) {
  const size_t d = p.dim;
  if (p.vertices.size() != d + 1)
    throw std::invalid_argument("simplex_facets: vertex count != dim + 1");
  std::vector<Facet> facets;
  facets.reserve(d + 1);
  for (size_t omit = 0; omit <= d; ++omit) {
    std::vector<Vector> pts;
    for (size_t i = 0; i <= d; ++i)
      if (i != omit) pts.push_back(p.vertices[i]);
    Vector normal = hyperplane_normal(pts);
    FieldScalar offset = dot(normal, pts[0]);
    int side = (dot(normal, p.vertices[omit]) - offset).sign();
    if (side == 0)
      throw std::domain_error("simplex_facets: degenerate (flat) vertex set");
    if (side > 0) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    facets.push_back(Facet{std::move(normal), std::move(offset)});
  }
  return facets;
}

namespace {

struct BoxScan {
  std::vector<Facet> facets;
  std::vector<Integer> lo, hi;
  std::vector<std::vector<Integer>> inside;
  long scanned = 0;

  // lexicographic recursion with early facet rejection at full points
  void run(std::vector<Integer>& point, size_t coord) {
    if (coord == lo.size()) {
      ++scanned;
      for (const auto& f : facets) {
        FieldScalar val(0);
        for (size_t i = 0; i < point.size(); ++i)
          val += f.normal[i] * FieldScalar(Rational(point[i]));
        if ((val - f.offset).sign() >= 0) return;  // on or outside
      }
      inside.push_back(point);
      return;
    }
    for (Integer v = lo[coord]; v <= hi[coord]; ++v) {
      point[coord] = v;
      run(point, coord + 1);
    }
  }
};

BoxScan scan_box(const ProjectedPolytope& p) {
  if (p.dim > 6)
    throw ResourceGuardError(
        "brute force enumeration limited to dim <= 6; use the monotone-a "
        "certificate instead");
  if (p.vertices.empty()) throw std::invalid_argument("empty polytope");
  BoxScan scan;
  scan.facets = simplex_facets(p);
  scan.lo.resize(p.dim);
  scan.hi.resize(p.dim);
  for (int j = 0; j < p.dim; ++j) {
    FieldScalar mn = p.vertices[0][j], mx = p.vertices[0][j];
    for (const auto& v : p.vertices) {
      if ((v[j] - mn).sign() < 0) mn = v[j];
      if ((v[j] - mx).sign() > 0) mx = v[j];
    }
    scan.lo[j] = mn.ceil();
    scan.hi[j] = mx.floor();
  }
  std::vector<Integer> point(p.dim);
  scan.run(point, 0);
  return scan;
}

}  // namespace

std::vector<std::vector<Integer>> brute_force_interior_points(
    const ProjectedPolytope& p) {
  return scan_box(p).inside;
}

Certificate enumeration_certificate(const ProjectedPolytope& p) {
  BoxScan scan = scan_box(p);
  Certificate c;
  c.kind = Certificate::Kind::exhaustive_enumeration;
  c.box_lo = scan.lo;
  c.box_hi = scan.hi;
  c.points_scanned = scan.scanned;
  c.interior_empty = scan.inside.empty();
  return c;
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  if (c.kind == Certificate::Kind::monotone_a) {
    j["kind"] = "monotone_a";
    j["ordering_chain"] = c.ordering_chain;
    j["replay"] = "verify each adjacent comparison exactly; the certificate "
                  "holds whenever all comparisons pass";
  } else {
    j["kind"] = "exhaustive_enumeration";
    nlohmann::json lo = nlohmann::json::array(), hi = nlohmann::json::array();
    for (const auto& v : c.box_lo) lo.push_back(v.get_str());
    for (const auto& v : c.box_hi) hi.push_back(v.get_str());
    j["box_lo"] = lo;
    j["box_hi"] = hi;
    j["points_scanned"] = c.points_scanned;
    j["interior_empty"] = c.interior_empty;
    j["replay"] = "rescan the recorded box in lexicographic order testing "
                  "strict satisfaction of all facet inequalities";
  }
  return j;
}

}  // namespace latfree
