#include "latfree/width.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace latfree {

FieldScalar directional_width(const ProjectedPolytope& p,
                              const std::vector<long>& c) {
  if (p.vertices.empty()) throw std::invalid_argument("empty polytope");
  bool zero = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
  if (zero) throw std::invalid_argument("directional_width: zero direction");
  if (c.size() != size_t(p.dim))
    throw std::invalid_argument("directional_width: dimension mismatch");
  auto value = [&](const Vector& v) {
    FieldScalar s(0);
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) s += FieldScalar(c[i]) * v[i];
    return s;
  };
  FieldScalar mn = value(p.vertices[0]), mx = mn;
  for (size_t i = 1; i < p.vertices.size(); ++i) {
    FieldScalar val = value(p.vertices[i]);
    if ((val - mn).sign() < 0) mn = val;
    if ((val - mx).sign() > 0) mx = val;
  }
  return mx - mn;
}

Rational inradius_lower_bound(const ProjectedPolytope& p) {
  auto facets = simplex_facets(p);  // throws on degenerate input
  const long n = static_cast<long>(p.vertices.size());
  Vector centroid(p.dim, FieldScalar(0));
  for (const auto& v : p.vertices)
    for (int j = 0; j < p.dim; ++j) centroid[j] += v[j];
  FieldScalar ninv = FieldScalar(n).inverse();
  for (auto& c : centroid) c *= ninv;

  // min over facets of (offset - <normal, centroid>)^2 / <normal, normal>
  FieldScalar min_sq(0);
  bool first = true;
  for (const auto& f : facets) {
    FieldScalar slack = f.offset - dot(f.normal, centroid);
    if (slack.sign() <= 0)
      throw std::domain_error("inradius: centroid not strictly interior");
    FieldScalar sq = slack * slack / dot(f.normal, f.normal);
    if (first || (sq - min_sq).sign() < 0) {
      min_sq = sq;
      first = false;
    }
  }
  // rational lower bound on sqrt(min_sq)
  for (long bits = 64;; bits *= 2) {
    Rational lo = min_sq.enclosure(bits).lo_rational();
    if (lo > 0) {
      double r = std::sqrt(lo.get_d()) * (1 - 1e-9);
      Rational rho(r);
      rho.canonicalize();
      if (rho > 0 && rho * rho <= lo) return rho;
    }
    if (bits > 1 << 16) throw std::runtime_error("inradius: failed to bound");
  }
}

namespace {

struct ApproxVertices {
  std::vector<std::vector<double>> mid;
  std::vector<double> err;  // per-vertex max coordinate halfwidth
};

ApproxVertices approximate(const ProjectedPolytope& p) {
  ApproxVertices a;
  a.mid.resize(p.vertices.size());
  a.err.resize(p.vertices.size(), 0.0);
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    a.mid[i].resize(p.dim);
    for (int j = 0; j < p.dim; ++j) {
      Interval box = p.vertices[i][j].enclosure(96);
      double lo = box.lo_double(), hi = box.hi_double();
      a.mid[i][j] = (lo + hi) / 2;
      a.err[i] = std::max(a.err[i], (hi - lo) / 2 + 1e-12 * std::abs(hi));
    }
  }
  return a;
}

// conservative double lower bound on the width along c
double width_lower_estimate(const ApproxVertices& a, const std::vector<long>& c) {
  double mn = 0, mx = 0, slack = 0;
  for (size_t i = 0; i < a.mid.size(); ++i) {
    double s = 0, abs_sum = 0;
    for (size_t j = 0; j < c.size(); ++j) {
      s += double(c[j]) * a.mid[i][j];
      abs_sum += std::abs(double(c[j]));
    }
    double e = abs_sum * (a.err[i] + 1e-9 * (1 + std::abs(s)));
    if (i == 0) {
      mn = mx = s;
      slack = e;
    } else {
      mn = std::min(mn, s);
      mx = std::max(mx, s);
      slack = std::max(slack, e);
    }
  }
  return (mx - mn) - 2 * slack;
}

void enumerate_primitive(std::vector<long>& c, size_t coord, double norm_left,
                         std::vector<std::vector<long>>& out) {
  if (coord == c.size()) {
    // sign normalization: first nonzero positive
    auto first = std::find_if(c.begin(), c.end(), [](long v) { return v != 0; });
    if (first == c.end() || *first < 0) return;
    long g = 0;
    for (long v : c) g = std::gcd(g, std::abs(v));
    if (g == 1) out.push_back(c);
    return;
  }
  long lim = static_cast<long>(std::floor(std::sqrt(std::max(0.0, norm_left))));
  for (long v = -lim; v <= lim; ++v) {
    c[coord] = v;
    enumerate_primitive(c, coord + 1, norm_left - double(v) * double(v), out);
  }
  c[coord] = 0;
}

}  // namespace

WidthReport lattice_width(const ProjectedPolytope& p, int workers) {
  if (p.dim > 5)
    throw ResourceGuardError("lattice_width enumeration limited to dim <= 5");
  if (p.dim < 1 || p.vertices.size() != size_t(p.dim) + 1)
    throw std::invalid_argument("lattice_width: expects a full simplex");

  std::vector<long> e1(p.dim, 0);
  e1[0] = 1;
  FieldScalar best = directional_width(p, e1);
  std::vector<long> best_dir = e1;

  Rational rho = inradius_lower_bound(p);
  Rational w_up = best.enclosure(96).hi_rational();
  Rational radius = w_up / (2 * rho);
  Rational radius_sq = radius * radius;

  std::vector<std::vector<long>> candidates;
  std::vector<long> c(p.dim, 0);
  enumerate_primitive(c, 0, radius_sq.get_d() * (1 + 1e-12), candidates);

  ApproxVertices approx = approximate(p);

  // deterministic parallel reduce: per-chunk exact minima, merged in order
  workers = std::max(1, workers);
  struct Local {
    FieldScalar value;
    std::vector<long> dir;
    bool has = false;
  };
  std::vector<Local> locals(workers);
  auto run_chunk = [&](int w) {
    Local& loc = locals[w];
    double best_hi = best.enclosure(96).hi_double() + 1e-9;
    for (size_t i = w; i < candidates.size(); i += workers) {
      const auto& cand = candidates[i];
      if (width_lower_estimate(approx, cand) > best_hi) continue;
      FieldScalar wid = directional_width(p, cand);
      if (!loc.has || (wid - loc.value).sign() < 0 ||
          ((wid - loc.value).sign() == 0 && cand < loc.dir)) {
        loc.value = wid;
        loc.dir = cand;
        loc.has = true;
      }
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& loc : locals) {
    if (!loc.has) continue;
    int cmp = (loc.value - best).sign();
    if (cmp < 0 || (cmp == 0 && loc.dir < best_dir)) {
      best = loc.value;
      best_dir = loc.dir;
    }
  }

  WidthReport r;
  r.value = best;
  r.direction = best_dir;
  r.enumeration_radius = radius;
  r.inradius_bound = rho;
  r.candidates_checked = static_cast<long>(candidates.size());
  return r;
}

BoundPair alpha_formula(const Params& params) {
  const long d = params.d;
  const FieldScalar& delta = params.delta;
  FieldScalar pd = delta.pow(d);
  FieldScalar pd1 = pd * delta;
  FieldScalar pd2 = pd1 * delta;
  FieldScalar alpha =
      (FieldScalar(d) * pd2 - pd1 - FieldScalar(d + 1) * pd + delta +
       FieldScalar(1)) /
      ((delta - FieldScalar(1)) * (pd1 - FieldScalar(1)));

  BoundPair bp;
  bp.alpha = alpha;

  // floor bound 2d + 3 - sqrt(8d+8); note sqrt(8d+8) = 2 sqrt(2(d+1)) lives
  // in the same field as delta, so the comparison can be made exact.
  FieldScalar floor_exact =
      FieldScalar(2 * d + 3) -
      FieldScalar(2) * FieldScalar::sqrt(FieldScalar(2 * (d + 1)));
  bp.alpha_exceeds_floor = (alpha - floor_exact).sign() > 0;
  bp.floor_bound = floor_exact.to_interval(64);

  Vector v = vertex_closed_form(params);
  bp.alpha_equals_vertex_gap = (alpha - (v.front() - v.back())).is_zero();
  return bp;
}

bool alpha_exceeds_floor_certified(int d) {
  if (d < 2) throw std::invalid_argument("d >= 2 required");
  for (mpfr_prec_t prec = 128; prec <= 1 << 15; prec *= 2) {
    Interval one = Interval::from_long(1, prec);
    Interval root = Interval::from_long(2L * (d + 1), prec).sqrt();
    Interval frac = root / Interval::from_long(d + 1, prec);
    Interval delta = one / (one - frac);
    // delta^d by binary exponentiation
    Interval pd = one;
    Interval base = delta;
    for (unsigned long e = d; e > 0; e >>= 1) {
      if (e & 1UL) pd = pd * base;
      if (e > 1) base = base * base;
    }
    Interval pd1 = pd * delta;
    Interval pd2 = pd1 * delta;
    Interval dd = Interval::from_long(d, prec);
    Interval alpha = (dd * pd2 - pd1 - (dd + one) * pd + delta + one) /
                     ((delta - one) * (pd1 - one));
    Interval floor_bound = Interval::from_long(2L * d + 3, prec) -
                           Interval::from_long(2, prec) * root;
    if (alpha.certainly_greater(floor_bound)) return true;
    if (alpha.certainly_less(floor_bound)) return false;
  }
  throw std::runtime_error("alpha chain: interval precision exhausted");
}

nlohmann::json width_report_to_json(const WidthReport& r) {
  nlohmann::json j;
  j["value"] = r.value.to_json();
  j["value_decimal"] = r.value.decimal(50);
  j["direction"] = r.direction;
  j["enumeration_radius"] = rational_to_string(r.enumeration_radius);
  j["inradius_bound"] = rational_to_string(r.inradius_bound);
  j["candidates_checked"] = r.candidates_checked;
  j["replay"] =
      "re-enumerate primitive integer directions with norm up to "
      "enumeration_radius and take the exact minimum directional width";
  return j;
}

}  // namespace latfree
