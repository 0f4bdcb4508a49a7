// latfree: exact construction, certification and width computation for a
// family of lattice-free simplices, plus the associated optimizer and
// continuum model. All reports are deterministic JSON.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <latfree/certify.hpp>
#include <latfree/construct.hpp>
#include <latfree/continuum.hpp>
#include <latfree/extremal.hpp>
#include <latfree/width.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace latfree;

namespace {

constexpr const char* kVersion = "1.0.0";

enum ExitCode {
  kOk = 0,
  kMismatch = 1,      // a verification failed
  kInvalidInput = 2,  // bad flags or malformed input
  kResourceGuard = 3  // an enumeration budget guard fired
};

struct GlobalOpts {
  int d = 2;
  long precision = 64;  // bits for interval renderings
  unsigned seed = 0;
  int workers = 1;
  std::string output;  // empty = stdout
  std::string format = "json";
};

json scalar_entry(const FieldScalar& x) {
  return json{{"exact", x.to_json()}, {"decimal", x.decimal(50)}};
}

json config_json(const GlobalOpts& g, const std::string& command) {
  return json{{"command", command}, {"d", g.d},
              {"precision", g.precision}, {"seed", g.seed},
              {"workers", g.workers},   {"format", g.format},
              {"version", kVersion}};
}

void emit(const GlobalOpts& g, const json& report,
          const std::vector<std::pair<std::string, std::string>>& table) {
  std::string text;
  if (g.format == "table") {
    size_t w = 0;
    for (const auto& [k, v] : table) w = std::max(w, k.size());
    for (const auto& [k, v] : table)
      text += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  } else {
    text = report.dump(2) + "\n";
  }
  if (g.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.output);
    if (!out) throw std::invalid_argument("cannot open " + g.output);
    out << text;
  }
}

int run_construct(const GlobalOpts& g) {
  SimplexSpec s = build_simplex(make_params(g.d));
  json j;
  j["config"] = config_json(g, "construct");
  j["simplex"] = simplex_to_json(s);
  auto cert = latticefree_certificate(s.a);
  j["certificate"] = cert ? certificate_to_json(*cert) : json(nullptr);
  std::vector<std::pair<std::string, std::string>> table{
      {"d", std::to_string(g.d)},
      {"delta", s.params.delta.decimal(50)},
      {"a_{d+1}", s.a.last().decimal(50)},
      {"v_1", s.vertices[0][0].decimal(50)},
      {"certified lattice-free", cert ? "yes" : "no"},
  };
  emit(g, j, table);
  return cert ? kOk : kMismatch;
}

int run_certify(const GlobalOpts& g) {
  SimplexSpec s = build_simplex(make_params(g.d));
  auto cert = latticefree_certificate(s.a);
  json j;
  j["config"] = config_json(g, "certify");
  j["monotone_certificate"] = cert ? certificate_to_json(*cert) : json(nullptr);
  bool cross_checked = false, cross_ok = true;
  if (g.d <= 5) {
    Certificate scan = enumeration_certificate(project(s));
    j["enumeration_certificate"] = certificate_to_json(scan);
    cross_checked = true;
    cross_ok = scan.interior_empty;
  }
  bool pass = cert.has_value() && cross_ok;
  std::vector<std::pair<std::string, std::string>> table{
      {"d", std::to_string(g.d)},
      {"monotone certificate", cert ? "yes" : "no"},
      {"brute-force cross-check",
       cross_checked ? (cross_ok ? "empty interior" : "FAILED") : "skipped"},
  };
  emit(g, j, table);
  return pass ? kOk : kMismatch;
}

int run_width(const GlobalOpts& g) {
  Params p = make_params(g.d);
  SimplexSpec s = build_simplex(p);
  WidthReport w = lattice_width(project(s), g.workers);
  BoundPair b = alpha_formula(p);
  bool equals_alpha = (w.value == b.alpha);
  json j;
  j["config"] = config_json(g, "width");
  j["width"] = width_report_to_json(w);
  j["width"]["value_decimal"] = w.value.decimal(50);
  j["alpha"] = scalar_entry(b.alpha);
  j["width_equals_alpha"] = equals_alpha;
  std::string dir;
  for (long c : w.direction) dir += (dir.empty() ? "" : ",") + std::to_string(c);
  std::vector<std::pair<std::string, std::string>> table{
      {"d", std::to_string(g.d)},
      {"lattice width", w.value.decimal(50)},
      {"direction", "(" + dir + ")"},
      {"candidates checked", std::to_string(w.candidates_checked)},
      {"equals closed form", equals_alpha ? "yes" : "no"},
  };
  emit(g, j, table);
  return equals_alpha ? kOk : kMismatch;
}

int run_extremal(const GlobalOpts& g) {
  if (g.d != 4 && g.d != 5)
    throw std::invalid_argument("extremal: --d must be 4 or 5");
  ExtremalSimplex s = g.d == 4 ? build_delta4() : build_delta5();
  ExtremalVerification v = verify_extremal(s, g.workers);
  bool pass = v.lattice_free_certificate && v.lattice_free_brute_force &&
              v.width_matches_60bit;
  json j;
  j["config"] = config_json(g, "extremal");
  j["claimed_width"] = scalar_entry(s.claimed_width);
  j["verification"] = verification_to_json(v);
  std::vector<std::pair<std::string, std::string>> table{
      {"d", std::to_string(g.d)},
      {"claimed width", s.claimed_width.decimal(50)},
      {"computed width", v.width.value.decimal(50)},
      {"lattice-free (certificate)", v.lattice_free_certificate ? "yes" : "no"},
      {"lattice-free (brute force)", v.lattice_free_brute_force ? "yes" : "no"},
      {"exact match", v.width_matches_exactly ? "yes" : "no"},
      {"certification path", v.certification_path},
  };
  emit(g, j, table);
  return pass ? kOk : kMismatch;
}

int run_optimize(const GlobalOpts& g, const std::string& config_path) {
  OptimizeConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot read " + config_path);
    cfg = optimize_config_from_json(json::parse(in));
  }
  cfg.seed = g.seed;
  OptimizationResult r = optimize_a(g.d, cfg);
  json j;
  j["config"] = config_json(g, "optimize");
  j["result"] = optimization_to_json(r);
  j["lambda"] = r.objective / (2.0 * g.d);
  std::vector<std::pair<std::string, std::string>> table{
      {"d", std::to_string(g.d)},
      {"objective v_1 - v_{d+1}", std::to_string(r.objective)},
      {"lambda", std::to_string(r.objective / (2.0 * g.d))},
      {"monotone a", r.monotone ? "yes" : "no"},
      {"iterations", std::to_string(r.iterations)},
  };
  emit(g, j, table);
  return kOk;
}

int run_continuum(const GlobalOpts& g, double gamma, int grid) {
  ExponentialSolution sol = exponential_solution(gamma, grid);
  GridFunction omega = sample_grid(grid, [&](double) { return sol.omega; });
  ContinuumReport rep = continuum_report(sol.y, omega, sol.lambda);
  double ld = std::nan("");
  if (grid % g.d == 0) ld = discrete_lambda(discretize_to_a(sol.y, g.d));
  json j;
  j["config"] = config_json(g, "continuum");
  j["gamma"] = gamma;
  j["grid"] = grid;
  j["omega"] = sol.omega;
  j["report"] = continuum_report_to_json(rep);
  if (!std::isnan(ld)) {
    j["discrete_lambda"] = ld;
    j["closure_gap"] = std::abs(ld - sol.lambda);
  }
  std::vector<std::pair<std::string, std::string>> table{
      {"gamma", std::to_string(gamma)},
      {"lambda", std::to_string(rep.lambda)},
      {"residual sup", std::to_string(rep.residual_sup)},
      {"1 - integral(y)", std::to_string(1.0 - rep.integral_y)},
      {"discrete lambda (d)", std::isnan(ld) ? "n/a" : std::to_string(ld)},
  };
  emit(g, j, table);
  return kOk;
}

int run_reproduce(const GlobalOpts& g) {
  json rows = json::array();
  std::vector<std::pair<std::string, std::string>> table;
  bool all_pass = true;
  auto add = [&](const std::string& name, bool pass,
                 const std::string& detail) {
    rows.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    table.push_back({name, (pass ? "pass" : "FAIL") + ("  " + detail)});
    all_pass = all_pass && pass;
  };

  {
    bool ok = true;
    for (int d = 2; d <= 10 && ok; ++d) {
      SimplexSpec s = build_simplex(make_params(d));
      ok = solve_circulant(s.a) == vertex_closed_form(s.params);
    }
    add("closed-form vertices solve the circulant system (d=2..10)", ok, "");
  }
  {
    bool ok = true;
    for (int d = 2; d <= 50 && ok; ++d)
      ok = latticefree_certificate(build_simplex(make_params(d)).a).has_value();
    add("family certified lattice-free (d=2..50)", ok, "");
  }
  {
    bool ok = true;
    std::string vals;
    for (int d : {2, 3}) {
      Params p = make_params(d);
      WidthReport w = lattice_width(project(build_simplex(p)), g.workers);
      ok = ok && (w.value == alpha_formula(p).alpha);
      vals += (vals.empty() ? "" : ", ") + w.value.decimal(8);
    }
    add("lattice width equals closed form exactly (d=2,3)", ok, vals);
  }
  {
    bool ok = true;
    int last = 0;
    for (int d = 2; d <= 1000 && ok; ++d) {
      ok = alpha_exceeds_floor_certified(d);
      last = d;
    }
    add("width bound exceeds 2d+3-sqrt(8d+8) (certified, d=2..1000)", ok,
        ok ? "" : "failed at d=" + std::to_string(last));
  }
  for (int d : {4, 5}) {
    ExtremalSimplex s = d == 4 ? build_delta4() : build_delta5();
    ExtremalVerification v = verify_extremal(s, g.workers);
    bool pass = v.lattice_free_certificate && v.lattice_free_brute_force &&
                v.width_matches_exactly;
    add("maximizer verified: " + std::to_string(d) +
            "d lattice-free width >= " + s.claimed_width.decimal(8),
        pass, "width " + v.width.value.decimal(8));
  }
  {
    OptimizationResult r2 = optimize_a(2);
    OptimizationResult r3 = optimize_a(3);
    bool ok = std::abs(r2.objective - (1 + 2 / std::sqrt(3.0))) < 1e-6 &&
              std::abs(r3.objective - (2 + std::sqrt(2.0))) < 1e-6;
    add("optimizer recovers known optima (d=2,3)", ok, "");
  }
  {
    OptimizationResult r = optimize_a(6);
    add("optimizer output non-monotone at d=6", !r.monotone, "");
  }

  json j;
  j["config"] = config_json(g, "reproduce");
  j["checks"] = rows;
  j["all_pass"] = all_pass;
  emit(g, j, table);
  return all_pass ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-free simplex toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--precision", g.precision, "interval precision in bits")
      ->check(CLI::Range(53L, 1L << 20));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--workers", g.workers, "worker threads")
      ->check(CLI::Range(1, 256));
  app.add_option("--output", g.output, "write the report to this path");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  auto add_d = [&](CLI::App* cmd) {
    cmd->add_option("--d", g.d, "dimension")->check(CLI::Range(2, 1000000));
  };
  CLI::App* c_construct = app.add_subcommand("construct", "build the family simplex");
  add_d(c_construct);
  CLI::App* c_certify = app.add_subcommand("certify", "certify lattice-freeness");
  add_d(c_certify);
  CLI::App* c_width = app.add_subcommand("width", "certified lattice width");
  add_d(c_width);
  CLI::App* c_extremal = app.add_subcommand("extremal", "verify a local maximizer");
  add_d(c_extremal);
  CLI::App* c_optimize = app.add_subcommand("optimize", "maximize the width over a");
  add_d(c_optimize);
  std::string opt_config;
  c_optimize->add_option("--config", opt_config, "optimizer settings JSON file");
  CLI::App* c_continuum = app.add_subcommand("continuum", "continuous model report");
  add_d(c_continuum);
  double gamma = 2.0;
  int grid = 1024;
  c_continuum->add_option("--gamma", gamma, "exponential rate");
  c_continuum->add_option("--grid", grid, "grid size")->check(CLI::Range(2, 1 << 22));
  CLI::App* c_reproduce =
      app.add_subcommand("reproduce", "run the full verification table");

  // per-command defaults when --d is not given
  auto default_d = [&](CLI::App* cmd, int def) {
    if (cmd->parsed() && cmd->count("--d") == 0) g.d = def;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  default_d(c_construct, 4);
  default_d(c_certify, 4);
  default_d(c_width, 2);
  default_d(c_extremal, 4);
  default_d(c_optimize, 4);
  default_d(c_continuum, 64);

  try {
    if (c_construct->parsed()) return run_construct(g);
    if (c_certify->parsed()) return run_certify(g);
    if (c_width->parsed()) return run_width(g);
    if (c_extremal->parsed()) return run_extremal(g);
    if (c_optimize->parsed()) return run_optimize(g, opt_config);
    if (c_continuum->parsed()) return run_continuum(g, gamma, grid);
    if (c_reproduce->parsed()) return run_reproduce(g);
  } catch (const ResourceGuardError& e) {
    std::cerr << json{{"error", e.what()}, {"code", kResourceGuard}}.dump()
              << "\n";
    return kResourceGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}, {"code", kInvalidInput}}.dump()
              << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"code", kMismatch}}.dump() << "\n";
    return kMismatch;
  }
  return kInvalidInput;
}
