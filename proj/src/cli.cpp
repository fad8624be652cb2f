#include "casimir/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/closed_form.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/optical.hpp"
#include "casimir/report.hpp"

namespace casimir::cli {

namespace {

double parse_double(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  bool ok = true;
  try {
    v = std::stod(s, &pos);
  } catch (...) {
    ok = false;
  }
  if (!ok || pos != s.size() || s.empty())
    throw ValidationError(std::string(what) + ": not a number: '" + s + "'");
  return v;
}

long long parse_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  bool ok = true;
  try {
    v = std::stoll(s, &pos);
  } catch (...) {
    ok = false;
  }
  if (!ok || pos != s.size() || s.empty())
    throw ValidationError(std::string(what) + ": not an integer: '" + s + "'");
  return v;
}

ThermalState state_from_temperature(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ValidationError("temperature must be finite and >= 0");
  ThermalState st;
  if (t > 0.0) st.beta = 1.0 / t;
  return st;
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ValidationError("format must be json or csv (got '" + s + "')");
}

std::string fmt(const char* pattern, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

// ---------------------------------------------------------------- compute --

int cmd_compute(const RunRequest& req, std::ostream& out) {
  CasimirReport r = compute_report({req.n_dim, req.separation},
                                   state_from_temperature(req.temperature), req.bc, req.ctrl);
  if (req.output_format == OutputFormat::Json) {
    out << io::to_json(r) << "\n";
  } else {
    out << io::csv_header() << "\n" << io::to_csv_row("d", req.separation, r) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- scan --

double grid_point(const AxisRange& ax, int i) {
  if (i == ax.count - 1) return ax.stop;
  return ax.start + (ax.stop - ax.start) * static_cast<double>(i) /
                        static_cast<double>(ax.count - 1);
}

int cmd_scan(const RunRequest& req, std::ostream& out, std::ostream& diag) {
  const bool scan_d = req.separation_range.active();
  const bool scan_t = req.temperature_range.active();
  if (scan_d == scan_t)
    throw ValidationError("scan needs exactly one ranged axis (--sep-range or --temp-range)");
  const AxisRange& ax = scan_d ? req.separation_range : req.temperature_range;
  if (scan_d && !(ax.start > 0.0)) throw ValidationError("separation range must start above 0");
  if (scan_t && !(ax.start >= 0.0)) throw ValidationError("temperature range must start at >= 0");

  const char* axis = scan_d ? "d" : "T";
  const bool json = req.output_format == OutputFormat::Json;
  int worst = 0;
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(ax.count));
  for (int i = 0; i < ax.count; ++i) {
    const double v = grid_point(ax, i);
    const double d = scan_d ? v : req.separation;
    const double t = scan_t ? v : req.temperature;
    try {
      CasimirReport r =
          compute_report({req.n_dim, d}, state_from_temperature(t), req.bc, req.ctrl);
      rows.push_back(json ? io::to_json(r) : io::to_csv_row(axis, v, r));
    } catch (const ValidationError& e) {
      rows.push_back(json ? io::failed_json(req.n_dim, req.bc, d, t, e.what())
                          : io::failed_csv_row(axis, v));
      diag << "scan point " << axis << " = " << io::format_sci(v) << " failed: " << e.what()
           << "\n";
      worst = std::max(worst, 2);
    } catch (const ConvergenceError& e) {
      rows.push_back(json ? io::failed_json(req.n_dim, req.bc, d, t, e.what())
                          : io::failed_csv_row(axis, v));
      diag << "scan point " << axis << " = " << io::format_sci(v) << " failed: " << e.what()
           << "\n";
      worst = std::max(worst, 3);
    }
  }
  if (json) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
    out << "]\n";
  } else {
    out << io::csv_header() << "\n";
    for (const auto& row : rows) out << row << "\n";
  }
  return worst;
}

// ----------------------------------------------------------------- limits --

int cmd_limits(const RunRequest& req, std::ostream& out) {
  if (req.bc == BoundaryPair::NN)
    throw ValidationError("limits supports dd and dn (nn has no finite-temperature branch)");
  PlateConfig cfg{req.n_dim, req.separation};
  const double s_inf = closed::entropy_high_T(cfg, req.bc);
  // High temperature: F -> -T * S_inf and P -> -(N - 1) * S_inf * T / d, so
  // both coefficients follow from the saturated entropy.
  const double f_per_t = -s_inf;
  const double p_per_t = -(req.n_dim - 1) * s_inf / req.separation;
  const char* bc_token = req.bc == BoundaryPair::DD ? "dd" : "dn";
  if (req.output_format == OutputFormat::Json) {
    out << "{\n";
    out << "  \"bc\": \"" << bc_token << "\",\n";
    out << "  \"n_dim\": " << req.n_dim << ",\n";
    out << "  \"d\": " << io::format_sci(req.separation) << ",\n";
    out << "  \"entropy_high_T\": " << io::format_sci(s_inf) << ",\n";
    out << "  \"free_energy_per_T\": " << io::format_sci(f_per_t) << ",\n";
    out << "  \"pressure_per_T\": " << io::format_sci(p_per_t) << "\n";
    out << "}\n";
  } else {
    out << "bc,n_dim,d,entropy_high_T,free_energy_per_T,pressure_per_T\n";
    out << bc_token << ',' << req.n_dim << ',' << io::format_sci(req.separation) << ','
        << io::format_sci(s_inf) << ',' << io::format_sci(f_per_t) << ','
        << io::format_sci(p_per_t) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- validate --

struct CheckOutcome {
  std::string name;
  bool pass = false;
  bool convergence_failure = false;
  std::string detail;
};

template <class Fn>
CheckOutcome run_check(const std::string& name, Fn&& body) {
  CheckOutcome c;
  c.name = name;
  try {
    body(c);
  } catch (const ConvergenceError& e) {
    c.pass = false;
    c.convergence_failure = true;
    c.detail = std::string("convergence: ") + e.what();
  }
  return c;
}

int cmd_validate(const RunRequest& req, std::ostream& out) {
  const SeriesControl& ctrl = req.ctrl;
  std::vector<CheckOutcome> results;

  results.push_back(run_check("closed forms vs brute-force mode sum, T = 0", [&](CheckOutcome& c) {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      for (auto bc : {BoundaryPair::DD, BoundaryPair::DN}) {
        PlateConfig cfg{n, 1.0};
        const double want = closed::energy_zero_T(cfg, bc);
        const ValueWithError got = oracle::energy_zero_T_oracle(cfg, bc, ctrl);
        worst = std::max(worst, std::abs(got.value - want) / std::abs(want));
      }
    }
    c.pass = worst <= 1e-4;
    c.detail = fmt("max rel deviation %.3e", worst) + "  budget 1.0e-04";
  }));

  results.push_back(run_check("closed series vs brute-force mode sum, T > 0", [&](CheckOutcome& c) {
    struct Pt {
      int n;
      double d, beta;
      BoundaryPair bc;
    };
    const Pt pts[] = {{3, 1.0, 1.0, BoundaryPair::DD},
                      {2, 1.0, 30.0, BoundaryPair::DD},
                      {2, 1.0, 1.25, BoundaryPair::DN}};
    double worst = 0.0;
    for (const auto& p : pts) {
      PlateConfig cfg{p.n, p.d};
      ThermalState st{p.beta};
      const ValueWithError e = closed::energy_finite_T(cfg, st, p.bc, ctrl);
      const ValueWithError f = closed::free_energy_finite_T(cfg, st, p.bc, ctrl);
      const double e0 = closed::energy_zero_T(cfg, p.bc);
      const ValueWithError de =
          oracle::thermal_correction_oracle(cfg, st, p.bc, oracle::ThermalPart::Energy, ctrl);
      const ValueWithError df =
          oracle::thermal_correction_oracle(cfg, st, p.bc, oracle::ThermalPart::FreeEnergy, ctrl);
      worst = std::max(worst, std::abs(e0 + de.value - e.value) / std::abs(e.value));
      worst = std::max(worst, std::abs(e0 + df.value - f.value) / std::abs(f.value));
    }
    c.pass = worst <= 1e-6;
    c.detail = fmt("max rel deviation %.3e", worst) + "  budget 1.0e-06";
  }));

  results.push_back(run_check("closed forms vs image-path even sum, T = 0", [&](CheckOutcome& c) {
    double worst_rel = 0.0;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      for (auto bc : {BoundaryPair::DD, BoundaryPair::DN, BoundaryPair::NN}) {
        PlateConfig cfg{n, 1.0};
        const double want = closed::energy_zero_T(cfg, bc);
        const ValueWithError got = optical::even_energy_per_area(cfg, bc, 10000);
        const double diff = std::abs(got.value - want);
        ok = ok && diff <= got.error + 1e-15 * std::abs(want);
        worst_rel = std::max(worst_rel, diff / std::abs(want));
      }
    }
    c.pass = ok;
    c.detail = fmt("max rel deviation %.3e", worst_rel) + "  budget: certified tail";
  }));

  results.push_back(run_check("image-path odd sum separation independence", [&](CheckOutcome& c) {
    double worst_like = 0.0, worst_dn = 0.0;
    for (int n = 1; n <= 3; ++n) {
      PlateConfig cfg{n, 1.0};
      // the truncation leftover falls off like n_max^-N, so low N needs a
      // longer (still cheap, closed-form) path ladder
      const int like_max = n == 1 ? 4000000 : (n == 2 ? 100000 : 10000);
      for (auto bc : {BoundaryPair::DD, BoundaryPair::NN}) {
        worst_like = std::max(optical::odd_energy_d_independence_check(cfg, bc, 0.05, 1.0, 1.3,
                                                                       like_max),
                              worst_like);
      }
      const int dn_max = n == 1 ? 100000 : 10000;
      worst_dn = std::max(worst_dn, optical::odd_energy_d_independence_check(
                                        cfg, BoundaryPair::DN, 0.05, 1.0, 1.3, dn_max));
    }
    c.pass = worst_like <= 1e-8 && worst_dn <= 1e-10;
    c.detail = fmt("dd/nn %.3e (budget 1.0e-08)", worst_like) +
               fmt(", dn %.3e (budget 1.0e-10)", worst_dn);
  }));

  results.push_back(run_check("thermodynamic identity S = -dF/dT", [&](CheckOutcome& c) {
    double worst = 0.0;
    for (int n : {2, 3}) {
      for (double d : {0.5, 1.0}) {
        for (double t : {0.5, 1.0, 2.0}) {
          for (auto bc : {BoundaryPair::DD, BoundaryPair::DN}) {
            PlateConfig cfg{n, d};
            const double h = 1e-4 * t;
            const ValueWithError e = closed::energy_finite_T(cfg, ThermalState{1.0 / t}, bc, ctrl);
            const ValueWithError f =
                closed::free_energy_finite_T(cfg, ThermalState{1.0 / t}, bc, ctrl);
            const double s = (e.value - f.value) / t;
            const ValueWithError fp =
                closed::free_energy_finite_T(cfg, ThermalState{1.0 / (t + h)}, bc, ctrl);
            const ValueWithError fm =
                closed::free_energy_finite_T(cfg, ThermalState{1.0 / (t - h)}, bc, ctrl);
            const double s_fd = -(fp.value - fm.value) / (2.0 * h);
            worst = std::max(worst, std::abs(s - s_fd) / std::abs(s));
          }
        }
      }
    }
    c.pass = worst <= 1e-5;
    c.detail = fmt("max rel deviation %.3e", worst) + "  budget 1.0e-05";
  }));

  results.push_back(run_check("scaling covariance under (d, beta) -> (2d, 2beta)",
                              [&](CheckOutcome& c) {
    const double kappa = 2.0;
    double worst = 0.0;
    for (int n : {1, 2, 3}) {
      for (auto bc : {BoundaryPair::DD, BoundaryPair::DN}) {
        const CasimirReport a =
            compute_report({n, 0.9}, state_from_temperature(0.7), bc, ctrl);
        const CasimirReport b =
            compute_report({n, 0.9 * kappa}, state_from_temperature(0.7 / kappa), bc, ctrl);
        const double se = std::abs(b.energy_per_area * std::pow(kappa, n) - a.energy_per_area) /
                          std::abs(a.energy_per_area);
        const double sf =
            std::abs(b.free_energy_per_area * std::pow(kappa, n) - a.free_energy_per_area) /
            std::abs(a.free_energy_per_area);
        const double ss =
            std::abs(b.entropy_per_area * std::pow(kappa, n - 1) - a.entropy_per_area) /
            std::abs(a.entropy_per_area);
        const double sp = std::abs(b.pressure * std::pow(kappa, n + 1) - a.pressure) /
                          std::abs(a.pressure);
        worst = std::max({worst, se, sf, ss, sp});
        // zero temperature transforms the same way
        const CasimirReport za = compute_report({n, 0.7}, ThermalState{}, bc, ctrl);
        const CasimirReport zb = compute_report({n, 0.7 * kappa}, ThermalState{}, bc, ctrl);
        worst = std::max(worst,
                         std::abs(zb.energy_per_area * std::pow(kappa, n) - za.energy_per_area) /
                             std::abs(za.energy_per_area));
        worst = std::max(worst, std::abs(zb.pressure * std::pow(kappa, n + 1) - za.pressure) /
                                    std::abs(za.pressure));
      }
    }
    c.pass = worst <= 1e-10;
    c.detail = fmt("max rel deviation %.3e", worst) + "  budget 1.0e-10";
  }));

  results.push_back(run_check("pressure sign theorems", [&](CheckOutcome& c) {
    const double fault = req.inject_sign_fault ? -1.0 : 1.0;
    bool ok = true;
    double min_abs = std::numeric_limits<double>::infinity();
    int points = 0;
    for (int n : {1, 2, 3, 4}) {
      for (double d : {0.5, 1.0, 2.0}) {
        for (double t : {0.0, 0.1, 1.0, 10.0}) {
          const CasimirReport dd =
              compute_report({n, d}, state_from_temperature(t), BoundaryPair::DD, ctrl);
          const CasimirReport dn =
              compute_report({n, d}, state_from_temperature(t), BoundaryPair::DN, ctrl);
          ok = ok && (fault * dd.pressure < 0.0) && (dn.pressure > 0.0);
          min_abs = std::min({min_abs, std::abs(dd.pressure), std::abs(dn.pressure)});
          points += 2;
        }
      }
    }
    c.pass = ok;
    c.detail = fmt("min |pressure| %.3e", min_abs) + " over " + std::to_string(points) +
               " grid points (dd < 0, dn > 0)";
  }));

  results.push_back(run_check("N = 1 closed forms vs general series", [&](CheckOutcome& c) {
    struct Pt {
      double d, beta;
    };
    const Pt pts[] = {{1.0, 2.0}, {0.7, 1.3}, {2.0, 5.0}};
    double worst = 0.0;
    for (const auto& p : pts) {
      for (auto bc : {BoundaryPair::DD, BoundaryPair::DN}) {
        const ValueWithError a = closed::detail::energy_n1(p.d, p.beta, bc, ctrl);
        const ValueWithError b =
            closed::detail::energy_series_general(1, p.d, p.beta, bc, ctrl);
        worst = std::max(worst, std::abs(a.value - b.value) / std::abs(a.value));
      }
    }
    c.pass = worst <= 1e-10;
    c.detail = fmt("max rel deviation %.3e", worst) + "  budget 1.0e-10";
  }));

  int failed = 0;
  bool any_convergence = false;
  for (const auto& c : results) {
    if (!c.pass) ++failed;
    any_convergence = any_convergence || c.convergence_failure;
    char line[200];
    std::snprintf(line, sizeof line, "[%s] %-46s %s", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  c.detail.c_str());
    out << line << "\n";
  }
  out << "validation: " << results.size() << " checks, " << (results.size() - failed)
      << " passed, " << failed << " failed\n";
  if (any_convergence) return 3;
  return failed == 0 ? 0 : 1;
}

// -------------------------------------------------------- request plumbing --

int dispatch(const RunRequest& req, std::ostream& out, std::ostream& diag) {
  switch (req.command) {
    case Command::Compute: return cmd_compute(req, out);
    case Command::Scan: return cmd_scan(req, out, diag);
    case Command::Validate: return cmd_validate(req, out);
    case Command::Limits: return cmd_limits(req, out);
  }
  throw ValidationError("unknown command");
}

}  // namespace

AxisRange parse_range(const std::string& text) {
  const auto p1 = text.find(':');
  const auto p2 = p1 == std::string::npos ? std::string::npos : text.find(':', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos ||
      text.find(':', p2 + 1) != std::string::npos)
    throw ValidationError("range must be start:stop:count (got '" + text + "')");
  AxisRange r;
  r.start = parse_double(text.substr(0, p1), "range start");
  r.stop = parse_double(text.substr(p1 + 1, p2 - p1 - 1), "range stop");
  const long long count = parse_int(text.substr(p2 + 1), "range count");
  if (count < 2) throw ValidationError("range count must be >= 2");
  if (count > 1000000) throw ValidationError("range count must be <= 1000000");
  if (!std::isfinite(r.start) || !std::isfinite(r.stop) || !(r.start < r.stop))
    throw ValidationError("range must satisfy start < stop");
  r.count = static_cast<int>(count);
  return r;
}

int run(const RunRequest& req, std::ostream& out, std::ostream& diag) {
  if (!req.output_path.empty()) {
    std::ofstream file(req.output_path, std::ios::binary);
    if (!file) throw ValidationError("cannot open output file '" + req.output_path + "'");
    return dispatch(req, file, diag);
  }
  return dispatch(req, out, diag);
}

namespace {

// One subcommand's raw option values plus the CLI11 handles needed to tell
// "given on the command line" from "still the default".
struct SubOpts {
  CLI::App* app = nullptr;
  std::string bc = "dd";
  int dim = 3;
  double sep = 1.0;
  double temp = 0.0;
  std::string sep_range, temp_range;
  std::string format = "json";
  std::string out_path;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::int64_t max_terms = 1000000;
  std::string config_path;
  bool fault = false;
  CLI::Option *o_bc = nullptr, *o_dim = nullptr, *o_sep = nullptr, *o_temp = nullptr,
              *o_sep_range = nullptr, *o_temp_range = nullptr, *o_format = nullptr,
              *o_rel = nullptr, *o_abs = nullptr, *o_max = nullptr, *o_cfg = nullptr;
};

void add_point_options(SubOpts& s, bool with_temperature) {
  s.o_bc = s.app->add_option("--bc", s.bc, "boundary pair: dd, dn or nn");
  s.o_dim = s.app->add_option("--dim", s.dim, "spatial dimension N >= 1");
  s.o_sep = s.app->add_option("--sep", s.sep, "plate separation d > 0");
  if (with_temperature)
    s.o_temp = s.app->add_option("--temp", s.temp, "temperature T >= 0 (0 = zero temperature)");
}

void add_output_options(SubOpts& s) {
  s.o_format = s.app->add_option("--format", s.format, "output format: json or csv");
  s.app->add_option("--out", s.out_path, "write the report to this file instead of stdout");
}

void add_control_options(SubOpts& s) {
  s.o_rel = s.app->add_option("--rel-tol", s.rel_tol, "relative accuracy target");
  s.o_abs = s.app->add_option("--abs-tol", s.abs_tol, "absolute accuracy floor");
  s.o_max = s.app->add_option("--max-terms", s.max_terms, "series/sum term budget");
  s.o_cfg = s.app->add_option("--config", s.config_path,
                              "key=value config file (flags win over file entries)");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("config: cannot open '" + path + "'");
  static const char* known[] = {"bc",     "dim",     "sep",     "temp",
                                "format", "rel_tol", "abs_tol", "max_terms"};
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
  };
  while (std::getline(f, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok)
      throw ValidationError("config: unknown key '" + key + "' on line " +
                            std::to_string(lineno));
    if (val.empty())
      throw ValidationError("config: empty value for '" + key + "' on line " +
                            std::to_string(lineno));
    kv[key] = val;
  }
  return kv;
}

// Layering: built-in defaults, then CASIMIR_REL_TOL, then the config file,
// then explicit command-line flags.
RunRequest resolve(const SubOpts& s, Command cmd) {
  RunRequest req;
  req.command = cmd;

  std::map<std::string, std::string> cfg;
  if (s.o_cfg && s.o_cfg->count()) cfg = read_config_file(s.config_path);
  auto cfg_value = [&](const char* key) -> const std::string* {
    const auto it = cfg.find(key);
    return it == cfg.end() ? nullptr : &it->second;
  };

  double rel = 1e-10;
  if (const char* env = std::getenv("CASIMIR_REL_TOL"); env && *env)
    rel = parse_double(env, "CASIMIR_REL_TOL");
  if (const auto* v = cfg_value("rel_tol")) rel = parse_double(*v, "config rel_tol");
  if (s.o_rel && s.o_rel->count()) rel = s.rel_tol;
  req.ctrl.rel_tol = rel;

  double abs = 1e-14;
  if (const auto* v = cfg_value("abs_tol")) abs = parse_double(*v, "config abs_tol");
  if (s.o_abs && s.o_abs->count()) abs = s.abs_tol;
  req.ctrl.abs_tol = abs;

  std::int64_t max_terms = 1000000;
  if (const auto* v = cfg_value("max_terms")) max_terms = parse_int(*v, "config max_terms");
  if (s.o_max && s.o_max->count()) max_terms = s.max_terms;
  req.ctrl.max_terms = max_terms;

  std::string bc = "dd";
  if (const auto* v = cfg_value("bc")) bc = *v;
  if (s.o_bc && s.o_bc->count()) bc = s.bc;
  req.bc = bc_from_string(bc);

  int dim = 3;
  if (const auto* v = cfg_value("dim")) dim = static_cast<int>(parse_int(*v, "config dim"));
  if (s.o_dim && s.o_dim->count()) dim = s.dim;
  req.n_dim = dim;

  double sep = 1.0;
  if (const auto* v = cfg_value("sep")) sep = parse_double(*v, "config sep");
  if (s.o_sep && s.o_sep->count()) sep = s.sep;
  req.separation = sep;

  double temp = 0.0;
  if (const auto* v = cfg_value("temp")) temp = parse_double(*v, "config temp");
  if (s.o_temp && s.o_temp->count()) temp = s.temp;
  req.temperature = temp;

  std::string format = "json";
  if (const auto* v = cfg_value("format")) format = *v;
  if (s.o_format && s.o_format->count()) format = s.format;
  req.output_format = format_from_string(format);

  req.output_path = s.out_path;
  if (s.o_sep_range && s.o_sep_range->count()) req.separation_range = parse_range(s.sep_range);
  if (s.o_temp_range && s.o_temp_range->count())
    req.temperature_range = parse_range(s.temp_range);
  req.inject_sign_fault = s.fault;
  return req;
}

}  // namespace

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"Casimir energy, free energy, entropy and pressure for a massless scalar field "
               "between two parallel hyperplanes in N spatial dimensions"};
  app.require_subcommand(1);

  SubOpts compute, scan, validate, limits;

  compute.app = app.add_subcommand("compute", "one configuration -> one report");
  add_point_options(compute, true);
  add_output_options(compute);
  add_control_options(compute);

  scan.app = app.add_subcommand("scan", "sweep separation or temperature -> table");
  add_point_options(scan, true);
  scan.o_sep_range =
      scan.app->add_option("--sep-range", scan.sep_range, "separation grid start:stop:count");
  scan.o_temp_range =
      scan.app->add_option("--temp-range", scan.temp_range, "temperature grid start:stop:count");
  scan.o_sep_range->excludes(scan.o_sep);
  scan.o_sep_range->excludes(scan.o_temp_range);
  scan.o_temp_range->excludes(scan.o_temp);
  add_output_options(scan);
  add_control_options(scan);

  validate.app =
      app.add_subcommand("validate", "run the cross-engine consistency suite (exit 0 iff clean)");
  add_control_options(validate);
  validate.app->add_flag("--inject-sign-fault", validate.fault,
                         "debug: flip one pressure sign to prove the suite can fail");

  limits.app = app.add_subcommand("limits", "high-temperature saturation coefficients");
  add_point_options(limits, false);
  add_output_options(limits);
  add_control_options(limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunRequest req;
    if (app.got_subcommand(compute.app)) {
      req = resolve(compute, Command::Compute);
    } else if (app.got_subcommand(scan.app)) {
      req = resolve(scan, Command::Scan);
    } else if (app.got_subcommand(validate.app)) {
      req = resolve(validate, Command::Validate);
    } else {
      req = resolve(limits, Command::Limits);
    }
    return run(req, std::cout, std::cerr);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace casimir::cli
