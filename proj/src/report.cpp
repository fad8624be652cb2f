#include "casimir/report.hpp"

#include <cmath>
#include <cstdio>

#include "casimir/closed_form.hpp"
#include "casimir/mode_sum.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Above beta / (4 pi d) ~ 12 the Bessel series can no longer meet the default
// relative tolerance (its rounding floor grows with the term count), while the
// low-temperature route is already exact to ~1e-16 from ratio 2 on. Switch
// with margin on both sides.
constexpr double kDeepQuantumRatio = 8.0;

// Closed forms evaluate a handful of gamma/zeta factors, each good to about
// 1e-13 relative; one decade of headroom.
double closed_form_bound(double v) { return 1e-12 * std::abs(v); }

CasimirReport zero_temperature_report(const PlateConfig& cfg, BoundaryPair bc) {
  CasimirReport r;
  r.engine = Engine::ClosedForm;
  double e = closed::energy_zero_T(cfg, bc);
  double p = closed::pressure_zero_T(cfg, bc);
  r.energy_per_area = e;
  r.free_energy_per_area = e;  // F = E - T S and T = 0
  r.entropy_per_area = 0.0;
  r.pressure = p;
  r.error_bounds.energy_per_area = closed_form_bound(e);
  r.error_bounds.free_energy_per_area = closed_form_bound(e);
  r.error_bounds.entropy_per_area = 0.0;
  r.error_bounds.pressure = closed_form_bound(p);
  return r;
}

// beta / (4 pi d) > 50: the gap spectrum is effectively frozen out, so the
// totals are the zero-T closed forms plus brute-force thermal corrections.
CasimirReport deep_quantum_report(const PlateConfig& cfg, const ThermalState& state,
                                  BoundaryPair bc, const SeriesControl& ctrl) {
  CasimirReport r;
  r.engine = Engine::ModeSum;
  const double e0 = closed::energy_zero_T(cfg, bc);
  const double p0 = closed::pressure_zero_T(cfg, bc);
  const ValueWithError de =
      oracle::thermal_correction_oracle(cfg, state, bc, oracle::ThermalPart::Energy, ctrl);
  const ValueWithError df =
      oracle::thermal_correction_oracle(cfg, state, bc, oracle::ThermalPart::FreeEnergy, ctrl);
  r.energy_per_area = e0 + de.value;
  r.free_energy_per_area = e0 + df.value;
  r.error_bounds.energy_per_area = closed_form_bound(e0) + de.error;
  r.error_bounds.free_energy_per_area = closed_form_bound(e0) + df.error;

  // S = beta (E - F); the zero-T part cancels identically.
  r.entropy_per_area = state.beta * (r.energy_per_area - r.free_energy_per_area);
  r.error_bounds.entropy_per_area = state.beta * (de.error + df.error);

  // The thermal pressure correction is -d(dF)/dd by central difference. In
  // this regime the d-dependent part of dF is exponentially dead, so the
  // difference mostly certifies that the correction is negligible.
  const double h = 1e-4 * cfg.separation;
  PlateConfig up = cfg, dn = cfg;
  up.separation += h;
  dn.separation -= h;
  const ValueWithError fup =
      oracle::thermal_correction_oracle(up, state, bc, oracle::ThermalPart::FreeEnergy, ctrl);
  const ValueWithError fdn =
      oracle::thermal_correction_oracle(dn, state, bc, oracle::ThermalPart::FreeEnergy, ctrl);
  const double dp = -(fup.value - fdn.value) / (2.0 * h);
  r.pressure = p0 + dp;
  r.error_bounds.pressure = closed_form_bound(p0) + (fup.error + fdn.error) / (2.0 * h) +
                            1e-8 * std::abs(dp) + 1e-30;
  return r;
}

CasimirReport series_report(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                            const SeriesControl& ctrl) {
  CasimirReport r;
  r.engine = Engine::ClosedForm;
  const ValueWithError e = closed::energy_finite_T(cfg, state, bc, ctrl);
  const ValueWithError f = closed::free_energy_finite_T(cfg, state, bc, ctrl);
  const ValueWithError p = closed::pressure_finite_T(cfg, state, bc, ctrl);
  r.energy_per_area = e.value;
  r.free_energy_per_area = f.value;
  r.entropy_per_area = state.beta * (e.value - f.value);
  r.pressure = p.value;
  r.error_bounds.energy_per_area = e.error;
  r.error_bounds.free_energy_per_area = f.error;
  r.error_bounds.entropy_per_area = state.beta * (e.error + f.error);
  r.error_bounds.pressure = p.error;
  return r;
}

}  // namespace

CasimirReport compute_report(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                             const SeriesControl& ctrl) {
  validate_control(ctrl);
  const ConfigBundle bundle = make_config(cfg.n_dim, cfg.separation, state.beta);

  CasimirReport r;
  if (state.zero_temperature()) {
    r = zero_temperature_report(cfg, bc);
  } else if (bc == BoundaryPair::NN) {
    throw ValidationError("nn supports zero-temperature operations only");
  } else if (state.beta / (4.0 * kPi * cfg.separation) > kDeepQuantumRatio && cfg.n_dim <= 3) {
    r = deep_quantum_report(cfg, state, bc, ctrl);
  } else {
    r = series_report(cfg, state, bc, ctrl);
  }
  r.n_dim = cfg.n_dim;
  r.bc = bc;
  r.d = cfg.separation;
  r.T = state.temperature();
  r.classical_ratio = classical_limit_ratio(state, bundle.scale);
  return r;
}

namespace io {

const char* engine_token(Engine e) {
  switch (e) {
    case Engine::ClosedForm: return "closed_form";
    case Engine::ModeSum: return "mode_sum";
    case Engine::Optical: return "optical";
  }
  return "?";
}

const char* bc_token(BoundaryPair bc) {
  switch (bc) {
    case BoundaryPair::DD: return "dd";
    case BoundaryPair::DN: return "dn";
    case BoundaryPair::NN: return "nn";
  }
  return "?";
}

std::string format_sci(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", x);
  return buf;
}

std::string to_json(const CasimirReport& r) {
  std::string s;
  s.reserve(640);
  s += "{\n";
  s += "  \"engine\": \"";
  s += engine_token(r.engine);
  s += "\",\n";
  s += "  \"n_dim\": " + std::to_string(r.n_dim) + ",\n";
  s += "  \"bc\": \"";
  s += bc_token(r.bc);
  s += "\",\n";
  s += "  \"d\": " + format_sci(r.d) + ",\n";
  s += "  \"T\": " + format_sci(r.T) + ",\n";
  s += "  \"energy_per_area\": " + format_sci(r.energy_per_area) + ",\n";
  s += "  \"free_energy_per_area\": " + format_sci(r.free_energy_per_area) + ",\n";
  s += "  \"entropy_per_area\": " + format_sci(r.entropy_per_area) + ",\n";
  s += "  \"pressure\": " + format_sci(r.pressure) + ",\n";
  s += "  \"error_bounds\": {\n";
  s += "    \"energy_per_area\": " + format_sci(r.error_bounds.energy_per_area) + ",\n";
  s += "    \"free_energy_per_area\": " + format_sci(r.error_bounds.free_energy_per_area) + ",\n";
  s += "    \"entropy_per_area\": " + format_sci(r.error_bounds.entropy_per_area) + ",\n";
  s += "    \"pressure\": " + format_sci(r.error_bounds.pressure) + "\n";
  s += "  },\n";
  s += "  \"classical_ratio\": " + format_sci(r.classical_ratio) + "\n";
  s += "}";
  return s;
}

std::string failed_json(int n_dim, BoundaryPair bc, double d, double T, const std::string& what) {
  std::string msg;
  msg.reserve(what.size());
  for (char c : what) {
    if (c == '"' || c == '\\') msg.push_back('\\');
    if (static_cast<unsigned char>(c) >= 0x20) msg.push_back(c);
  }
  std::string s;
  s += "{\n";
  s += "  \"engine\": null,\n";
  s += "  \"n_dim\": " + std::to_string(n_dim) + ",\n";
  s += "  \"bc\": \"";
  s += bc_token(bc);
  s += "\",\n";
  s += "  \"d\": " + format_sci(d) + ",\n";
  s += "  \"T\": " + format_sci(T) + ",\n";
  s += "  \"energy_per_area\": null,\n";
  s += "  \"free_energy_per_area\": null,\n";
  s += "  \"entropy_per_area\": null,\n";
  s += "  \"pressure\": null,\n";
  s += "  \"error_bounds\": null,\n";
  s += "  \"classical_ratio\": null,\n";
  s += "  \"error\": \"" + msg + "\"\n";
  s += "}";
  return s;
}

const char* csv_header() {
  return "axis,value,energy_per_area,free_energy_per_area,entropy_per_area,pressure,"
         "err_E,err_F,err_S,err_P";
}

std::string to_csv_row(const std::string& axis, double axis_value, const CasimirReport& r) {
  std::string s = axis;
  s += ',' + format_sci(axis_value);
  s += ',' + format_sci(r.energy_per_area);
  s += ',' + format_sci(r.free_energy_per_area);
  s += ',' + format_sci(r.entropy_per_area);
  s += ',' + format_sci(r.pressure);
  s += ',' + format_sci(r.error_bounds.energy_per_area);
  s += ',' + format_sci(r.error_bounds.free_energy_per_area);
  s += ',' + format_sci(r.error_bounds.entropy_per_area);
  s += ',' + format_sci(r.error_bounds.pressure);
  return s;
}

std::string failed_csv_row(const std::string& axis, double axis_value) {
  std::string s = axis;
  s += ',' + format_sci(axis_value);
  for (int i = 0; i < 8; ++i) s += ",nan";
  return s;
}

}  // namespace io

}  // namespace casimir
