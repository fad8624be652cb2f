#include <pybind11/pybind11.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "casimir/closed_form.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/optical.hpp"
#include "casimir/report.hpp"
#include "casimir/types.hpp"

namespace py = pybind11;

namespace {

using namespace casimir;

SeriesControl control(double rel_tol, double abs_tol, std::int64_t max_terms) {
  SeriesControl ctrl;
  ctrl.rel_tol = rel_tol;
  ctrl.abs_tol = abs_tol;
  ctrl.max_terms = max_terms;
  validate_control(ctrl);
  return ctrl;
}

PlateConfig plate(int n_dim, double separation) {
  return make_config(n_dim, separation, std::numeric_limits<double>::infinity()).cfg;
}

ThermalState thermal(double temperature) {
  if (!std::isfinite(temperature) || temperature < 0.0)
    throw ValidationError("temperature must be finite and >= 0");
  ThermalState state;
  if (temperature > 0.0) state.beta = 1.0 / temperature;
  return state;
}

ThermalState finite_thermal(double temperature) {
  ThermalState state = thermal(temperature);
  if (state.zero_temperature())
    throw ValidationError("temperature must be > 0 here; use the zero_t forms at T = 0");
  return state;
}

py::dict as_dict(const CasimirReport& r) {
  py::dict eb;
  eb["energy_per_area"] = r.error_bounds.energy_per_area;
  eb["free_energy_per_area"] = r.error_bounds.free_energy_per_area;
  eb["entropy_per_area"] = r.error_bounds.entropy_per_area;
  eb["pressure"] = r.error_bounds.pressure;
  py::dict out;
  out["engine"] = io::engine_token(r.engine);
  out["n_dim"] = r.n_dim;
  out["bc"] = io::bc_token(r.bc);
  out["d"] = r.d;
  out["T"] = r.T;
  out["energy_per_area"] = r.energy_per_area;
  out["free_energy_per_area"] = r.free_energy_per_area;
  out["entropy_per_area"] = r.entropy_per_area;
  out["pressure"] = r.pressure;
  out["error_bounds"] = eb;
  out["classical_ratio"] = r.classical_ratio;
  return out;
}

py::tuple as_tuple(const ValueWithError& v) { return py::make_tuple(v.value, v.error); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Casimir energy, free energy, entropy and pressure per unit plate area "
      "for a massless scalar field between two parallel hyperplanes in N "
      "spatial dimensions (natural units, hbar = c = k_B = 1)";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def(
      "compute",
      [](int n_dim, double separation, const std::string& bc, double temperature, double rel_tol,
         double abs_tol, std::int64_t max_terms) {
        const SeriesControl ctrl = control(rel_tol, abs_tol, max_terms);
        const PlateConfig cfg = plate(n_dim, separation);
        return as_dict(compute_report(cfg, thermal(temperature), bc_from_string(bc), ctrl));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("temperature") = 0.0,
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1000000,
      "Full report for one point; same fields as the CLI JSON output.");

  m.def(
      "energy_zero_t",
      [](int n_dim, double separation, const std::string& bc) {
        return closed::energy_zero_T(plate(n_dim, separation), bc_from_string(bc));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"),
      "Zero-temperature interaction energy per unit plate area.");

  m.def(
      "pressure_zero_t",
      [](int n_dim, double separation, const std::string& bc) {
        return closed::pressure_zero_T(plate(n_dim, separation), bc_from_string(bc));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"),
      "Zero-temperature pressure on a plate; negative means attraction.");

  m.def(
      "energy_finite_t",
      [](int n_dim, double separation, const std::string& bc, double temperature, double rel_tol,
         double abs_tol, std::int64_t max_terms) {
        return as_tuple(closed::energy_finite_T(plate(n_dim, separation),
                                                finite_thermal(temperature), bc_from_string(bc),
                                                control(rel_tol, abs_tol, max_terms)));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("temperature"),
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1000000,
      "Total energy per unit area at T > 0 as (value, error_bound).");

  m.def(
      "free_energy_finite_t",
      [](int n_dim, double separation, const std::string& bc, double temperature, double rel_tol,
         double abs_tol, std::int64_t max_terms) {
        return as_tuple(closed::free_energy_finite_T(plate(n_dim, separation),
                                                     finite_thermal(temperature),
                                                     bc_from_string(bc),
                                                     control(rel_tol, abs_tol, max_terms)));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("temperature"),
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1000000,
      "Free energy per unit area at T > 0 as (value, error_bound).");

  m.def(
      "entropy",
      [](int n_dim, double separation, const std::string& bc, double temperature, double rel_tol,
         double abs_tol, std::int64_t max_terms) {
        return as_tuple(closed::entropy(plate(n_dim, separation), finite_thermal(temperature),
                                        bc_from_string(bc), control(rel_tol, abs_tol, max_terms)));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("temperature"),
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1000000,
      "Entropy per unit area, S = beta (E - F), as (value, error_bound).");

  m.def(
      "pressure_finite_t",
      [](int n_dim, double separation, const std::string& bc, double temperature, double rel_tol,
         double abs_tol, std::int64_t max_terms) {
        return as_tuple(closed::pressure_finite_T(plate(n_dim, separation),
                                                  finite_thermal(temperature), bc_from_string(bc),
                                                  control(rel_tol, abs_tol, max_terms)));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("temperature"),
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1000000,
      "Pressure on a plate at T > 0 as (value, error_bound).");

  m.def(
      "entropy_high_t",
      [](int n_dim, double separation, const std::string& bc) {
        return closed::entropy_high_T(plate(n_dim, separation), bc_from_string(bc));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"),
      "High-temperature entropy plateau per unit area (exactly 0 for N = 1).");

  m.def(
      "oracle_energy_zero_t",
      [](int n_dim, double separation, const std::string& bc, double rel_tol, double abs_tol,
         std::int64_t max_terms) {
        return as_tuple(oracle::energy_zero_T_oracle(plate(n_dim, separation), bc_from_string(bc),
                                                     control(rel_tol, abs_tol, max_terms)));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("rel_tol") = 1e-10,
      py::arg("abs_tol") = 1e-14, py::arg("max_terms") = 1000000,
      "Brute-force damped mode sum at T = 0 (N <= 3), as (value, error_bound). "
      "Slow; independent of the closed forms.");

  m.def(
      "optical_even_energy",
      [](int n_dim, double separation, const std::string& bc, int n_max) {
        return as_tuple(
            optical::even_energy_per_area(plate(n_dim, separation), bc_from_string(bc), n_max));
      },
      py::arg("n_dim"), py::arg("separation"), py::arg("bc"), py::arg("n_max") = 10000,
      "Image-path (even family) energy per unit area as (value, tail_bound).");
}
