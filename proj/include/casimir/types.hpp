#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

enum class BoundaryPair { DD, DN, NN };
enum class Engine { ClosedForm, ModeSum, Optical };

// Bad arguments or unsupported parameter combinations. CLI maps this to exit 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A series, quadrature or tolerance budget could not be met. CLI maps this to exit 3.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unstable limit extrapolation in the mode-summation engine.
struct ExtrapolationError : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

const char* to_string(BoundaryPair bc);
const char* to_string(Engine e);
BoundaryPair bc_from_string(const std::string& s);

// Geometry: spatial dimension N >= 1 and plate separation d > 0.
struct PlateConfig {
  int n_dim = 3;
  double separation = 1.0;
};

// Inverse temperature in natural units (hbar = c = k_B = 1); +infinity encodes T = 0.
struct ThermalState {
  double beta = std::numeric_limits<double>::infinity();
  bool zero_temperature() const { return std::isinf(beta); }
  double temperature() const { return zero_temperature() ? 0.0 : 1.0 / beta; }
};

// Geometry-dependent temperature scale t_c = pi / d.
struct ClassicalScale {
  double t_c = 0.0;
};

// Tolerances and truncation limits shared by all series engines.
// damping_ladder entries are dimensionless fractions of the separation; the
// mode-summation engine evaluates its regulator at lambda = entry * d.
struct SeriesControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::int64_t max_terms = 1000000;
  std::vector<double> damping_ladder = {0.1, 0.05, 0.025, 0.0125};
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

struct ErrorBounds {
  double energy_per_area = 0.0;
  double free_energy_per_area = 0.0;
  double entropy_per_area = 0.0;
  double pressure = 0.0;
};

// Everything one computation point produces. Quantities are densities per unit
// plate hyper-area; pressure is force per unit area on a plate, negative means
// attraction.
struct CasimirReport {
  Engine engine = Engine::ClosedForm;
  int n_dim = 0;
  BoundaryPair bc = BoundaryPair::DD;
  double d = 0.0;
  double T = 0.0;
  double energy_per_area = 0.0;
  double free_energy_per_area = 0.0;
  double entropy_per_area = 0.0;
  double pressure = 0.0;
  ErrorBounds error_bounds;
  double classical_ratio = 0.0;
};

struct ConfigBundle {
  PlateConfig cfg;
  ThermalState state;
  ClassicalScale scale;
};

// Validates and assembles the three value types; beta may be +infinity.
ConfigBundle make_config(int n_dim, double separation, double beta);

// T / t_c, zero at zero temperature.
double classical_limit_ratio(const ThermalState& state, const ClassicalScale& scale);

void validate_control(const SeriesControl& ctrl);

}  // namespace casimir
