#include "casimir/mode_sum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "casimir/numerics.hpp"
#include "casimir/specfun.hpp"

namespace casimir::oracle {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Truncation exponents: contributions beyond exp(-60) (damped sums) or
// exp(-80) (Planck tails) are far below every tolerance in use.
constexpr double kDampedTail = 60.0;
constexpr double kPlanckTail = 80.0;

void require_supported(const PlateConfig& cfg) {
  if (cfg.n_dim < 1 || cfg.n_dim > 3)
    throw ValidationError("mode-summation oracle supports n_dim in {1, 2, 3}");
  if (!(cfg.separation > 0.0) || !std::isfinite(cfg.separation))
    throw ValidationError("separation must be positive and finite");
}

// omega / (exp(beta omega) - 1), continued to 1/beta at omega = 0.
double planck_energy(double beta, double w) {
  if (w <= 0.0) return 1.0 / beta;
  const double t = std::expm1(beta * w);
  if (std::isinf(t)) return 0.0;
  return w / t;
}

// ln(1 - exp(-beta omega)) / beta, omega > 0.
double planck_free(double beta, double w) {
  return std::log1p(-std::exp(-beta * w)) / beta;
}

// ln((1 - e^{-x}) / x): the Planck logarithm with its small-x divergence
// removed; smooth, and -> 0 as x -> 0.
double log_ratio_r(double x) {
  if (x <= 0.0) return 0.0;
  if (x < 1.0) return std::log(-std::expm1(-x) / x);
  return std::log1p(-std::exp(-x)) - std::log(x);
}

// One Gauss-Legendre panel evaluated at 64 points, with |64pt - 32pt| added
// to err as an embedded error estimate.
template <class F>
double panel_64_32(F&& f, double a, double b, double& err) {
  const double hi = num::gl_panel(f, a, b, num::gauss_legendre(64));
  const double lo = num::gl_panel(f, a, b, num::gauss_legendre(32));
  err += std::abs(hi - lo);
  return hi;
}

// Panels [a0, a0+w0], then doubling widths, clipped at t_end.
template <class F>
double panels_from(F&& f, double a0, double w0, double t_end, double& err) {
  num::KahanSum acc;
  double a = a0;
  double w = w0;
  while (a < t_end) {
    const double b = std::min(a + w, t_end);
    acc.add(panel_64_32(f, a, b, err));
    a = b;
    w *= 2.0;
  }
  return acc.get();
}

// Sum of g(sqrt(kperp^2 + k_n^2)) over the longitudinal spectrum, truncated
// once k_n exceeds q_max.
template <class G>
double longitudinal_sum(BoundaryPair bc, double d, double kperp, double q_max,
                        std::int64_t max_terms, G&& g) {
  const double step = kPi / d;
  const double shift = (bc == BoundaryPair::DN) ? 0.5 : 0.0;
  num::KahanSum acc;
  for (std::int64_t n = 1;; ++n) {
    if (n > max_terms)
      throw ConvergenceError(
          "mode sum: max_terms exhausted before the tail became negligible");
    const double kn = step * (static_cast<double>(n) - shift);
    if (kn > q_max) break;
    acc.add(g(std::hypot(kperp, kn)));
  }
  return acc.get();
}

// Discrete-minus-continuum longitudinal difference for the damped
// zero-temperature weight omega * exp(-lambda omega) at fixed transverse
// magnitude kperp. Like plates carry a half-weight edge mode at k_long = 0.
double damped_difference(BoundaryPair bc, double d, double kperp, double lambda,
                         std::int64_t max_terms, double& quad_err) {
  auto g = [lambda](double w) { return w * std::exp(-lambda * w); };
  const double q_max = kDampedTail / lambda;
  num::KahanSum acc;
  if (bc != BoundaryPair::DN) acc.add(0.5 * g(kperp));
  acc.add(longitudinal_sum(bc, d, kperp, q_max, max_terms, g));
  double qe = 0.0;
  const double integral = num::integrate_geometric(
      [&](double q) { return g(std::hypot(kperp, q)); }, 0.5 * d, q_max, &qe);
  quad_err += (d / kPi) * qe;
  acc.add(-(d / kPi) * integral);
  return acc.get();
}

// Transverse measure: d^{N-1}k / (2 pi)^{N-1} = C_N k^{N-2} dk with
// C_N = 2 pi^{(N-1)/2} / (Gamma((N-1)/2) (2 pi)^{N-1}). Needs N >= 2.
double transverse_prefactor(int n_dim) {
  return 2.0 * std::pow(kPi, 0.5 * (n_dim - 1)) /
         (specfun::gamma(0.5 * (n_dim - 1)) * std::pow(2.0 * kPi, n_dim - 1.0));
}

// Damped interaction energy per area at one damping length lambda.
double damped_energy_sum(const PlateConfig& cfg, BoundaryPair bc, double lambda,
                         std::int64_t max_terms, double& quad_err) {
  const double d = cfg.separation;
  if (cfg.n_dim == 1) {
    double qe = 0.0;
    const double v = 0.5 * damped_difference(bc, d, 0.0, lambda, max_terms, qe);
    quad_err += 0.5 * qe;
    return v;
  }
  const double cn = transverse_prefactor(cfg.n_dim);
  const double t_end = kDampedTail / lambda;
  const double power = cfg.n_dim - 2.0;
  double outer_err = 0.0;
  double inner_err = 0.0;
  const double integral = num::integrate_geometric(
      [&](double k) {
        return std::pow(k, power) *
               damped_difference(bc, d, k, lambda, max_terms, inner_err);
      },
      0.5 * d, t_end, &outer_err);
  quad_err += 0.5 * cn * (outer_err + inner_err);
  return 0.5 * cn * integral;
}

// Sum of |Lagrange weights| of the fit at zero: how much per-point noise the
// extrapolation can amplify.
double lagrange_weight_norm(const std::vector<double>& xs) {
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) w *= xs[j] / (xs[j] - xs[i]);
    s += std::abs(w);
  }
  return s;
}

// Thermal energy difference at fixed kperp. The edge weight is finite here.
double thermal_energy_difference(BoundaryPair bc, double d, double beta,
                                 double kperp, std::int64_t max_terms,
                                 double& quad_err) {
  auto g = [beta](double w) { return planck_energy(beta, w); };
  const double q_max = kPlanckTail / beta;
  const double h0 = std::min(0.5 * d, 1.0 / beta);
  num::KahanSum acc;
  if (bc != BoundaryPair::DN) acc.add(0.5 * planck_energy(beta, kperp));
  acc.add(longitudinal_sum(bc, d, kperp, q_max, max_terms, g));
  double qe = 0.0;
  const double integral = num::integrate_geometric(
      [&](double q) { return planck_energy(beta, std::hypot(kperp, q)); }, h0,
      q_max, &qe);
  quad_err += (d / kPi) * qe;
  acc.add(-(d / kPi) * integral);
  return acc.get();
}

// Continuum integral of the free-energy weight over the longitudinal
// wavenumber. When the frequency floor beta*kperp is small the logarithmic
// q -> 0 region is integrated in closed form and only the smooth remainder
// ln((1-e^{-x})/x) is quadrated; splitting at large beta*kperp would instead
// subtract two nearly equal logarithms, so the plain integrand is used there.
double free_continuum_integral(double beta, double kperp, double h0,
                               double q_max, double& quad_err) {
  auto full = [&](double q) { return planck_free(beta, std::hypot(kperp, q)); };
  if (beta * kperp > 1.0)
    return num::integrate_geometric(full, h0, q_max, &quad_err);
  const double h = std::min(h0, q_max);
  // (1/beta) * integral_0^h ln(beta sqrt(kperp^2 + q^2)) dq
  const double analytic =
      (h * std::log(beta) +
       0.5 * (h * std::log(kperp * kperp + h * h) - 2.0 * h +
              2.0 * kperp * std::atan2(h, kperp))) /
      beta;
  num::KahanSum acc;
  acc.add(analytic);
  acc.add(panel_64_32(
      [&](double q) { return log_ratio_r(beta * std::hypot(kperp, q)) / beta; },
      0.0, h, quad_err));
  acc.add(panels_from(full, h, h, q_max, quad_err));
  return acc.get();
}

// Thermal free-energy difference at fixed kperp > 0 (or kperp = 0 with mixed
// plates at n_dim >= 2, where no edge weight exists). With regularized_edge
// the like-plate edge enters as ln((1-e^{-beta k})/(beta k))/(2 beta), i.e.
// with its logarithmic divergence removed; the caller then integrates that
// divergence in closed form.
double thermal_free_difference(BoundaryPair bc, double d, double beta,
                               double kperp, bool regularized_edge,
                               std::int64_t max_terms, double& quad_err) {
  auto g = [beta](double w) { return planck_free(beta, w); };
  const double q_max = kPlanckTail / beta;
  const double h0 = std::min(0.5 * d, 1.0 / beta);
  num::KahanSum acc;
  if (bc != BoundaryPair::DN) {
    acc.add(regularized_edge ? 0.5 * log_ratio_r(beta * kperp) / beta
                             : 0.5 * planck_free(beta, kperp));
  }
  acc.add(longitudinal_sum(bc, d, kperp, q_max, max_terms, g));
  double qe = 0.0;
  const double integral = free_continuum_integral(beta, kperp, h0, q_max, qe);
  quad_err += (d / kPi) * qe;
  acc.add(-(d / kPi) * integral);
  return acc.get();
}

// One-dimensional thermal free-energy difference. The naive edge weight
// ln(1 - e^{-beta k})/(2 beta) diverges at k = 0; its renormalized value is
// ln(beta/(2d))/(2 beta) for like plates and -ln(2)/(2 beta) for mixed ones.
double thermal_free_difference_n1(BoundaryPair bc, double d, double beta,
                                  std::int64_t max_terms, double& quad_err) {
  const double edge = (bc == BoundaryPair::DN)
                          ? -std::log(2.0) / (2.0 * beta)
                          : std::log(beta / (2.0 * d)) / (2.0 * beta);
  auto g = [beta](double w) { return planck_free(beta, w); };
  const double q_max = kPlanckTail / beta;
  const double h0 = std::min(0.5 * d, 1.0 / beta);
  num::KahanSum acc;
  acc.add(edge);
  acc.add(longitudinal_sum(bc, d, 0.0, q_max, max_terms, g));
  double qe = 0.0;
  const double integral = free_continuum_integral(beta, 0.0, h0, q_max, qe);
  quad_err += (d / kPi) * qe;
  acc.add(-(d / kPi) * integral);
  return acc.get();
}

// Transverse integral of the thermal difference for n_dim >= 2.
double thermal_difference_integral(const PlateConfig& cfg, BoundaryPair bc,
                                   double beta, ThermalPart part,
                                   std::int64_t max_terms, double& quad_err) {
  const double d = cfg.separation;
  const double t_end = kPlanckTail / beta;
  const double h0 = std::min({0.5 * d, 1.0 / beta, t_end});
  const double power = cfg.n_dim - 2.0;
  double outer_err = 0.0;
  double inner_err = 0.0;
  num::KahanSum acc;
  if (part == ThermalPart::Energy) {
    acc.add(num::integrate_geometric(
        [&](double k) {
          return std::pow(k, power) *
                 thermal_energy_difference(bc, d, beta, k, max_terms, inner_err);
        },
        h0, t_end, &outer_err));
  } else if (bc == BoundaryPair::DN) {
    acc.add(num::integrate_geometric(
        [&](double k) {
          return std::pow(k, power) * thermal_free_difference(
                                          bc, d, beta, k, false, max_terms,
                                          inner_err);
        },
        h0, t_end, &outer_err));
  } else {
    // Like plates: the edge weight makes the integrand diverge like
    // k^{N-2} ln(beta k)/(2 beta) at k -> 0. First panel: that part in closed
    // form plus the regularized remainder; later panels: plain integrand.
    const double nm1 = cfg.n_dim - 1.0;
    acc.add(std::pow(h0, nm1) / (2.0 * beta) *
            (std::log(beta * h0) / nm1 - 1.0 / (nm1 * nm1)));
    acc.add(panel_64_32(
        [&](double k) {
          return std::pow(k, power) * thermal_free_difference(
                                          bc, d, beta, k, true, max_terms,
                                          inner_err);
        },
        0.0, h0, outer_err));
    acc.add(panels_from(
        [&](double k) {
          return std::pow(k, power) * thermal_free_difference(
                                          bc, d, beta, k, false, max_terms,
                                          inner_err);
        },
        h0, h0, t_end, outer_err));
  }
  quad_err += outer_err + inner_err;
  return acc.get();
}

}  // namespace

double mode_energy(double beta, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega))
    throw ValidationError("mode frequency must be finite and nonnegative");
  if (!(beta > 0.0))
    throw ValidationError("beta must be positive (+infinity allowed)");
  if (std::isinf(beta)) return 0.5 * omega;
  return 0.5 * omega + planck_energy(beta, omega);
}

double mode_free_energy(double beta, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega))
    throw ValidationError("mode frequency must be finite and nonnegative");
  if (!(beta > 0.0))
    throw ValidationError("beta must be positive (+infinity allowed)");
  if (std::isinf(beta)) return 0.5 * omega;
  if (omega == 0.0)
    throw ValidationError(
        "free energy of a zero-frequency mode diverges at finite temperature");
  return 0.5 * omega + planck_free(beta, omega);
}

double k_longitudinal(BoundaryPair bc, double separation, int n) {
  if (!(separation > 0.0) || !std::isfinite(separation))
    throw ValidationError("separation must be positive and finite");
  if (n < 1) throw ValidationError("mode index starts at 1");
  const double shift = (bc == BoundaryPair::DN) ? 0.5 : 0.0;
  return kPi * (static_cast<double>(n) - shift) / separation;
}

ValueWithError energy_zero_T_oracle(const PlateConfig& cfg, BoundaryPair bc,
                                    const SeriesControl& ctrl) {
  require_supported(cfg);
  validate_control(ctrl);
  const auto& ladder = ctrl.damping_ladder;
  if (ladder.size() < 3)
    throw ValidationError("damping ladder needs at least three entries");
  for (double frac : ladder)
    if (!(frac > 0.0) || frac > 0.2)
      throw ValidationError(
          "damping ladder entries must lie in (0, 0.2] separations");

  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(ladder.size());
  ys.reserve(ladder.size());
  double worst_quad = 0.0;
  for (double frac : ladder) {
    const double lambda = frac * cfg.separation;
    double qe = 0.0;
    ys.push_back(damped_energy_sum(cfg, bc, lambda, ctrl.max_terms, qe));
    xs.push_back(lambda);
    worst_quad = std::max(worst_quad, qe);
  }

  const num::Extrapolation ex = num::extrapolate_to_zero(xs, ys);
  // The damping error is even in lambda, so rel_tol-level spreads are not
  // reachable by a cubic fit; 3e-6 reflects what the ladder actually delivers.
  const double eff_rel = std::max(ctrl.rel_tol, 3e-6);
  if (ex.loo_spread > 10.0 * eff_rel * std::abs(ex.value) + 10.0 * ctrl.abs_tol)
    throw ExtrapolationError(
        "zero-temperature oracle: leave-one-out spread of the damping "
        "extrapolation exceeds the stability budget");
  // The cubic fit drops the quartic term of the even damping error; allow for
  // it explicitly on top of the spread and the amplified quadrature noise.
  const double err = 2.0 * ex.loo_spread + lagrange_weight_norm(xs) * worst_quad +
                     2e-6 * std::abs(ex.value);
  return {ex.value, err};
}

ValueWithError thermal_correction_oracle(const PlateConfig& cfg,
                                         const ThermalState& state,
                                         BoundaryPair bc, ThermalPart part,
                                         const SeriesControl& ctrl) {
  require_supported(cfg);
  validate_control(ctrl);
  if (state.zero_temperature())
    throw ValidationError(
        "finite-temperature operation called with beta = infinity");
  if (bc == BoundaryPair::NN)
    throw ValidationError("nn supports zero-temperature operations only");

  const double beta = state.beta;
  const double d = cfg.separation;
  double qe = 0.0;
  double value = 0.0;
  if (cfg.n_dim == 1) {
    value = (part == ThermalPart::Energy)
                ? thermal_energy_difference(bc, d, beta, 0.0, ctrl.max_terms, qe)
                : thermal_free_difference_n1(bc, d, beta, ctrl.max_terms, qe);
  } else {
    const double cn = transverse_prefactor(cfg.n_dim);
    value = cn * thermal_difference_integral(cfg, bc, beta, part,
                                             ctrl.max_terms, qe);
    qe *= cn;
  }
  return {value, 2.0 * qe + 1e-9 * std::abs(value)};
}

ValueWithError energy_finite_T_oracle(const PlateConfig& cfg,
                                      const ThermalState& state,
                                      BoundaryPair bc,
                                      const SeriesControl& ctrl) {
  const ValueWithError zero = energy_zero_T_oracle(cfg, bc, ctrl);
  const ValueWithError corr =
      thermal_correction_oracle(cfg, state, bc, ThermalPart::Energy, ctrl);
  return {zero.value + corr.value, zero.error + corr.error};
}

ValueWithError free_energy_finite_T_oracle(const PlateConfig& cfg,
                                           const ThermalState& state,
                                           BoundaryPair bc,
                                           const SeriesControl& ctrl) {
  const ValueWithError zero = energy_zero_T_oracle(cfg, bc, ctrl);
  const ValueWithError corr =
      thermal_correction_oracle(cfg, state, bc, ThermalPart::FreeEnergy, ctrl);
  return {zero.value + corr.value, zero.error + corr.error};
}

}  // namespace casimir::oracle
