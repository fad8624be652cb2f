#include "casimir/closed_form.hpp"

#include <cmath>
#include <cstdint>

#include "casimir/numerics.hpp"
#include "casimir/specfun.hpp"

namespace casimir::closed {

namespace {

double dn_sign(BoundaryPair bc, std::int64_t m) {
  return (bc == BoundaryPair::DN && (m % 2 != 0)) ? -1.0 : 1.0;
}

void require_finite_beta(const ThermalState& state) {
  if (state.zero_temperature())
    throw ValidationError("finite-temperature operation called with beta = infinity");
}

void require_thermal_bc(BoundaryPair bc) {
  if (bc == BoundaryPair::NN)
    throw ValidationError("nn supports zero-temperature operations only");
}

struct SeriesSum {
  double value = 0.0;     // signed sum of raw terms
  double tail = 0.0;      // truncation bound on the dropped terms
  double abs_sum = 0.0;   // sum of |terms|, for rounding floors
  double term_floor = 0.0;  // accumulated per-term evaluation error
  std::int64_t n_terms = 0;
};

// Double series sum_{n,m >= 1} t(n, m) whose terms obey
//   |t(n+1, m)| <= ((n+1)/n)^row_power * exp(-a m) * |t(n, m)|
//   |t(n, m+1)| <= exp(-a n) * |t(n, m)|
// (our terms carry K_nu(a m n), and K_nu(x+y) <= exp(-y) K_nu(x)).
// term(n, m, floor) must add its own evaluation-error bound to floor.
// abs_eff is the caller's absolute tolerance divided by the prefactor the
// raw sum will be multiplied with, so budgets live in raw-series units.
template <class TermFn>
SeriesSum sum_thermal_double_series(double a, double row_power, const SeriesControl& ctrl,
                                    double abs_eff, TermFn&& term) {
  SeriesSum out;
  num::KahanSum total;
  double inner_tails = 0.0;
  const double stop_arg = row_power + 3.0;
  for (std::int64_t n = 1;; ++n) {
    num::KahanSum row;
    double row_abs = 0.0;
    double row_tail = 0.0;
    const double r = std::exp(-a * static_cast<double>(n));
    const double rfac = r / (1.0 - r);
    // Geometric weights summing to <= 1 across rows, so the accumulated
    // inner tails stay within one budget share even when many rows are
    // needed (small a).
    const double inner_weight = -std::expm1(-a) * std::exp(-a * static_cast<double>(n - 1));
    for (std::int64_t m = 1;; ++m) {
      if (++out.n_terms > ctrl.max_terms)
        throw ConvergenceError("thermal series: max_terms exhausted before reaching tolerance");
      const double t = term(n, m, out.term_floor);
      row.add(t);
      row_abs += std::abs(t);
      const double scale = std::abs(total.get()) + std::abs(row.get());
      const double budget = 0.125 * (ctrl.rel_tol * scale + abs_eff);
      const double m_tail = std::abs(t) * rfac;
      if (std::abs(t) <= budget && m_tail <= budget * inner_weight) {
        row_tail = m_tail;
        break;
      }
    }
    total.add(row.get());
    out.abs_sum += row_abs;
    inner_tails += row_tail;
    const double q = std::pow((n + 1.0) / n, row_power) * std::exp(-a);
    if (a * n >= stop_arg && q < 1.0) {
      const double row_gauge = row_abs + row_tail;
      const double outer_tail = row_gauge * q / (1.0 - q);
      const double budget = 0.5 * (ctrl.rel_tol * std::abs(total.get()) + abs_eff);
      if (outer_tail <= budget) {
        out.value = total.get();
        out.tail = inner_tails + outer_tail;
        return out;
      }
    }
  }
}

// 1-D series sum_{n >= 1} t(n) with |t(n+1)| <= ratio_bound * |t(n)|.
template <class TermFn>
SeriesSum sum_exp_series(double ratio_bound, const SeriesControl& ctrl, double abs_eff,
                         TermFn&& term) {
  SeriesSum out;
  num::KahanSum total;
  const double rfac = ratio_bound / (1.0 - ratio_bound);
  for (std::int64_t n = 1;; ++n) {
    if (++out.n_terms > ctrl.max_terms)
      throw ConvergenceError("thermal series: max_terms exhausted before reaching tolerance");
    const double t = term(n);
    total.add(t);
    out.abs_sum += std::abs(t);
    const double budget = 0.125 * (ctrl.rel_tol * std::abs(total.get()) + abs_eff);
    const double tail = std::abs(t) * rfac;
    if (std::abs(t) <= budget && tail <= budget) {
      out.value = total.get();
      out.tail = tail;
      return out;
    }
  }
}

// Assemble value + rigorous bound from a prefactor and a raw series, then
// enforce the caller's accuracy budget.
ValueWithError finish_series(double pref, const SeriesSum& s, double extra_value,
                             double extra_floor, const SeriesControl& ctrl) {
  ValueWithError out;
  out.value = extra_value + pref * s.value;
  const double rounding =
      s.abs_sum * static_cast<double>(s.n_terms) * std::numeric_limits<double>::epsilon();
  // a few ulps of the assembled parts: the lead term and the final product
  // are exact-precision quantities whose rounding the series model misses
  const double fp_floor = 32.0 * std::numeric_limits<double>::epsilon() *
                          (std::abs(out.value) + std::abs(extra_value));
  out.error = std::abs(pref) * (s.tail + s.term_floor + rounding) + extra_floor + fp_floor;
  if (out.error > ctrl.rel_tol * std::abs(out.value) + ctrl.abs_tol)
    throw ConvergenceError("thermal series: achievable accuracy exceeds the tolerance budget");
  return out;
}

void require_series_dimension(int n_dim) {
  // Bessel orders used by the series engines must stay within specfun's range.
  if (0.5 * n_dim + 1.0 > 60.0)
    throw ValidationError("dimension too large for the thermal series engine");
}

}  // namespace

double energy_zero_T(const PlateConfig& cfg, BoundaryPair bc) {
  const int n = cfg.n_dim;
  const double d = cfg.separation;
  const double g = specfun::gamma(0.5 * (n + 1));
  const double denom = std::pow(4.0 * M_PI, 0.5 * (n + 1)) * std::pow(d, n);
  switch (bc) {
    case BoundaryPair::DD:
    case BoundaryPair::NN:
      return -g * specfun::riemann_zeta(n + 1.0) / denom;
    case BoundaryPair::DN:
      return g * specfun::dirichlet_eta(n + 1.0) / denom;
  }
  throw ValidationError("unknown boundary pair");
}

double pressure_zero_T(const PlateConfig& cfg, BoundaryPair bc) {
  // E ~ d^{-N} per area, so -dE/dd = N E / d.
  return cfg.n_dim * energy_zero_T(cfg, bc) / cfg.separation;
}

namespace detail {

ValueWithError energy_series_general(int n_dim, double d, double beta, BoundaryPair bc,
                                     const SeriesControl& ctrl) {
  require_series_dimension(n_dim);
  validate_control(ctrl);
  const double nh = 0.5 * n_dim;
  const double a = 4.0 * M_PI * d / beta;
  const double nu = std::abs(nh - 1.0);  // K_{-a} = K_a covers N = 1
  const double pref = -M_PI * std::pow(2.0, 4.0 - nh) * std::pow(d, 2.0 - nh) /
                      std::pow(beta, nh + 2.0);
  auto term = [&](std::int64_t n, std::int64_t m, double& floor_acc) {
    const double coeff = dn_sign(bc, m) * std::pow(static_cast<double>(n), nh + 1.0) *
                         std::pow(static_cast<double>(m), -(nh - 1.0));
    const auto k = specfun::bessel_k(nu, a * static_cast<double>(m) * static_cast<double>(n));
    floor_acc += std::abs(coeff) * k.abs_error;
    return coeff * k.value;
  };
  const SeriesSum s = sum_thermal_double_series(a, nh + 1.0, ctrl, ctrl.abs_tol / std::abs(pref), term);
  return finish_series(pref, s, 0.0, 0.0, ctrl);
}

ValueWithError free_energy_series_general(int n_dim, double d, double beta, BoundaryPair bc,
                                          const SeriesControl& ctrl) {
  if (n_dim == 1)
    throw ValidationError(
        "free energy general series is undefined at n_dim = 1; use the exponential closed form");
  require_series_dimension(n_dim);
  validate_control(ctrl);
  const double nh = 0.5 * n_dim;
  const double a = 4.0 * M_PI * d / beta;
  // Leading 1/beta (classical) term.
  const double lead_mag = specfun::gamma(nh) / (std::pow(M_PI, nh) * std::exp2(n_dim) *
                                                std::pow(d, n_dim - 1.0) * beta);
  const double lead = (bc == BoundaryPair::DN)
                          ? lead_mag * specfun::dirichlet_eta(static_cast<double>(n_dim))
                          : -lead_mag * specfun::riemann_zeta(static_cast<double>(n_dim));
  const double pref = -std::pow(2.0, 2.0 - nh) * std::pow(d, 1.0 - nh) / std::pow(beta, nh + 1.0);
  auto term = [&](std::int64_t n, std::int64_t m, double& floor_acc) {
    const double coeff =
        dn_sign(bc, m) * std::pow(static_cast<double>(n) / static_cast<double>(m), nh);
    const auto k = specfun::bessel_k(nh, a * static_cast<double>(m) * static_cast<double>(n));
    floor_acc += std::abs(coeff) * k.abs_error;
    return coeff * k.value;
  };
  const SeriesSum s = sum_thermal_double_series(a, nh, ctrl, ctrl.abs_tol / std::abs(pref), term);
  const double lead_floor = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(lead);
  return finish_series(pref, s, lead, lead_floor, ctrl);
}

ValueWithError energy_n1(double d, double beta, BoundaryPair bc, const SeriesControl& ctrl) {
  validate_control(ctrl);
  const double a = 4.0 * M_PI * d / beta;  // 1/sinh^2(a n / 2) decays like exp(-a n)
  const double pref = -M_PI * d / (beta * beta);
  auto term = [&](std::int64_t n) {
    const double em = -std::expm1(-a * static_cast<double>(n));  // 1 - exp(-a n)
    const double e = std::exp(-a * static_cast<double>(n));
    return dn_sign(bc, n) * 4.0 * e / (em * em);
  };
  const SeriesSum s = sum_exp_series(std::exp(-a), ctrl, ctrl.abs_tol / std::abs(pref), term);
  SeriesSum with_floor = s;
  with_floor.term_floor = 4e-16 * s.abs_sum;
  return finish_series(pref, with_floor, 0.0, 0.0, ctrl);
}

ValueWithError free_energy_n1(double d, double beta, BoundaryPair bc, const SeriesControl& ctrl) {
  validate_control(ctrl);
  const double a = 4.0 * M_PI * d / beta;
  const double pref = -1.0 / beta;
  auto term = [&](std::int64_t n) {
    const double denom = std::expm1(a * static_cast<double>(n));
    if (std::isinf(denom)) return 0.0;
    return dn_sign(bc, n) / (static_cast<double>(n) * denom);
  };
  const SeriesSum s = sum_exp_series(std::exp(-a), ctrl, ctrl.abs_tol / std::abs(pref), term);
  SeriesSum with_floor = s;
  with_floor.term_floor = 4e-16 * s.abs_sum;
  return finish_series(pref, with_floor, 0.0, 0.0, ctrl);
}

}  // namespace detail

ValueWithError energy_finite_T(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                               const SeriesControl& ctrl) {
  require_finite_beta(state);
  require_thermal_bc(bc);
  if (cfg.n_dim == 1) return detail::energy_n1(cfg.separation, state.beta, bc, ctrl);
  return detail::energy_series_general(cfg.n_dim, cfg.separation, state.beta, bc, ctrl);
}

ValueWithError free_energy_finite_T(const PlateConfig& cfg, const ThermalState& state,
                                    BoundaryPair bc, const SeriesControl& ctrl) {
  require_finite_beta(state);
  require_thermal_bc(bc);
  if (cfg.n_dim == 1) return detail::free_energy_n1(cfg.separation, state.beta, bc, ctrl);
  return detail::free_energy_series_general(cfg.n_dim, cfg.separation, state.beta, bc, ctrl);
}

ValueWithError entropy(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                       const SeriesControl& ctrl) {
  const ValueWithError e = energy_finite_T(cfg, state, bc, ctrl);
  const ValueWithError f = free_energy_finite_T(cfg, state, bc, ctrl);
  ValueWithError out;
  out.value = state.beta * (e.value - f.value);
  out.error = state.beta * (e.error + f.error);
  return out;
}

double entropy_high_T(const PlateConfig& cfg, BoundaryPair bc) {
  require_thermal_bc(bc);
  const int n = cfg.n_dim;
  if (n == 1) return 0.0;  // only a d-independent constant remains, dropped by convention
  const double nh = 0.5 * n;
  const double base = specfun::gamma(nh) /
                      (std::pow(M_PI, nh) * std::exp2(n) * std::pow(cfg.separation, n - 1.0));
  if (bc == BoundaryPair::DD) return base * specfun::riemann_zeta(static_cast<double>(n));
  return -base * specfun::dirichlet_eta(static_cast<double>(n));
}

ValueWithError pressure_finite_T(const PlateConfig& cfg, const ThermalState& state,
                                 BoundaryPair bc, const SeriesControl& ctrl) {
  require_finite_beta(state);
  require_thermal_bc(bc);
  validate_control(ctrl);
  const double d = cfg.separation;
  const double beta = state.beta;
  ValueWithError out;

  if (cfg.n_dim == 1) {
    // -dF/dd collapses to E/d exactly for the N = 1 closed forms.
    const ValueWithError e = detail::energy_n1(d, beta, bc, ctrl);
    out.value = e.value / d;
    out.error = e.error / d;
  } else {
    require_series_dimension(cfg.n_dim);
    const int n_dim = cfg.n_dim;
    const double nh = 0.5 * n_dim;
    const double a = 4.0 * M_PI * d / beta;
    const double lead_mag = specfun::gamma(nh) / (std::pow(M_PI, nh) * std::exp2(n_dim) *
                                                  std::pow(d, n_dim - 1.0) * beta);
    const double lead = (bc == BoundaryPair::DN)
                            ? lead_mag * specfun::dirichlet_eta(static_cast<double>(n_dim))
                            : -lead_mag * specfun::riemann_zeta(static_cast<double>(n_dim));
    const double lead_pressure = (n_dim - 1.0) * lead / d;
    const double pref = -std::pow(2.0, 2.0 - nh) * std::pow(d, 1.0 - nh) /
                        std::pow(beta, nh + 1.0) / d;
    auto term = [&](std::int64_t n, std::int64_t m, double& floor_acc) {
      const double z = a * static_cast<double>(m) * static_cast<double>(n);
      specfun::BesselKResult km1, k0, kp1;
      specfun::bessel_k_triple(nh, z, km1, k0, kp1);
      const double coeff =
          dn_sign(bc, m) * std::pow(static_cast<double>(n) / static_cast<double>(m), nh);
      const double bracket = (nh - 1.0) * k0.value + 0.5 * z * (km1.value + kp1.value);
      floor_acc += std::abs(coeff) *
                   ((nh - 1.0) * k0.abs_error + 0.5 * z * (km1.abs_error + kp1.abs_error));
      return coeff * bracket;
    };
    const SeriesSum s = sum_thermal_double_series(a, nh + 1.0, ctrl, ctrl.abs_tol / std::abs(pref), term);
    const double lead_floor = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(lead_pressure);
    out = finish_series(pref, s, lead_pressure, lead_floor, ctrl);
  }

  // Central finite-difference self-check against the free energy, run at a
  // tightened tolerance so FD noise stays below the comparison threshold.
  SeriesControl tight = ctrl;
  tight.rel_tol = std::min(ctrl.rel_tol, 1e-12);
  const double h = 1e-5 * d;
  PlateConfig hi = cfg, lo = cfg;
  hi.separation = d + h;
  lo.separation = d - h;
  const ValueWithError f_hi = free_energy_finite_T(hi, state, bc, tight);
  const ValueWithError f_lo = free_energy_finite_T(lo, state, bc, tight);
  const double p_fd = -(f_hi.value - f_lo.value) / (2.0 * h);
  const double fd_noise = (f_hi.error + f_lo.error) / (2.0 * h);
  const double allowed = 1e-6 * std::abs(out.value) + 10.0 * (fd_noise + out.error) + ctrl.abs_tol;
  if (std::abs(p_fd - out.value) > allowed)
    throw ConvergenceError("pressure: analytic derivative disagrees with finite difference");
  return out;
}

}  // namespace casimir::closed
