#pragma once

#include "casimir/types.hpp"

// Brute-force reference engine: explicit mode summation over the discrete gap
// spectrum minus the free-space continuum. Slow but structurally independent
// of the closed-form series, so the two can cross-check each other.
namespace casimir::oracle {

// Mean energy of one harmonic mode of frequency omega at inverse temperature
// beta: (omega/2) coth(beta omega / 2); omega/2 at beta = +infinity.
double mode_energy(double beta, double omega);

// Helmholtz free energy of one mode: omega/2 + ln(1 - exp(-beta omega)) / beta.
double mode_free_energy(double beta, double omega);

// n-th longitudinal wavenumber of the gap spectrum, n >= 1:
// pi n / d for like plates, pi (n - 1/2) / d for mixed plates.
double k_longitudinal(BoundaryPair bc, double separation, int n);

// Zero-temperature interaction energy per unit plate area by exponentially
// damped mode summation. The damping length runs down ctrl.damping_ladder
// (entries are fractions of the separation) and the limit of zero damping is
// taken by a polynomial fit. Supports n_dim in {1, 2, 3}. Throws
// ExtrapolationError when the leave-one-out spread of the fit exceeds the
// stability budget.
ValueWithError energy_zero_T_oracle(const PlateConfig& cfg, BoundaryPair bc,
                                    const SeriesControl& ctrl);

enum class ThermalPart { Energy, FreeEnergy };

// Thermal (occupation-number) part of the energy or free energy per unit
// plate area, relative to the zero-temperature value. The Planck weight
// decays on its own, so no damping regulator is involved.
ValueWithError thermal_correction_oracle(const PlateConfig& cfg,
                                         const ThermalState& state,
                                         BoundaryPair bc, ThermalPart part,
                                         const SeriesControl& ctrl);

// Totals: zero-temperature oracle plus the matching thermal correction.
ValueWithError energy_finite_T_oracle(const PlateConfig& cfg,
                                      const ThermalState& state,
                                      BoundaryPair bc, const SeriesControl& ctrl);
ValueWithError free_energy_finite_T_oracle(const PlateConfig& cfg,
                                           const ThermalState& state,
                                           BoundaryPair bc, const SeriesControl& ctrl);

}  // namespace casimir::oracle
