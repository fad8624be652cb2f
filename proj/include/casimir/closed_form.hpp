#pragma once

#include "casimir/types.hpp"

namespace casimir::closed {

// Interaction energy per unit plate area at T = 0 (d-independent pieces are
// dropped throughout). Negative for DD/NN, positive for DN.
double energy_zero_T(const PlateConfig& cfg, BoundaryPair bc);

// Force per unit area between the plates at T = 0; negative = attraction.
double pressure_zero_T(const PlateConfig& cfg, BoundaryPair bc);

// Total energy per unit area at finite temperature from the exponentially
// convergent Bessel-K double series (sinh closed form for N = 1).
ValueWithError energy_finite_T(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                               const SeriesControl& ctrl);

// Helmholtz free energy per unit area at finite temperature: a 1/beta leading
// term plus a Bessel-K double series (exponential closed form for N = 1).
ValueWithError free_energy_finite_T(const PlateConfig& cfg, const ThermalState& state,
                                    BoundaryPair bc, const SeriesControl& ctrl);

// Entropy per unit area, S = beta (E - F).
ValueWithError entropy(const PlateConfig& cfg, const ThermalState& state, BoundaryPair bc,
                       const SeriesControl& ctrl);

// High-temperature saturation value of the entropy per unit area; exactly 0
// for N = 1 where the residual constant is d-independent.
double entropy_high_T(const PlateConfig& cfg, BoundaryPair bc);

// Force per unit area at finite temperature from termwise differentiation of
// the free-energy series, cross-checked against a central finite difference.
ValueWithError pressure_finite_T(const PlateConfig& cfg, const ThermalState& state,
                                 BoundaryPair bc, const SeriesControl& ctrl);

namespace detail {

// General-N energy series; works at N = 1 through K_{-1/2} = K_{1/2} so the
// closed sinh form can be cross-checked against it.
ValueWithError energy_series_general(int n_dim, double d, double beta, BoundaryPair bc,
                                     const SeriesControl& ctrl);

// General-N free-energy series; rejects N = 1, where the leading coefficient
// is a divergent zeta value that only cancels analytically.
ValueWithError free_energy_series_general(int n_dim, double d, double beta, BoundaryPair bc,
                                          const SeriesControl& ctrl);

// N = 1 closed forms.
ValueWithError energy_n1(double d, double beta, BoundaryPair bc, const SeriesControl& ctrl);
ValueWithError free_energy_n1(double d, double beta, BoundaryPair bc, const SeriesControl& ctrl);

}  // namespace detail

}  // namespace casimir::closed
