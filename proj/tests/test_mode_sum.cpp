#include <cmath>

#include "casimir/closed_form.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/types.hpp"
#include "doctest.h"

using namespace casimir;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("single-mode thermodynamics") {
  // frozen: (omega/2) coth(beta omega/2) and omega/2 + ln(1-e^{-beta omega})/beta
  CHECK(rel(oracle::mode_energy(2.0, 1.0), 0.6565176427496656518180806) < 1e-14);
  CHECK(rel(oracle::mode_free_energy(2.0, 1.0), 0.4272932710655704715136759) < 1e-14);

  const double inf = std::numeric_limits<double>::infinity();
  CHECK(oracle::mode_energy(inf, 3.7) == doctest::Approx(1.85).epsilon(1e-15));
  CHECK(oracle::mode_free_energy(inf, 3.7) == doctest::Approx(1.85).epsilon(1e-15));

  for (double beta : {0.4, 1.0, 6.0}) {
    for (double omega : {0.3, 1.0, 4.2}) {
      const double e = oracle::mode_energy(beta, omega);
      const double f = oracle::mode_free_energy(beta, omega);
      CHECK(rel(e, omega / 2.0 + omega / std::expm1(beta * omega)) < 1e-14);
      CHECK(rel(f, omega / 2.0 + std::log1p(-std::exp(-beta * omega)) / beta) < 1e-14);
      CHECK(e >= f);  // S = beta (E - F) >= 0 per mode
    }
  }
}

TEST_CASE("longitudinal spectrum") {
  CHECK(oracle::k_longitudinal(BoundaryPair::DD, 1.0, 1) == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(oracle::k_longitudinal(BoundaryPair::NN, 2.0, 3) ==
        doctest::Approx(3.0 * M_PI / 2.0).epsilon(1e-15));
  CHECK(oracle::k_longitudinal(BoundaryPair::DN, 1.0, 1) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  CHECK(oracle::k_longitudinal(BoundaryPair::DN, 0.5, 4) ==
        doctest::Approx(7.0 * M_PI).epsilon(1e-15));
}

TEST_CASE("zero-temperature mode sum reproduces the closed forms") {
  const SeriesControl ctrl;
  for (int n = 1; n <= 3; ++n) {
    for (auto bc : {BoundaryPair::DD, BoundaryPair::DN, BoundaryPair::NN}) {
      const PlateConfig cfg{n, 1.0};
      const auto got = oracle::energy_zero_T_oracle(cfg, bc, ctrl);
      const double want = closed::energy_zero_T(cfg, bc);
      CHECK(rel(got.value, want) < 1e-4);
      CHECK(std::abs(got.value - want) <= got.error + 1e-4 * std::abs(want));
      CHECK(got.error > 0.0);
    }
  }
  // off the d = 1 lattice too
  const auto got = oracle::energy_zero_T_oracle(PlateConfig{2, 0.7}, BoundaryPair::DD, SeriesControl{});
  CHECK(rel(got.value, closed::energy_zero_T(PlateConfig{2, 0.7}, BoundaryPair::DD)) < 1e-4);
}

TEST_CASE("mode sum is restricted to the desk-scale dimensions") {
  CHECK_THROWS_AS(oracle::energy_zero_T_oracle(PlateConfig{4, 1.0}, BoundaryPair::DD, SeriesControl{}),
                  ValidationError);
}

TEST_CASE("thermal corrections against the resummed totals") {
  const SeriesControl ctrl;

  // (N=1, d=1, beta=2, DD): the thermal energy shift is exactly 1/8
  const auto de = oracle::thermal_correction_oracle(PlateConfig{1, 1.0}, ThermalState{2.0},
                                                    BoundaryPair::DD, oracle::ThermalPart::Energy,
                                                    ctrl);
  CHECK(std::abs(de.value - 0.125) <= de.error + 1e-10);
  CHECK(rel(de.value, 0.125) < 1e-6);

  const auto df = oracle::thermal_correction_oracle(PlateConfig{1, 1.0}, ThermalState{2.0},
                                                    BoundaryPair::DD,
                                                    oracle::ThermalPart::FreeEnergy, ctrl);
  CHECK(rel(df.value, 0.1299633526746904452114575) < 1e-6);

  // (N=3, d=1, beta=1, DD): correction = resummed total minus the zero-T form
  const PlateConfig c31{3, 1.0};
  const ThermalState b1{1.0};
  const auto de3 = oracle::thermal_correction_oracle(c31, b1, BoundaryPair::DD,
                                                     oracle::ThermalPart::Energy, ctrl);
  const auto df3 = oracle::thermal_correction_oracle(c31, b1, BoundaryPair::DD,
                                                     oracle::ThermalPart::FreeEnergy, ctrl);
  const double e0 = closed::energy_zero_T(c31, BoundaryPair::DD);
  const double want_de3 = -2.1911962116039488600660161e-5 - e0;
  const double want_df3 = -2.3916044694296010597302001e-2 - e0;
  CHECK(rel(de3.value, want_de3) < 1e-6);
  CHECK(rel(df3.value, want_df3) < 1e-6);
  CHECK(std::abs(de3.value - want_de3) <= de3.error + 1e-9 * std::abs(want_de3));
  CHECK(std::abs(df3.value - want_df3) <= df3.error + 1e-9 * std::abs(want_df3));
}

TEST_CASE("finite-temperature totals combine both pieces") {
  const SeriesControl ctrl;
  const PlateConfig cfg{1, 1.0};
  const ThermalState state{2.0};
  const auto e = oracle::energy_finite_T_oracle(cfg, state, BoundaryPair::DD, ctrl);
  const auto f = oracle::free_energy_finite_T_oracle(cfg, state, BoundaryPair::DD, ctrl);
  // totals carry the zero-T oracle's extrapolation error, so the budget is
  // the oracle's, not the series engine's
  CHECK(rel(e.value, -5.899693899574718269276808e-3) < 2e-3);
  CHECK(std::abs(e.value - -5.899693899574718269276808e-3) <= e.error + 1e-8);
  CHECK(std::abs(f.value - -9.363412248842730578192897e-4) <= f.error + 1e-8);

  CHECK_THROWS_AS(oracle::energy_finite_T_oracle(cfg, state, BoundaryPair::NN, ctrl),
                  ValidationError);
  CHECK_THROWS_AS(
      oracle::thermal_correction_oracle(cfg, ThermalState{}, BoundaryPair::DD,
                                        oracle::ThermalPart::Energy, ctrl),
      ValidationError);
}
