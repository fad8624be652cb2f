#include <cmath>

#include "casimir/closed_form.hpp"
#include "casimir/types.hpp"
#include "doctest.h"

using namespace casimir;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Frozen to higher precision than a double carries, so the last digits of the
// engine output are exercised too. Tests accept the engine value when it sits
// within its own reported error bound (plus a few ulp for the reference).
struct SeriesPoint {
  int n_dim;
  double d, beta;
  BoundaryPair bc;
  double energy, free_energy;
};

const SeriesPoint kSeriesPoints[] = {
    {3, 1.0, 1.0, BoundaryPair::DD, -2.1911962116039488600660161e-5, -2.3916044694296010597302001e-2},
    {2, 1.0, 1.25, BoundaryPair::DN, 2.164211704223198412039289e-4, 5.238245069556012940775703e-2},
    {2, 1.0, 0.9, BoundaryPair::DD, -9.895480063653350758032048e-6, -1.454448379970912954883783e-1},
    {2, 1.0, 30.0, BoundaryPair::DD, -2.363744539869098665900841e-2, -2.419796478290958705452463e-2},
    {3, 1.0, 4.0 * M_PI * 10.0, BoundaryPair::DD, -6.853796855933775100106182e-3,
     -6.853939709715568568389403e-3},
    {4, 2.0, 3.0, BoundaryPair::DN, 1.613588974352306541993443e-5, 2.521601755103445784402900e-4},
};

}  // namespace

TEST_CASE("zero-temperature closed forms: pinned values") {
  const SeriesControl ctrl;
  const PlateConfig c31{3, 1.0};
  CHECK(rel(closed::energy_zero_T(c31, BoundaryPair::DD), -M_PI * M_PI / 1440.0) < 1e-13);
  CHECK(rel(closed::energy_zero_T(PlateConfig{1, 1.0}, BoundaryPair::DD), -M_PI / 24.0) < 1e-13);
  CHECK(rel(closed::energy_zero_T(PlateConfig{2, 1.0}, BoundaryPair::DD),
            -0.02391416225194814639063457) < 1e-13);
  CHECK(rel(closed::energy_zero_T(PlateConfig{2, 1.0}, BoundaryPair::DN),
            0.01793562168896110979297593) < 1e-13);
  CHECK(rel(closed::energy_zero_T(PlateConfig{5, 1.0}, BoundaryPair::DD),
            -0.001025339837311501989929772) < 1e-13);
  CHECK(rel(closed::energy_zero_T(PlateConfig{3, 0.5}, BoundaryPair::DN),
            0.04797724361640660439711211) < 1e-13);
}

TEST_CASE("zero-temperature closed forms: structure") {
  for (int n = 1; n <= 8; ++n) {
    const PlateConfig cfg{n, 1.0};
    const double dd = closed::energy_zero_T(cfg, BoundaryPair::DD);
    const double dn = closed::energy_zero_T(cfg, BoundaryPair::DN);
    const double nn = closed::energy_zero_T(cfg, BoundaryPair::NN);
    CHECK(dd < 0.0);
    CHECK(dn > 0.0);
    CHECK(rel(dn / dd, -(1.0 - std::pow(2.0, -n))) < 1e-13);
    CHECK(rel(nn, dd) < 1e-15);

    // separation scaling d^{-N} and the pressure law P = N E / d
    for (double d : {0.5, 2.0, 3.7}) {
      const PlateConfig scaled{n, d};
      CHECK(rel(closed::energy_zero_T(scaled, BoundaryPair::DD), dd / std::pow(d, n)) < 1e-13);
      CHECK(rel(closed::pressure_zero_T(scaled, BoundaryPair::DD),
                n * closed::energy_zero_T(scaled, BoundaryPair::DD) / d) < 1e-14);
    }
  }
}

TEST_CASE("thermal series: frozen high-precision points") {
  const SeriesControl ctrl;
  for (const auto& p : kSeriesPoints) {
    const PlateConfig cfg{p.n_dim, p.d};
    const ThermalState state{p.beta};
    const auto e = closed::energy_finite_T(cfg, state, p.bc, ctrl);
    const auto f = closed::free_energy_finite_T(cfg, state, p.bc, ctrl);
    // the reported error bound must cover the true deviation
    CHECK(std::abs(e.value - p.energy) <= e.error + 4e-16 * std::abs(p.energy));
    CHECK(std::abs(f.value - p.free_energy) <= f.error + 4e-16 * std::abs(p.free_energy));
    // and must itself be within the requested budget
    CHECK(e.error <= ctrl.rel_tol * std::abs(e.value) + ctrl.abs_tol);
    CHECK(f.error <= ctrl.rel_tol * std::abs(f.value) + ctrl.abs_tol);
  }
}

TEST_CASE("thermal series: one-dimensional closed forms") {
  const SeriesControl ctrl;
  struct P1 {
    double d, beta;
    BoundaryPair bc;
    double energy, free_energy;
  };
  const P1 pts[] = {
      {1.0, 2.0, BoundaryPair::DD, -5.899693899574718269276808e-3, -9.363412248842730578192897e-4},
      {1.0, 2.0, BoundaryPair::DN, 5.877782052080071658021314e-3, 9.345975445849727535457849e-4},
      {0.7, 1.3, BoundaryPair::DD, -6.015402557973134323750175e-3, -8.874630464555536642627213e-4},
      {0.7, 1.3, BoundaryPair::DN, 6.001594283884154202501057e-3, 8.864427086285753278646830e-4},
  };
  for (const auto& p : pts) {
    const auto e = closed::detail::energy_n1(p.d, p.beta, p.bc, ctrl);
    const auto f = closed::detail::free_energy_n1(p.d, p.beta, p.bc, ctrl);
    CHECK(std::abs(e.value - p.energy) <= e.error + 4e-16 * std::abs(p.energy));
    CHECK(std::abs(f.value - p.free_energy) <= f.error + 4e-16 * std::abs(p.free_energy));

    // the public entry points route N = 1 through these forms
    const PlateConfig cfg{1, p.d};
    const ThermalState state{p.beta};
    CHECK(closed::energy_finite_T(cfg, state, p.bc, ctrl).value == e.value);
    CHECK(closed::free_energy_finite_T(cfg, state, p.bc, ctrl).value == f.value);

    // at T = 2, the thermal shift of the like-plate energy is exactly 1/8
    // (the a = 2 pi lattice identity); use it as an anchor once
    if (p.d == 1.0 && p.bc == BoundaryPair::DD) {
      const double shift = e.value - closed::energy_zero_T(cfg, BoundaryPair::DD);
      CHECK(std::abs(shift - 0.125) < 1e-14);
    }
  }
}

TEST_CASE("thermal series: general form agrees with the N = 1 resummation") {
  const SeriesControl ctrl;
  for (const auto& db : {std::pair{1.0, 2.0}, {0.7, 1.3}, {2.0, 5.0}}) {
    for (auto bc : {BoundaryPair::DD, BoundaryPair::DN}) {
      const auto direct = closed::detail::energy_n1(db.first, db.second, bc, ctrl);
      const auto series = closed::detail::energy_series_general(1, db.first, db.second, bc, ctrl);
      CHECK(rel(series.value, direct.value) < 1e-10);
    }
  }
  // the general free-energy form has no N = 1 branch (its leading term
  // degenerates); it must refuse rather than return garbage
  CHECK_THROWS_AS(closed::detail::free_energy_series_general(1, 1.0, 2.0, BoundaryPair::DD,
                                                             SeriesControl{}),
                  ValidationError);
}

TEST_CASE("entropy is beta (E - F) and carries the boundary-pair sign") {
  const SeriesControl ctrl;
  for (const auto& p : kSeriesPoints) {
    const PlateConfig cfg{p.n_dim, p.d};
    const ThermalState state{p.beta};
    const auto s = closed::entropy(cfg, state, p.bc, ctrl);
    const auto e = closed::energy_finite_T(cfg, state, p.bc, ctrl);
    const auto f = closed::free_energy_finite_T(cfg, state, p.bc, ctrl);
    const double want = p.beta * (e.value - f.value);
    CHECK(rel(s.value, want) < 1e-14);
    if (p.bc == BoundaryPair::DD) CHECK(s.value > 0.0);
    if (p.bc == BoundaryPair::DN) CHECK(s.value < 0.0);
  }
}

TEST_CASE("high-temperature entropy plateau") {
  CHECK(rel(closed::entropy_high_T(PlateConfig{3, 1.0}, BoundaryPair::DD),
            0.02391416225194814639063457) < 1e-13);
  CHECK(rel(closed::entropy_high_T(PlateConfig{3, 1.0}, BoundaryPair::DN),
            -0.01793562168896110979297593) < 1e-13);
  CHECK(rel(closed::entropy_high_T(PlateConfig{2, 1.0}, BoundaryPair::DD),
            0.1308996938995747182692768) < 1e-13);
  CHECK(rel(closed::entropy_high_T(PlateConfig{2, 1.0}, BoundaryPair::DN),
            -0.06544984694978735913463840) < 1e-13);
  CHECK(rel(closed::entropy_high_T(PlateConfig{4, 1.0}, BoundaryPair::DD),
            0.006853891945200943485301730) < 1e-13);
  CHECK(rel(closed::entropy_high_T(PlateConfig{3, 0.5}, BoundaryPair::DD),
            0.09565664900779258556253829) < 1e-13);
  // the one-dimensional gap keeps no extensive entropy of its own
  CHECK(closed::entropy_high_T(PlateConfig{1, 1.0}, BoundaryPair::DD) == 0.0);
  CHECK(closed::entropy_high_T(PlateConfig{1, 0.3}, BoundaryPair::DN) == 0.0);
}

TEST_CASE("high-temperature limits of the series") {
  const SeriesControl ctrl;
  const PlateConfig cfg{2, 1.0};
  const double t = 10.0;
  const ThermalState state{1.0 / t};
  const auto f = closed::free_energy_finite_T(cfg, state, BoundaryPair::DD, ctrl);
  const auto e = closed::energy_finite_T(cfg, state, BoundaryPair::DD, ctrl);
  const double s_inf = closed::entropy_high_T(cfg, BoundaryPair::DD);
  CHECK(rel(f.value, -t * s_inf) < 1e-12);       // free energy goes classical
  CHECK(std::abs(e.value) < 1e-8 * std::abs(f.value));  // energy equipartitions away
}

TEST_CASE("finite-temperature pressure") {
  const SeriesControl ctrl;
  struct PP {
    int n_dim;
    double d, beta;
    BoundaryPair bc;
    double pressure;
  };
  const PP pts[] = {
      {3, 1.0, 1.0, BoundaryPair::DD, -0.04785400135070806068320466},
      {2, 1.0, 1.25, BoundaryPair::DN, 0.05259887186598244924896096},
      {2, 1.0, 0.9, BoundaryPair::DD, -0.1454547334771549488391363},
      {3, 1.0, 4.0 * M_PI * 10.0, BoundaryPair::DD, -0.02056167627536491223688499},
  };
  for (const auto& p : pts) {
    const auto got =
        closed::pressure_finite_T(PlateConfig{p.n_dim, p.d}, ThermalState{p.beta}, p.bc, ctrl);
    CHECK(std::abs(got.value - p.pressure) <= got.error + 4e-16 * std::abs(p.pressure));
    CHECK(rel(got.value, p.pressure) < 1e-9);
  }
  // for N = 1 the pressure is exactly the total energy over the separation
  const auto e1 = closed::energy_finite_T(PlateConfig{1, 0.7}, ThermalState{1.3},
                                          BoundaryPair::DD, ctrl);
  const auto p1 = closed::pressure_finite_T(PlateConfig{1, 0.7}, ThermalState{1.3},
                                            BoundaryPair::DD, ctrl);
  CHECK(rel(p1.value, e1.value / 0.7) < 1e-15);
}

TEST_CASE("thermal series: domain and honesty guards") {
  const SeriesControl ctrl;
  const PlateConfig cfg{2, 1.0};

  // finite-T operations refuse beta = infinity and the nn pair
  CHECK_THROWS_AS(closed::energy_finite_T(cfg, ThermalState{}, BoundaryPair::DD, ctrl),
                  ValidationError);
  CHECK_THROWS_AS(closed::energy_finite_T(cfg, ThermalState{2.0}, BoundaryPair::NN, ctrl),
                  ValidationError);
  CHECK_THROWS_AS(closed::free_energy_finite_T(cfg, ThermalState{2.0}, BoundaryPair::NN, ctrl),
                  ValidationError);

  // an unreachable tolerance must fail loudly, not return a wrong value
  SeriesControl crushed;
  crushed.rel_tol = 1e-16;
  crushed.abs_tol = 1e-30;
  CHECK_THROWS_AS(closed::free_energy_finite_T(cfg, ThermalState{30.0}, BoundaryPair::DD, crushed),
                  ConvergenceError);

  // a term budget too small to converge must also fail loudly
  SeriesControl tiny;
  tiny.max_terms = 16;
  CHECK_THROWS_AS(closed::energy_finite_T(cfg, ThermalState{30.0}, BoundaryPair::DD, tiny),
                  ConvergenceError);
}

TEST_CASE("control validation") {
  SeriesControl bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(validate_control(bad), ValidationError);
  bad = SeriesControl{};
  bad.abs_tol = 1.5;
  CHECK_THROWS_AS(validate_control(bad), ValidationError);
  bad = SeriesControl{};
  bad.max_terms = 15;
  CHECK_THROWS_AS(validate_control(bad), ValidationError);
  bad = SeriesControl{};
  bad.damping_ladder = {0.1, 0.1};
  CHECK_THROWS_AS(validate_control(bad), ValidationError);
  CHECK_NOTHROW(validate_control(SeriesControl{}));

  CHECK_THROWS_AS(make_config(0, 1.0, 2.0), ValidationError);
  CHECK_THROWS_AS(make_config(3, -1.0, 2.0), ValidationError);
  CHECK_THROWS_AS(make_config(3, 1.0, 0.0), ValidationError);
  CHECK_NOTHROW(make_config(3, 1.0, std::numeric_limits<double>::infinity()));
}
