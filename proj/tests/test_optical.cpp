#include <cmath>
#include <cstdlib>

#include "casimir/closed_form.hpp"
#include "casimir/optical.hpp"
#include "casimir/types.hpp"
#include "doctest.h"

using namespace casimir;

TEST_CASE("path enumeration: counts, signs, reflection bookkeeping") {
  const int n_max = 3;
  for (auto bc : {BoundaryPair::DD, BoundaryPair::DN, BoundaryPair::NN}) {
    const auto paths = optical::enumerate_paths(bc, n_max);
    // 2 n_max even paths (index 0 excluded) + one odd path per index in
    // [-n_max, n_max]
    CHECK(paths.size() == 4 * static_cast<std::size_t>(n_max) + 1);
    int evens = 0, odds = 0;
    for (const auto& p : paths) {
      CHECK(std::abs(p.sign) == 1.0);
      const int r = std::abs(p.index);
      if (p.parity == optical::PathParity::Even) {
        ++evens;
        CHECK(p.index != 0);
        // even paths bounce equally off both plates
        CHECK(p.sigma_d == r);
        CHECK(p.sigma_n == r);
      } else {
        ++odds;
        CHECK(p.sigma_n == r);
        CHECK(p.sigma_d == (p.index >= 0 ? r + 1 : r - 1));
        CHECK(std::abs(p.sigma_d - p.sigma_n) == 1);
      }
      // sign is the product of per-reflection factors: -1 per Dirichlet hit,
      // +1 per Neumann hit; for the mixed pair the first plate is Dirichlet
      switch (bc) {
        case BoundaryPair::DD:
          CHECK(p.sign == ((p.sigma_d + p.sigma_n) % 2 == 0 ? 1.0 : -1.0));
          break;
        case BoundaryPair::DN:
          CHECK(p.sign == (p.sigma_d % 2 == 0 ? 1.0 : -1.0));
          break;
        case BoundaryPair::NN:
          CHECK(p.sign == 1.0);
          break;
      }
    }
    CHECK(evens == 2 * n_max);
    CHECK(odds == 2 * n_max + 1);
  }
  // like plates: every odd path carries an odd number of identical
  // reflections, so the whole family is uniformly signed
  for (const auto& p : optical::enumerate_paths(BoundaryPair::DD, 2)) {
    if (p.parity == optical::PathParity::Odd) CHECK(p.sign == -1.0);
  }
  CHECK_THROWS_AS(optical::enumerate_paths(BoundaryPair::DD, 0), ValidationError);
}

TEST_CASE("path lengths are image-cell geometry") {
  optical::Path even;
  even.index = 2;
  even.parity = optical::PathParity::Even;
  CHECK(optical::path_length(even, 0.3, 1.5) == doctest::Approx(6.0).epsilon(1e-15));
  even.index = -1;
  CHECK(optical::path_length(even, 0.9, 1.5) == doctest::Approx(3.0).epsilon(1e-15));

  optical::Path odd;
  odd.index = 0;
  odd.parity = optical::PathParity::Odd;
  CHECK(optical::path_length(odd, 0.4, 1.5) == doctest::Approx(0.8).epsilon(1e-15));
  odd.index = -1;
  CHECK(optical::path_length(odd, 0.4, 1.5) == doctest::Approx(2.2).epsilon(1e-15));

  // a source sitting on the plate degenerates the direct odd image
  odd.index = 0;
  CHECK_THROWS_AS(optical::path_length(odd, 0.0, 1.5), ValidationError);
}

TEST_CASE("even-path resummation matches the closed forms within its tail") {
  const int n_max = 10000;
  for (int n = 1; n <= 4; ++n) {
    for (auto bc : {BoundaryPair::DD, BoundaryPair::DN, BoundaryPair::NN}) {
      for (double d : {0.5, 1.0, 2.0}) {
        const PlateConfig cfg{n, d};
        const auto got = optical::even_energy_per_area(cfg, bc, n_max);
        const double want = closed::energy_zero_T(cfg, bc);
        CHECK(got.error > 0.0);
        CHECK(std::abs(got.value - want) <= got.error + 1e-15 * std::abs(want));
      }
    }
  }
  CHECK_THROWS_AS(optical::even_energy_per_area(PlateConfig{3, 1.0}, BoundaryPair::DD, 7),
                  ValidationError);
}

TEST_CASE("odd paths carry no separation dependence") {
  const double delta = 0.05;
  for (int n = 1; n <= 3; ++n) {
    const PlateConfig cfg{n, 1.0};
    // like plates: the whole odd family must cancel between separations.
    // The leftover falls like n_max^{-N}, hence the per-dimension ladder.
    const int like_max = n == 1 ? 4000000 : (n == 2 ? 100000 : 10000);
    const double dd = optical::odd_energy_d_independence_check(cfg, BoundaryPair::DD, delta, 1.0,
                                                               1.3, like_max);
    const double nn = optical::odd_energy_d_independence_check(cfg, BoundaryPair::NN, delta, 1.0,
                                                               1.3, like_max);
    CHECK(dd <= 1e-8);
    CHECK(nn <= 1e-8);
    // mixed plates: alternating signs cancel pairwise, far faster
    const int dn_max = n == 1 ? 100000 : 10000;
    const double dn = optical::odd_energy_d_independence_check(cfg, BoundaryPair::DN, delta, 1.0,
                                                               1.3, dn_max);
    CHECK(dn <= 1e-10);
  }
  CHECK_THROWS_AS(optical::odd_energy_d_independence_check(PlateConfig{2, 1.0}, BoundaryPair::DD,
                                                           5.0, 1.0, 1.3, 100),
                  ValidationError);
}

TEST_CASE("image sums satisfy the plate conditions for independent kernels") {
  // Dirichlet: summed kernel vanishes on the plate. Neumann: its normal
  // derivative does. Checked directly from the image structure with three
  // unrelated test weights.
  const double d = 1.0;
  const double y_n = 0.3;
  const int n_max = 2000;
  const optical::TestKernel kernels[] = {
      optical::gaussian_kernel(0.6),
      optical::rational_kernel(3, 0.5),
      optical::rational_kernel(2, 1.0),
      optical::bump_kernel(0.8),
  };
  for (const auto& kernel : kernels) {
    for (auto bc : {BoundaryPair::DD, BoundaryPair::DN, BoundaryPair::NN}) {
      const auto chk = optical::image_kernel_bc_check(bc, kernel, d, y_n, n_max);
      CHECK(chk.tail_bound >= 0.0);
      CHECK(chk.violation <= chk.tail_bound + 1e-12);
    }
  }
  CHECK_THROWS_AS(optical::gaussian_kernel(0.0), ValidationError);
  CHECK_THROWS_AS(optical::rational_kernel(0, 1.0), ValidationError);
  CHECK_THROWS_AS(optical::bump_kernel(-1.0), ValidationError);
}
