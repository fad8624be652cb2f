#pragma once

#include "casimir/types.hpp"

namespace casimir::specfun {

// Gamma function for x > 0. Relative error below 1e-13 on (0, 50].
double gamma(double x);

// Riemann zeta for s > 1. Relative error below 1e-13 on (1, 50].
double riemann_zeta(double s);

// Dirichlet eta via (1 - 2^(1-s)) zeta(s), s > 1.
double dirichlet_eta(double s);

struct BesselKResult {
  double value = 0.0;
  // Certified absolute bound when the value underflowed to zero; otherwise a
  // small relative-accuracy bound expressed in absolute terms.
  double abs_error = 0.0;
  bool underflowed = false;
};

// Modified Bessel function of the second kind, order nu in [0, 60], x > 0.
// Relative error below 1e-11 for x in [1e-3, 700]. For x large enough that
// exp(-x) underflows the result is 0 with underflowed set and abs_error a
// certified bound. Half-integer orders use exact closed forms.
BesselKResult bessel_k(double nu, double x);

// K_{nu-1}, K_nu, K_{nu+1} in one call (uses K_{-a} = K_a for nu < 1).
void bessel_k_triple(double nu, double x, BesselKResult& km1, BesselKResult& k0,
                     BesselKResult& kp1);

namespace detail {

// General-order path (series + quadrature + recurrence), bypassing the
// half-integer closed forms so tests can cross-check the two.
BesselKResult bessel_k_general(double nu, double x);

// ln(1/Gamma(1+z)) for |z| <= 0.5, by its Maclaurin series.
double log_inv_gamma1p(double z);

}  // namespace detail

}  // namespace casimir::specfun
