#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace casimir::num {

// Compensated (Kahan) accumulator.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double get() const { return s; }
};

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;
};

// Nodes and weights computed once per order by Newton iteration on the
// Legendre polynomial; cached for reuse.
const GaussRule& gauss_legendre(int n);

// One Gauss panel over [a, b].
template <class F>
double gl_panel(F&& f, double a, double b, const GaussRule& r) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  KahanSum acc;
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    acc.add(r.weights[i] * f(mid + half * r.nodes[i]));
  return half * acc.get();
}

// Integral of f over [0, t_end] on geometrically growing panels
// [0,h0],[h0,2h0],[2h0,4h0],...; the last panel is clipped at t_end.
// err_out, when given, accumulates per-panel embedded error estimates
// (difference between the 64- and 32-point results).
template <class F>
double integrate_geometric(F&& f, double h0, double t_end, double* err_out = nullptr) {
  const GaussRule& hi = gauss_legendre(64);
  const GaussRule& lo = gauss_legendre(32);
  KahanSum acc;
  double err = 0.0;
  double a = 0.0, width = h0;
  while (a < t_end) {
    double b = a + width;
    if (b > t_end) b = t_end;
    double v = gl_panel(f, a, b, hi);
    if (err_out) err += std::abs(v - gl_panel(f, a, b, lo));
    acc.add(v);
    a = b;
    width *= 2.0;
  }
  if (err_out) *err_out += err;
  return acc.get();
}

// Value at zero of the unique polynomial through the points (xs[i], ys[i]).
double lagrange_at_zero(const std::vector<double>& xs, const std::vector<double>& ys);

struct Extrapolation {
  double value = 0.0;       // full-ladder fit evaluated at zero
  double loo_spread = 0.0;  // max deviation of the leave-one-out fits
};

// Polynomial extrapolation of ys(xs) to xs -> 0 with leave-one-out spread.
Extrapolation extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace casimir::num
