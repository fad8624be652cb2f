#include "casimir/numerics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace casimir::num {

namespace {

GaussRule build_gauss(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess for the i-th root (ascending order).
    double x = std::cos(M_PI * (n - i - 0.25) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      // Evaluate P_n(x) and P_{n-1}(x) by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n, p0 = P_{n-1}; derivative from the standard identity.
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 2 || n > 256) throw std::invalid_argument("gauss_legendre: order out of range");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss(n)).first;
  return it->second;
}

double lagrange_at_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("lagrange_at_zero: bad inputs");
  KahanSum acc;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      w *= xs[j] / (xs[j] - xs[i]);
    }
    acc.add(w * ys[i]);
  }
  return acc.get();
}

Extrapolation extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw std::invalid_argument("extrapolate_to_zero: need at least three points");
  Extrapolation out;
  out.value = lagrange_at_zero(xs, ys);
  const std::size_t n = xs.size();
  double spread = 0.0;
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<double> xr, yr;
    xr.reserve(n - 1);
    yr.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == drop) continue;
      xr.push_back(xs[i]);
      yr.push_back(ys[i]);
    }
    double v = lagrange_at_zero(xr, yr);
    spread = std::max(spread, std::abs(v - out.value));
  }
  out.loo_spread = spread;
  return out;
}

}  // namespace casimir::num
