#include "casimir/optical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/numerics.hpp"
#include "casimir/specfun.hpp"

namespace casimir::optical {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

double even_sign(BoundaryPair bc, int n) {
  if (bc == BoundaryPair::DN) return (std::abs(n) % 2 == 0) ? 1.0 : -1.0;
  return 1.0;
}

double odd_sign(BoundaryPair bc, int n) {
  switch (bc) {
    case BoundaryPair::DD: return -1.0;
    case BoundaryPair::NN: return 1.0;
    default: return (std::abs(n) % 2 == 0) ? -1.0 : 1.0;
  }
}

// Per-path energy weight: each path of length l contributes
// -Gamma((N+1)/2) / (2 pi^{(N+1)/2}) * l^{-(N+1)} per unit volume.
double path_coefficient(int n_dim) {
  return specfun::gamma(0.5 * (n_dim + 1)) /
         (2.0 * std::pow(kPi, 0.5 * (n_dim + 1)));
}

void require_geometry(const PlateConfig& cfg) {
  if (cfg.n_dim < 1) throw ValidationError("n_dim must be at least 1");
  if (!(cfg.separation > 0.0) || !std::isfinite(cfg.separation))
    throw ValidationError("separation must be positive and finite");
}

// (1/2) * integral of |u|^{-(n_dim+1)} over [a, b] with |u| > delta.
// Image intervals never straddle zero, so [a, b] has a definite side.
double half_interval_integral(int n_dim, double a, double b, double delta) {
  if (b <= 0.0) {
    const double t = a;
    a = -b;
    b = -t;
  }
  const double lo = std::max(a, delta);
  if (b <= lo) return 0.0;
  const double n = n_dim;
  return 0.5 * (std::pow(lo, -n) - std::pow(b, -n)) / n;
}

// Cutoff odd-path sum at one separation, source integral done in closed form:
// sum_n sign(n) * c_N * (1/2) * integral_{|u|>delta} |u|^{-(N+1)} du over the
// image interval u in [2 d n, 2 d (n+1)].
double odd_path_integral(int n_dim, BoundaryPair bc, double d, double delta,
                         int n_max) {
  num::KahanSum acc;
  for (int n = -n_max; n <= n_max; ++n)
    acc.add(odd_sign(bc, n) *
            half_interval_integral(n_dim, 2.0 * d * n, 2.0 * d * (n + 1), delta));
  return path_coefficient(n_dim) * acc.get();
}

// Truncated image sum and its derivative in the longitudinal coordinate x,
// for a source at y: even images at y - 2nd, odd images at -y - 2nd.
double image_sum(BoundaryPair bc, const std::function<double(double)>& f,
                 double d, double y, double x, int n_max) {
  num::KahanSum acc;
  for (int n = -n_max; n <= n_max; ++n) {
    acc.add(even_sign(bc, n) * f(x - y + 2.0 * d * n));
    acc.add(odd_sign(bc, n) * f(x + y + 2.0 * d * n));
  }
  return acc.get();
}

}  // namespace

std::vector<Path> enumerate_paths(BoundaryPair bc, int n_max) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  std::vector<Path> out;
  out.reserve(4 * static_cast<std::size_t>(n_max) + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    if (n == 0) continue;
    const int r = std::abs(n);
    out.push_back({n, PathParity::Even, r, r, even_sign(bc, n)});
  }
  for (int n = -n_max; n <= n_max; ++n) {
    const int r = std::abs(n);
    const int sd = (n >= 0) ? r + 1 : r - 1;
    out.push_back({n, PathParity::Odd, sd, r, odd_sign(bc, n)});
  }
  return out;
}

double path_length(const Path& p, double x_n, double d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw ValidationError("separation must be positive and finite");
  if (!(x_n >= 0.0 && x_n <= d))
    throw ValidationError("source position must lie in [0, d]");
  const double len = (p.parity == PathParity::Even)
                         ? std::fabs(2.0 * d * p.index)
                         : std::fabs(2.0 * x_n + 2.0 * d * p.index);
  if (len < 1e-12 * d)
    throw ValidationError("degenerate image path: zero length at the plate");
  return len;
}

ValueWithError even_energy_per_area(const PlateConfig& cfg, BoundaryPair bc,
                                    int n_max) {
  require_geometry(cfg);
  if (n_max < 8) throw ValidationError("even-path sum needs n_max >= 8");
  const double d = cfg.separation;
  const double np1 = cfg.n_dim + 1.0;
  const double scale = 2.0 * d * path_coefficient(cfg.n_dim) * std::pow(2.0 * d, -np1);
  num::KahanSum s;
  for (int n = n_max; n >= 1; --n) {
    const double term = std::pow(static_cast<double>(n), -np1);
    s.add((bc == BoundaryPair::DN && (n & 1)) ? -term : term);
  }
  const double tail =
      scale * std::pow(static_cast<double>(n_max), -static_cast<double>(cfg.n_dim)) /
      cfg.n_dim;
  return {-scale * s.get(), tail};
}

double odd_energy_d_independence_check(const PlateConfig& cfg, BoundaryPair bc,
                                       double delta, double d1, double d2,
                                       int n_max) {
  require_geometry(cfg);
  if (!(d1 > 0.0) || !(d2 > 0.0) || !std::isfinite(d1) || !std::isfinite(d2))
    throw ValidationError("separations must be positive and finite");
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ValidationError("cutoff must be positive and finite");
  const double dmin = std::min(d1, d2);
  if (delta >= 2.0 * dmin)
    throw ValidationError("cutoff excludes more than the first image interval");
  if (!(delta < 0.1 * dmin))
    throw ValidationError(
        "cutoff must stay below one tenth of the smaller separation");
  const double i1 = odd_path_integral(cfg.n_dim, bc, d1, delta, n_max);
  const double i2 = odd_path_integral(cfg.n_dim, bc, d2, delta, n_max);
  return std::fabs(i1 - i2);
}

TestKernel gaussian_kernel(double width) {
  if (!(width > 0.0) || !std::isfinite(width))
    throw ValidationError("kernel width must be positive and finite");
  const double w2 = width * width;
  TestKernel k;
  k.name = "gaussian";
  k.g = [w2](double s) { return std::exp(-s * s / w2); };
  k.dg = [w2](double s) { return -2.0 * s / w2 * std::exp(-s * s / w2); };
  // Envelope h(s) = (1 + 2s/w^2) exp(-s^2/w^2) dominates |g| and |g'| and
  // shrinks by at least rho per step of the image ladder; refuse ratios near
  // one, where the geometric bound certifies nothing useful.
  k.tail = [w2](double r, double spacing) {
    if (!(r > 0.0) || !(spacing > 0.0)) return kInf;
    const double rho = (1.0 + 2.0 * spacing / w2) * std::exp(-2.0 * r * spacing / w2);
    if (!(rho <= 0.99)) return kInf;
    const double h = (1.0 + 2.0 * r / w2) * std::exp(-r * r / w2);
    return h / (1.0 - rho);
  };
  return k;
}

TestKernel rational_kernel(int n_dim, double s0) {
  if (n_dim < 1) throw ValidationError("n_dim must be at least 1");
  if (!(s0 > 0.0) || !std::isfinite(s0))
    throw ValidationError("kernel scale must be positive and finite");
  const double p = n_dim + 1.0;
  TestKernel k;
  k.name = "rational";
  k.g = [p, s0](double s) { return std::pow(s0 * s0 + s * s, -0.5 * p); };
  k.dg = [p, s0](double s) {
    return -p * s * std::pow(s0 * s0 + s * s, -0.5 * p - 1.0);
  };
  // |g'(s)| <= (p/s) g(s) and g decreases, so the ladder sum is bounded by
  // the first term plus the integral of u^{-p}.
  k.tail = [p, s0](double r, double spacing) {
    if (!(r > 0.0) || !(spacing > 0.0)) return kInf;
    const double amp = std::max(1.0, p / r);
    const double first = std::pow(s0 * s0 + r * r, -0.5 * p);
    const double rest = std::pow(r, 1.0 - p) / ((p - 1.0) * spacing);
    return amp * (first + rest);
  };
  return k;
}

TestKernel bump_kernel(double support) {
  if (!(support > 0.0) || !std::isfinite(support))
    throw ValidationError("kernel support must be positive and finite");
  const double S = support;
  TestKernel k;
  k.name = "bump";
  k.g = [S](double s) {
    const double t = s / S;
    const double u = 1.0 - t * t;
    if (u < 1e-3) return 0.0;  // exp(-1/u) underflows long before this
    return std::exp(-1.0 / u);
  };
  k.dg = [S](double s) {
    const double t = s / S;
    const double u = 1.0 - t * t;
    if (u < 1e-3) return 0.0;
    return std::exp(-1.0 / u) * (-2.0 * t / (u * u)) / S;
  };
  // Compact support: at most (S-r)/spacing + 1 nonzero terms, each below the
  // suprema of |g| and |g'|.
  k.tail = [S](double r, double spacing) {
    if (!(r > 0.0) || !(spacing > 0.0)) return kInf;
    if (r > S) return 0.0;
    const double count = std::floor((S - r) / spacing) + 1.0;
    const double term = std::max(std::exp(-1.0), 1.083 / S);
    return count * term;
  };
  return k;
}

ImageBcCheck image_kernel_bc_check(BoundaryPair bc, const TestKernel& kernel,
                                   double d, double y_n, int n_max) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw ValidationError("separation must be positive and finite");
  if (!(y_n > 0.0 && y_n < d))
    throw ValidationError("source must lie strictly inside the gap");
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  if (!kernel.g || !kernel.dg || !kernel.tail)
    throw ValidationError("test kernel is incomplete");

  // Every omitted image sits at least 2 n_max d away from either plate, and
  // the image ladder advances in steps of 2d. Two families, two directions.
  const double tail = 4.0 * kernel.tail(2.0 * n_max * d, 2.0 * d);
  if (!std::isfinite(tail))
    throw ConvergenceError("image kernel tail bound cannot be certified");

  double violation = 0.0;
  switch (bc) {
    case BoundaryPair::DD:
      violation = std::fabs(image_sum(bc, kernel.g, d, y_n, 0.0, n_max));
      break;
    case BoundaryPair::DN:
      violation = std::max(
          std::fabs(image_sum(bc, kernel.g, d, y_n, 0.0, n_max)),
          std::fabs(image_sum(bc, kernel.dg, d, y_n, d, n_max)));
      break;
    case BoundaryPair::NN:
      violation = std::max(
          std::fabs(image_sum(bc, kernel.dg, d, y_n, 0.0, n_max)),
          std::fabs(image_sum(bc, kernel.dg, d, y_n, d, n_max)));
      break;
  }
  return {violation, tail};
}

}  // namespace casimir::optical
