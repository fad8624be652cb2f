#pragma once

#include <functional>
#include <string>
#include <vector>

#include "casimir/types.hpp"

// Zero-temperature engine built from image paths: every reflection sequence
// between the plates contributes a power of its geometric length, the
// x-independent (even) family carries the separation dependence, and the
// image signs encode the boundary pair.
namespace casimir::optical {

enum class PathParity { Even, Odd };

// One image path. index locates the image cell; sigma_d and sigma_n count
// reflections off the first and second plate (the Dirichlet plate is first
// for the mixed pair); sign is the product of per-reflection factors:
// -1 per Dirichlet hit, +1 per Neumann hit.
struct Path {
  int index = 0;
  PathParity parity = PathParity::Even;
  int sigma_d = 0;
  int sigma_n = 0;
  double sign = 1.0;
};

// All even paths with index in [-n_max, n_max] except 0, followed by the two
// odd classes covering indices [-n_max, n_max].
std::vector<Path> enumerate_paths(BoundaryPair bc, int n_max);

// Geometric length of the path for a source at longitudinal position
// x_n in [0, d]: |2 d n| for even paths, |2 x_n + 2 d n| for odd ones.
// Throws on the degenerate zero-length case (odd n = 0 source on the plate).
double path_length(const Path& p, double x_n, double d);

// Interaction energy per unit plate area carried by the even paths,
// truncated at |index| <= n_max. .error is a rigorous truncation tail bound.
ValueWithError even_energy_per_area(const PlateConfig& cfg, BoundaryPair bc,
                                    int n_max);

// The odd family is separation-independent once a common short-distance
// cutoff delta is applied to the image distance. Evaluates the cutoff
// odd-path sums at separations d1 and d2 (each integrated over the source
// position in closed form) and returns |I(d1) - I(d2)|.
double odd_energy_d_independence_check(const PlateConfig& cfg, BoundaryPair bc,
                                       double delta, double d1, double d2,
                                       int n_max);

// Even, decaying test weight for probing the image structure directly.
struct TestKernel {
  std::string name;
  std::function<double(double)> g;   // value at longitudinal offset
  std::function<double(double)> dg;  // derivative of g
  // Certified upper bound on sum_{j>=0} max(|g|, |g'|)(r + j*spacing);
  // +infinity when no useful bound can be given.
  std::function<double(double, double)> tail;
};

TestKernel gaussian_kernel(double width);
// Power-law kernel (s0^2 + s^2)^(-(n_dim+1)/2), decaying like the per-path
// energy weight.
TestKernel rational_kernel(int n_dim, double s0);
TestKernel bump_kernel(double support);

struct ImageBcCheck {
  double violation = 0.0;   // largest plate-condition residual
  double tail_bound = 0.0;  // certified truncation tail it must stay under
};

// Assembles the truncated image sum for a source at y_n strictly inside the
// gap and evaluates the plate conditions: the sum itself at a Dirichlet
// plate, its normal derivative at a Neumann plate. Throws ConvergenceError
// when the kernel's truncation tail cannot be certified.
ImageBcCheck image_kernel_bc_check(BoundaryPair bc, const TestKernel& kernel,
                                   double d, double y_n, int n_max);

}  // namespace casimir::optical
