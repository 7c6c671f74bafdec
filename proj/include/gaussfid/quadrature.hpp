#pragma once

#include <span>
#include <vector>

#include "gaussfid/kernel.hpp"

namespace gaussfid {

// Nodes and weights for integrals with weight exp(-t^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch rule of the given order (order >= 1).
GaussHermiteRule gauss_hermite(int order);

struct Point2 {
  double x;
  double y;
};

// Numerical oracle for compose(): evaluates the z-integral
// integral of k1(x, z) k2(z, y) dz by Gauss-Hermite quadrature at the given
// (x, y) points.  The dominant real Gaussian exp(-Re(d1+a2) (z - z0)^2) is
// factored out (z0 the real stationary point) so the remaining factor is
// smooth.  Convergence is estimated by re-evaluating at twice the order;
// `converged` reports whether the two agree to relative 1e-6.
struct QuadratureComposeResult {
  std::vector<cplx> values;
  double max_rel_deviation = 0.0;
  bool converged = false;
};

QuadratureComposeResult quadrature_compose(const GaussianKernel& k1, const GaussianKernel& k2,
                                           std::span<const Point2> points, int order = 40);

}  // namespace gaussfid
