#include "gaussfid/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussfid {

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) {
    throw std::invalid_argument("gauss_hermite: order must be >= 1");
  }
  // Jacobi matrix of the Hermite recurrence: zero diagonal, off-diagonal sqrt(j/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 0);
  for (int j = 1; j < order; ++j) {
    sub(j - 1) = std::sqrt(0.5 * j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = sqrt_pi * v0 * v0;
  }
  return rule;
}

namespace {

// integral of exp(-p z^2 + q z + c) dz, Re p > 0, by shifted Gauss-Hermite.
cplx gh_gaussian_integral(cplx p, cplx q, cplx c, const GaussHermiteRule& rule) {
  const double sigma = p.real();
  const double z0 = q.real() / (2.0 * sigma);
  const double scale = 1.0 / std::sqrt(sigma);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double z = z0 + t * scale;
    // weight and compensating exp(t^2) folded into one exponent
    const cplx expo = -p * z * z + q * z + c + t * t + std::log(rule.weights[i]);
    sum += std::exp(expo);
  }
  return sum * scale;
}

std::vector<cplx> compose_samples(const GaussianKernel& k1, const GaussianKernel& k2,
                                  std::span<const Point2> points, const GaussHermiteRule& rule) {
  const cplx p = k1.d + k2.a;
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const Point2& pt : points) {
    const cplx q = k1.k + k2.l - 2.0 * k1.b * pt.x - 2.0 * k2.b * pt.y;
    const cplx c = -k1.a * pt.x * pt.x + k1.l * pt.x + k1.g - k2.d * pt.y * pt.y +
                   k2.k * pt.y + k2.g;
    out.push_back(gh_gaussian_integral(p, q, c, rule));
  }
  return out;
}

}  // namespace

QuadratureComposeResult quadrature_compose(const GaussianKernel& k1, const GaussianKernel& k2,
                                           std::span<const Point2> points, int order) {
  if (order < 20) {
    throw std::invalid_argument("quadrature_compose: order must be >= 20");
  }
  if (!((k1.d + k2.a).real() > 0.0)) {
    throw std::domain_error("quadrature_compose: divergent z-integral, Re(d1 + a2) <= 0");
  }
  QuadratureComposeResult result;
  const auto coarse = compose_samples(k1, k2, points, gauss_hermite(order));
  result.values = compose_samples(k1, k2, points, gauss_hermite(2 * order));
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    const double ref = std::max(std::abs(result.values[i]), 1e-300);
    result.max_rel_deviation =
        std::max(result.max_rel_deviation, std::abs(result.values[i] - coarse[i]) / ref);
  }
  result.converged = result.max_rel_deviation <= 1e-6;
  return result;
}

}  // namespace gaussfid
