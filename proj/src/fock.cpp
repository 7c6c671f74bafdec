#include "gaussfid/fock.hpp"

#include <cmath>
#include <numbers>

#include "gaussfid/quadrature.hpp"

namespace gaussfid {

namespace {

// h_0..h_{dim-1} at each node, scaled column-wise by the de-weighted
// quadrature weights.  Hermite functions go through the normalized
// three-term recurrence; they stay bounded, so no overflow for any n.
Eigen::MatrixXd hermite_weighted(int dim, const std::vector<double>& nodes,
                                 const std::vector<double>& log_weights, double sigma) {
  const int order = static_cast<int>(nodes.size());
  const double scale = 1.0 / std::sqrt(sigma);
  Eigen::MatrixXd h(dim, order);
  for (int i = 0; i < order; ++i) {
    const double t = nodes[i];
    const double x = t * scale;
    const double w = std::exp(log_weights[i] + t * t) * scale;
    h(0, i) = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (dim > 1) h(1, i) = std::numbers::sqrt2 * x * h(0, i);
    for (int n = 2; n < dim; ++n) {
      h(n, i) = x * std::sqrt(2.0 / n) * h(n - 1, i) - std::sqrt((n - 1.0) / n) * h(n - 2, i);
    }
    h.col(i) *= w;
  }
  return h;
}

Eigen::MatrixXcd clamped_sqrt(const Eigen::MatrixXcd& hermitian, const char* who) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
  Eigen::VectorXd vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) {
    if (vals(i) < -1e-10) {
      throw std::domain_error(std::string(who) + ": eigenvalue below -1e-10, input not a state");
    }
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::MatrixXcd fock_project(const GaussianKernel& kernel, int dim, int quad_order) {
  if (dim < 1) throw std::invalid_argument("fock_project: dim must be >= 1");
  if (quad_order < 2 * dim) {
    throw std::invalid_argument("fock_project: quad_order must be >= 2*dim");
  }
  const GaussHermiteRule rule = gauss_hermite(quad_order);
  std::vector<double> log_w(rule.weights.size());
  for (std::size_t i = 0; i < rule.weights.size(); ++i) log_w[i] = std::log(rule.weights[i]);

  const double sigma_x = kernel.a.real() + 0.5;
  const double sigma_y = kernel.d.real() + 0.5;
  const Eigen::MatrixXd hx = hermite_weighted(dim, rule.nodes, log_w, sigma_x);
  const Eigen::MatrixXd hy =
      (sigma_x == sigma_y) ? hx : hermite_weighted(dim, rule.nodes, log_w, sigma_y);

  Eigen::MatrixXcd kernel_vals(quad_order, quad_order);
  const double sx = 1.0 / std::sqrt(sigma_x), sy = 1.0 / std::sqrt(sigma_y);
  for (int i = 0; i < quad_order; ++i) {
    const double x = rule.nodes[i] * sx;
    for (int j = 0; j < quad_order; ++j) {
      kernel_vals(i, j) = evaluate(kernel, x, rule.nodes[j] * sy);
    }
  }
  return hx * kernel_vals * hy.transpose();
}

FockMatrix kernel_to_fock(const DensityKernel& k, int dim, int quad_order,
                          double deficit_budget) {
  if (dim < 4) throw std::invalid_argument("kernel_to_fock: dim must be >= 4");
  if (quad_order == 0) quad_order = 2 * dim + 16;
  FockMatrix out;
  out.dim = dim;
  out.entries = fock_project(k.kernel(), dim, quad_order);
  const double herm_err = (out.entries - out.entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > 1e-10) {
    throw invalid_kernel_error("kernel_to_fock: projected matrix not Hermitian to 1e-10");
  }
  out.entries = 0.5 * (out.entries + out.entries.adjoint()).eval();
  out.trace_deficit = 1.0 - out.entries.trace().real();
  if (out.trace_deficit > deficit_budget) {
    const int suggestion = required_dim(state_from_kernel(k), deficit_budget);
    throw truncation_error("kernel_to_fock: trace deficit " + std::to_string(out.trace_deficit) +
                               " exceeds budget; dim >= " + std::to_string(suggestion) +
                               " should suffice",
                           suggestion);
  }
  return out;
}

double uhlmann_fidelity(const FockMatrix& m1, const FockMatrix& m2) {
  if (m1.dim != m2.dim) {
    throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  }
  const Eigen::MatrixXcd root1 = clamped_sqrt(m1.entries, "uhlmann_fidelity(rho1)");
  Eigen::MatrixXcd inner = root1 * m2.entries * root1;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner, Eigen::EigenvaluesOnly);
  double tr = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i);
    if (v < -1e-10) {
      throw std::domain_error("uhlmann_fidelity: inner matrix eigenvalue below -1e-10");
    }
    tr += std::sqrt(std::max(v, 0.0));
  }
  return tr * tr;
}

int required_dim(const GaussianState& s, double budget) {
  const CanonicalForm c = canonical_decompose(s.cov);
  const double lam_max = c.gamma * c.m * c.m;
  const double big_l = std::log(1.0 / budget);
  int base = 0;
  if (lam_max > 1.0 + 1e-12) {
    const double q = (lam_max - 1.0) / (lam_max + 1.0);
    base = static_cast<int>(std::ceil(big_l / -std::log(q)));
  }
  const double mu = 0.5 * (s.disp.alpha * s.disp.alpha + s.disp.tau * s.disp.tau);
  const int disp = static_cast<int>(std::ceil(mu + std::sqrt(2.0 * mu * big_l))) + (mu > 0 ? 4 : 0);
  return std::max(8, base + disp + 8);
}

}  // namespace gaussfid
