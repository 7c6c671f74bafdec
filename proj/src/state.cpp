#include "gaussfid/state.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace gaussfid {

namespace {

constexpr double kPhysTol = 1e-10;

}  // namespace

CovarianceMatrix::CovarianceMatrix(double qq, double pp, double pq)
    : a_qq(qq), a_pp(pp), a_pq(pq) {
  if (!(a_qq > 0.0) || !(a_pp > 0.0)) {
    throw unphysical_state_error("CovarianceMatrix: diagonal entries must be positive");
  }
  if (det() < 1.0 - kPhysTol) {
    throw unphysical_state_error("CovarianceMatrix: detA < 1 (unphysical)");
  }
}

CanonicalForm::CanonicalForm(double gamma_, double m_, double theta_)
    : gamma(gamma_), m(m_), theta(theta_) {
  if (gamma < 1.0 - kPhysTol) {
    throw unphysical_state_error("CanonicalForm: gamma < 1 (unphysical)");
  }
  if (!(m > 0.0)) {
    throw unphysical_state_error("CanonicalForm: m must be positive");
  }
  gamma = std::max(gamma, 1.0);
}

GaussianState thermal_state(double beta) {
  if (!(beta > 0.0)) {
    throw std::domain_error("thermal_state: beta must be positive");
  }
  const double gamma = 1.0 / std::tanh(0.5 * beta);
  return GaussianState{CovarianceMatrix(gamma, gamma, 0.0), Displacement{}};
}

DensityKernel thermal_kernel(double beta) {
  if (!(beta > 0.0)) {
    throw std::domain_error("thermal_kernel: beta must be positive");
  }
  const double a = 0.5 / std::tanh(beta);
  const double b = -0.5 / std::sinh(beta);
  const double g = -0.5 * std::log(std::numbers::pi / std::tanh(0.5 * beta));
  return DensityKernel(GaussianKernel(a, a, b, 0.0, 0.0, g));
}

DensityKernel kernel_from_state(const GaussianState& s) {
  const double det = s.cov.det();
  const cplx a((det + 1.0) / (4.0 * s.cov.a_qq), -s.cov.a_pq / (2.0 * s.cov.a_qq));
  // detA slightly below 1 (within the physicality slack) would give a tiny
  // positive b; clamp so the kernel stays in the non-negative class.
  const double b = std::min(-(det - 1.0) / (4.0 * s.cov.a_qq), 0.0);
  const double w = 2.0 * (a.real() + b);  // a + d + 2b
  const double g0 = -0.5 * std::log(std::numbers::pi / w);
  const double alpha = s.disp.alpha;
  const cplx l = 2.0 * (a + b) * alpha + cplx(0.0, s.disp.tau);
  const cplx g = g0 - w * alpha * alpha;
  return DensityKernel(GaussianKernel(a, std::conj(a), b, l, std::conj(l), g));
}

GaussianState state_from_kernel(const DensityKernel& k) {
  const cplx a = k.a();
  const double b = k.b();
  const double w = 2.0 * (a.real() + b);  // a + d + 2b
  const double a_qq = 1.0 / w;
  const double a_pp = 4.0 * (std::norm(a) - b * b) / w;
  const double a_pq = -2.0 * a.imag() / w;  // i(a - d)/(a+d+2b)
  const double alpha = k.l().real() / w;
  const double tau = k.l().imag() - 2.0 * a.imag() * alpha;
  return GaussianState{CovarianceMatrix(a_qq, a_pp, a_pq), Displacement{alpha, tau}};
}

GaussianState from_canonical(const CanonicalForm& c, const Displacement& u) {
  const double lam1 = c.m * c.m * c.gamma;
  const double lam2 = c.gamma / (c.m * c.m);
  const double co = std::cos(c.theta), si = std::sin(c.theta);
  // O^T diag(lam1, lam2) O with O = [[c, -s], [s, c]]
  const double a_qq = lam1 * co * co + lam2 * si * si;
  const double a_pp = lam1 * si * si + lam2 * co * co;
  const double a_pq = co * si * (lam2 - lam1);
  return GaussianState{CovarianceMatrix(a_qq, a_pp, a_pq), u};
}

CanonicalForm canonical_decompose(const CovarianceMatrix& a) {
  const double gamma = std::sqrt(std::max(a.det(), 1.0));
  const double tr = a.a_qq + a.a_pp;
  const double disc = std::sqrt(std::max((a.a_qq - a.a_pp) * (a.a_qq - a.a_pp) +
                                             4.0 * a.a_pq * a.a_pq,
                                         0.0));
  const double lam1 = 0.5 * (tr + disc);
  const double lam2 = 0.5 * (tr - disc);
  const double m = std::pow(lam1 / lam2, 0.25);
  double theta = 0.0;
  if (disc > 1e-14 * tr) {
    // Major-axis angle of A is atan2(2 a_pq, a_qq - a_pp)/2; the canonical
    // theta rotates that axis onto q, so it is the negative, mod pi.
    theta = -0.5 * std::atan2(2.0 * a.a_pq, a.a_qq - a.a_pp);
    theta = std::fmod(theta, std::numbers::pi);
    if (theta < 0.0) theta += std::numbers::pi;
    if (theta >= std::numbers::pi) theta = 0.0;
  }
  return CanonicalForm(gamma, m, theta);
}

TwamleyParams twamley_params(const CanonicalForm& c) {
  const double r = std::acosh(std::max(0.5 * (c.m + 1.0 / c.m), 1.0));
  if (c.gamma <= 1.0 + 1e-12) {
    return TwamleyParams{r, std::numeric_limits<double>::infinity()};
  }
  const double ratio = c.gamma / std::sqrt(c.gamma * c.gamma - 1.0);
  return TwamleyParams{r, 4.0 * std::acosh(ratio)};
}

cplx characteristic_function(const GaussianState& s, double alpha, double tau) {
  const double quad = s.cov.a_qq * alpha * alpha + s.cov.a_pp * tau * tau +
                      2.0 * s.cov.a_pq * alpha * tau;
  const double phase = alpha * s.disp.alpha + tau * s.disp.tau;
  return std::exp(cplx(-0.25 * quad, phase));
}

GaussianState symplectic_transform(const GaussianState& s, double theta_rot,
                                   const Displacement& u_shift) {
  const double co = std::cos(theta_rot), si = std::sin(theta_rot);
  // R A R^T with R = [[c, -s], [s, c]]
  const double qq = s.cov.a_qq, pp = s.cov.a_pp, pq = s.cov.a_pq;
  const double n_qq = co * co * qq - 2.0 * co * si * pq + si * si * pp;
  const double n_pp = si * si * qq + 2.0 * co * si * pq + co * co * pp;
  const double n_pq = co * si * (qq - pp) + (co * co - si * si) * pq;
  const double n_alpha = co * s.disp.alpha - si * s.disp.tau + u_shift.alpha;
  const double n_tau = si * s.disp.alpha + co * s.disp.tau + u_shift.tau;
  return GaussianState{CovarianceMatrix(n_qq, n_pp, n_pq), Displacement{n_alpha, n_tau}};
}

}  // namespace gaussfid
