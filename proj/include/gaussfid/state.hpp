#pragma once

#include "gaussfid/kernel.hpp"

namespace gaussfid {

// First moments (<Q>, <P>) of a state.
struct Displacement {
  double alpha = 0.0;
  double tau = 0.0;
};

// Symmetric second-moment matrix A with the factor-2 convention
//   a_qq = 2 Var Q,  a_pp = 2 Var P,  a_pq = 2 Cov(Q, P) symmetrized,
// so the vacuum has A = I.  Physical states satisfy detA >= 1 (pure iff
// detA = 1); construction rejects detA < 1 beyond a 1e-10 slack.
struct CovarianceMatrix {
  double a_qq;
  double a_pp;
  double a_pq;

  CovarianceMatrix(double a_qq, double a_pp, double a_pq);

  double det() const { return a_qq * a_pp - a_pq * a_pq; }
};

struct GaussianState {
  CovarianceMatrix cov;
  Displacement disp;
};

// Parametrization-independent coordinates of a covariance matrix,
// A = O^T M Gamma M O with O the rotation by theta, M = diag(m, 1/m),
// Gamma = gamma I.  detA = gamma^2.  The canonical representative has
// m >= 1 and theta in [0, pi).
struct CanonicalForm {
  double gamma;  // thermal parameter, >= 1
  double m;      // squeeze magnitude
  double theta;  // squeeze orientation, radians

  CanonicalForm(double gamma, double m, double theta);
};

// Thermal state of the unit-frequency oscillator at inverse temperature beta:
// A = coth(beta/2) I.  Throws std::domain_error for beta <= 0.
GaussianState thermal_state(double beta);

// Mehler kernel of the normalized thermal state,
//   a = d = coth(beta)/2,  b = -1/(2 sinh beta),  l = k = 0,
//   g = -ln sqrt(pi / tanh(beta/2)).
DensityKernel thermal_kernel(double beta);

// Position-representation kernel of a state.  Undisplaced part from
//   a = (detA + 1)/(4 a_qq) - i a_pq/(2 a_qq),  d = conj a,
//   b = -(detA - 1)/(4 a_qq),
// then the Weyl displacement W(alpha, tau) contributes
//   l = 2 (a + b) alpha + i tau,  k = conj l,  g -> g - (a + d + 2b) alpha^2.
DensityKernel kernel_from_state(const GaussianState& s);

// Inverse of kernel_from_state:
//   a_qq = 1/(a+d+2b),  a_pp = 4(ad - b^2)/(a+d+2b),  a_pq = i(a-d)/(a+d+2b),
//   alpha = Re l / (2(Re a + b)),  tau = Im l - 2 Im(a) alpha.
GaussianState state_from_kernel(const DensityKernel& k);

// A = O^T diag(m^2 gamma, gamma/m^2) O.  Throws unphysical_state_error for
// gamma < 1.
GaussianState from_canonical(const CanonicalForm& c, const Displacement& u = {});

// Eigen-decomposition of A: gamma = sqrt(detA), m = (lambda1/lambda2)^(1/4)
// with lambda1 >= lambda2, theta the rotation taking the lambda1 axis to the
// q-axis, normalized to [0, pi).  Degenerate A (m = 1) returns theta = 0.
CanonicalForm canonical_decompose(const CovarianceMatrix& a);

// Squeeze/temperature parameters in Twamley's convention:
//   cosh r = (m + 1/m)/2,  cosh(beta/4) = gamma / sqrt(gamma^2 - 1).
// The pure-state limit gamma = 1 gives beta = +infinity (not an error).
struct TwamleyParams {
  double r;
  double beta;
};
TwamleyParams twamley_params(const CanonicalForm& c);

// Characteristic function CF(alpha, tau) = trace(rho exp(i(alpha Q + tau P)))
//   = exp[i(alpha alpha0 + tau tau0)]
//     exp[-(a_qq alpha^2 + a_pp tau^2 + 2 a_pq alpha tau)/4]
// with (alpha0, tau0) the state displacement.  CF(0, 0) = 1.
cplx characteristic_function(const GaussianState& s, double alpha, double tau);

// Phase-space rotation by theta_rot followed by a displacement:
// A -> R A R^T, u -> R u + u_shift.  detA is preserved.
GaussianState symplectic_transform(const GaussianState& s, double theta_rot,
                                   const Displacement& u_shift);

}  // namespace gaussfid
