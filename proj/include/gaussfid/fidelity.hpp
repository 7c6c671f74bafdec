#pragma once

#include "gaussfid/state.hpp"

namespace gaussfid {

// Closed-form Uhlmann fidelity of two Gaussian states,
//
//   F = 2 / (sqrt(Delta + T) - sqrt(T)) * exp[-u^T (A1 + A2)^{-1} u],
//
// with Delta = det(A1 + A2), T = (detA1 - 1)(detA2 - 1) and u = u2 - u1 the
// relative displacement.  prefactor * exp_factor reconstructs F.
struct FidelityBreakdown {
  double F;
  double Delta;
  double T;
  double exp_factor;
  double prefactor;
};

FidelityBreakdown fidelity(const GaussianState& s1, const GaussianState& s2);

// Specialization for pure s1 (detA1 = 1 within 1e-10, else std::invalid_argument):
//   F = 1/sqrt(det((A1 + A2)/2)) * exp[-u^T (A1 + A2)^{-1} u].
double pure_fidelity(const GaussianState& s1, const GaussianState& s2);

// trace(rho1 rho2) as the phase-space overlap integral of the two
// characteristic functions: 2/sqrt(Delta) * exp[-u^T (A1 + A2)^{-1} u].
// Equals the fidelity when either state is pure.
double cf_overlap(const GaussianState& s1, const GaussianState& s2);

// Delta + T in canonical parameters:
//   gamma1^2 gamma2^2 + 1
//     + gamma1 gamma2 [S^2 ((m1 m2)^2 + (m1 m2)^{-2}) + C^2 ((m1/m2)^2 + (m2/m1)^2)]
// with C = cos(theta2 - theta1), S = sin(theta2 - theta1).
double delta_T_canonical(const CanonicalForm& c1, const CanonicalForm& c2);

// Entries of G = (Gamma1 + Gamma2~)^{-1}, the inverse of A1 + A2 expressed in
// the frame of state 1 (A1 + A2 = O1^T M1 (Gamma1 + Gamma2~) M1 O1):
//   G_aa = [gamma1 + gamma2 (S^2 (m1 m2)^2 + C^2 (m1/m2)^2)] / Delta
//   G_tt = [gamma1 + gamma2 (S^2 (m1 m2)^{-2} + C^2 (m2/m1)^2)] / Delta
//   G_at = + gamma2 C S (m2^2 - m2^{-2}) / Delta
// Symmetric positive definite.
struct GMatrix {
  double g_aa;
  double g_tt;
  double g_at;
};

GMatrix g_matrix_canonical(const CanonicalForm& c1, const CanonicalForm& c2);

// exp(-u~^T G u~) with u~ = M1^{-1} O1 u; equals the exponential factor of
// fidelity() computed without forming A1 + A2.
double exponential_factor_canonical(const CanonicalForm& c1, const CanonicalForm& c2,
                                    const Displacement& u);

// Bures metric derived from the fidelity.
double bures_distance(const GaussianState& s1, const GaussianState& s2);
double bures_angle(const GaussianState& s1, const GaussianState& s2);

}  // namespace gaussfid
