#pragma once

#include <Eigen/Dense>

#include "gaussfid/kernel.hpp"
#include "gaussfid/state.hpp"

namespace gaussfid {

// Truncated matrix representation of a density kernel in the Hermite-function
// (number) basis of the unit-frequency oscillator.  Hermitian to 1e-10 by
// construction; eigenvalues are nonnegative up to truncation noise (checked
// where square roots are taken).  trace_deficit = 1 - trace measures the
// weight lost to truncation.
struct FockMatrix {
  int dim = 0;
  Eigen::MatrixXcd entries;
  double trace_deficit = 0.0;
};

// Raw projection rho_mn = integral of h_m(x) K(x, y) h_n(y) dx dy for
// m, n < dim, by tensor Gauss-Hermite quadrature after factoring the real
// Gaussian decay out of each direction.  No Hermiticity assumed or enforced;
// this is the building block for kernel_to_fock and for projecting operator
// products.
Eigen::MatrixXcd fock_project(const GaussianKernel& kernel, int dim, int quad_order);

// Fock matrix of a density kernel.  quad_order = 0 selects 2*dim + 16.
// Throws truncation_error (naming a sufficient dim) when the trace deficit
// exceeds deficit_budget; std::invalid_argument for dim < 4 or
// quad_order < 2*dim.
FockMatrix kernel_to_fock(const DensityKernel& k, int dim, int quad_order = 0,
                          double deficit_budget = 1e-6);

// Uhlmann fidelity [trace sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2 by Hermitian
// eigendecomposition.  Eigenvalues below -1e-10 indicate a broken input and
// raise std::domain_error; small negatives are clamped to zero.
double uhlmann_fidelity(const FockMatrix& m1, const FockMatrix& m2);

// Truncation dimension whose estimated Fock tail mass is below budget.
// Geometric tail with per-photon ratio (lam_max - 1)/(lam_max + 1),
// lam_max = gamma m^2 the largest covariance eigenvalue, plus a Poisson
// allowance for the displacement energy.  Monotone in each of gamma, m, |u|.
int required_dim(const GaussianState& s, double budget);

}  // namespace gaussfid
