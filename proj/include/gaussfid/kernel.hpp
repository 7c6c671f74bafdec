#pragma once

#include <complex>

#include "gaussfid/errors.hpp"

namespace gaussfid {

using cplx = std::complex<double>;

// Gaussian integral kernel on the line,
//
//   K(x, y) = exp[ -(a x^2 + d y^2 + 2 b x y) + l x + k y + g ].
//
// Elements of the oscillator semigroup: products of such kernels (operator
// composition) are again of this form.  Decay in each argument requires
// Re a > 0 and Re d > 0; integrability of the diagonal slice x = y requires
// Re(a + d + 2b) > 0.  All three are enforced at construction.
struct GaussianKernel {
  cplx a;  // x^2 coefficient
  cplx d;  // y^2 coefficient
  cplx b;  // half the xy cross coefficient
  cplx l;  // x linear coefficient
  cplx k;  // y linear coefficient
  cplx g;  // additive constant

  GaussianKernel(cplx a, cplx d, cplx b, cplx l, cplx k, cplx g);
};

// Kernel of a quantum density operator: Hermitian (d = conj a, b and g real,
// k = conj l), non-negative (Re a >= -b >= 0) and unit trace.  Construction
// validates all of these; relation checks use absolute tolerance 1e-10,
// the trace check 1e-12.
class DensityKernel {
 public:
  explicit DensityKernel(const GaussianKernel& kernel);

  const GaussianKernel& kernel() const { return k_; }

  // Symmetrized parameters (exact Hermitian representatives).
  cplx a() const { return k_.a; }
  double b() const { return k_.b.real(); }
  cplx l() const { return k_.l; }
  double g() const { return k_.g.real(); }

  // Pure states have b = 0 (the kernel factorizes as psi(x) conj(psi(y))).
  bool is_pure(double tol = 1e-12) const { return -k_.b.real() <= tol; }

 private:
  GaussianKernel k_;
};

// K(x, y).
cplx evaluate(const GaussianKernel& kernel, double x, double y);

// Integral of the diagonal, sqrt(pi/(a+d+2b)) exp((l+k)^2/(4(a+d+2b)) + g),
// principal branch.  Throws std::domain_error when Re(a+d+2b) <= 0.
cplx trace(const GaussianKernel& kernel);

// Replaces g by the unique constant giving unit trace,
// g = -(Re l)^2 / (2(Re a + b)) - ln sqrt(pi / (2(Re a + b))),
// after snapping the parameters to their exact Hermitian representatives.
// Throws invalid_kernel_error if the Hermiticity relations are broken beyond
// tolerance, non_positive_error if b > 0 or Re a + b <= 0.
DensityKernel normalize(const GaussianKernel& kernel);

// Semigroup composition: the kernel of the operator product,
//   (k1 k2)(x, y) = integral of k1(x, z) k2(z, y) dz,
// in closed form.  With p = d1 + a2:
//   A = a1 - b1^2/p            D = d2 - b2^2/p        B = -b1 b2 / p
//   L = l1 - (k1 + l2) b1 / p  K = k2 - (k1 + l2) b2 / p
//   G = g1 + g2 + (k1 + l2)^2 / (4p) + ln sqrt(pi / p)
// Throws std::domain_error when Re(d1 + a2) <= 0 (divergent z-integral).
GaussianKernel compose(const GaussianKernel& k1, const GaussianKernel& k2);

// Kernel of the positive square root of a density operator: the unique
// Gaussian kernel s with compose(s, s) = rho.  With s2 = a + d - 2b (real
// and positive for a density kernel):
//   a~ = a - b, d~ = d - b, b~ = -sqrt(-b (a+d-2b))   (negative branch)
//   l~ + k~ = (l + k) / (1 + 2 sqrt(-b/(a+d-2b))),  l~ - k~ = l - k
//   g~ = g/2 - (1/4) ln(pi/(a+d-2b)) - (l+k)^2 / (8 (sqrt(a+d-2b) + 2 sqrt(-b))^2)
// Pure states (b = 0) are projectors and are returned unchanged.
GaussianKernel sqrt_kernel(const DensityKernel& rho);

}  // namespace gaussfid
