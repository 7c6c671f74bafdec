#include "gaussfid/kernel.hpp"

#include <cmath>
#include <numbers>

namespace gaussfid {

namespace {

constexpr double kRelTol = 1e-10;   // parameter-relation tolerance
constexpr double kTraceTol = 1e-12;
constexpr double kPureTol = 1e-14;  // b this close to zero means projector

double sqr(double x) { return x * x; }

}  // namespace

GaussianKernel::GaussianKernel(cplx a_, cplx d_, cplx b_, cplx l_, cplx k_, cplx g_)
    : a(a_), d(d_), b(b_), l(l_), k(k_), g(g_) {
  if (!(a.real() > 0.0) || !(d.real() > 0.0)) {
    throw std::domain_error("GaussianKernel: Re a and Re d must be positive");
  }
  if (!((a + d + 2.0 * b).real() > 0.0)) {
    throw std::domain_error("GaussianKernel: Re(a + d + 2b) must be positive");
  }
}

DensityKernel::DensityKernel(const GaussianKernel& kernel) : k_(kernel) {
  if (std::abs(k_.d - std::conj(k_.a)) > kRelTol || std::abs(k_.b.imag()) > kRelTol ||
      std::abs(k_.k - std::conj(k_.l)) > kRelTol || std::abs(k_.g.imag()) > kRelTol) {
    throw invalid_kernel_error("DensityKernel: Hermiticity relations violated");
  }
  const double b = k_.b.real();
  const double ra = k_.a.real();
  if (b > kRelTol) {
    throw non_positive_error("DensityKernel: b > 0 (negative operator)");
  }
  if (ra + b <= 0.0) {
    throw non_positive_error("DensityKernel: Re a + b <= 0 (not normalizable)");
  }
  // Snap to the exact Hermitian representative so downstream algebra sees
  // b, g real and d = conj a, k = conj l exactly.
  const cplx a = 0.5 * (k_.a + std::conj(k_.d));
  const cplx l = 0.5 * (k_.l + std::conj(k_.k));
  k_ = GaussianKernel(a, std::conj(a), cplx(std::min(b, 0.0), 0.0), l, std::conj(l),
                      cplx(k_.g.real(), 0.0));
  const cplx tr = trace(k_);
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw invalid_kernel_error("DensityKernel: trace differs from 1 beyond 1e-12");
  }
}

cplx evaluate(const GaussianKernel& kernel, double x, double y) {
  return std::exp(-(kernel.a * x * x + kernel.d * y * y + 2.0 * kernel.b * x * y) +
                  kernel.l * x + kernel.k * y + kernel.g);
}

cplx trace(const GaussianKernel& kernel) {
  const cplx p = kernel.a + kernel.d + 2.0 * kernel.b;
  if (!(p.real() > 0.0)) {
    throw std::domain_error("trace: diagonal slice not integrable, Re(a+d+2b) <= 0");
  }
  const cplx s = kernel.l + kernel.k;
  return std::sqrt(std::numbers::pi / p) * std::exp(s * s / (4.0 * p) + kernel.g);
}

DensityKernel normalize(const GaussianKernel& kernel) {
  if (std::abs(kernel.d - std::conj(kernel.a)) > kRelTol ||
      std::abs(kernel.b.imag()) > kRelTol ||
      std::abs(kernel.k - std::conj(kernel.l)) > kRelTol) {
    throw invalid_kernel_error("normalize: Hermiticity relations violated");
  }
  const cplx a = 0.5 * (kernel.a + std::conj(kernel.d));
  const cplx l = 0.5 * (kernel.l + std::conj(kernel.k));
  const double b = std::min(kernel.b.real(), 0.0);
  if (kernel.b.real() > kRelTol) {
    throw non_positive_error("normalize: b > 0 (negative operator)");
  }
  const double w = a.real() + b;  // half the diagonal decay rate
  if (!(w > 0.0)) {
    throw non_positive_error("normalize: Re a + b <= 0 (not normalizable)");
  }
  const double g = -sqr(l.real()) / (2.0 * w) - 0.5 * std::log(std::numbers::pi / (2.0 * w));
  return DensityKernel(GaussianKernel(a, std::conj(a), b, l, std::conj(l), g));
}

GaussianKernel compose(const GaussianKernel& k1, const GaussianKernel& k2) {
  const cplx p = k1.d + k2.a;
  if (!(p.real() > 0.0)) {
    throw std::domain_error("compose: divergent z-integral, Re(d1 + a2) <= 0");
  }
  const cplx s = k1.k + k2.l;
  const cplx a = k1.a - k1.b * k1.b / p;
  const cplx d = k2.d - k2.b * k2.b / p;
  const cplx b = -k1.b * k2.b / p;
  const cplx l = k1.l - s * k1.b / p;
  const cplx k = k2.k - s * k2.b / p;
  const cplx g = k1.g + k2.g + s * s / (4.0 * p) + 0.5 * (std::log(std::numbers::pi) - std::log(p));
  return GaussianKernel(a, d, b, l, k, g);
}

GaussianKernel sqrt_kernel(const DensityKernel& rho) {
  const cplx a = rho.a();
  const double b = rho.b();
  if (b > kRelTol) {
    throw non_positive_error("sqrt_kernel: b > 0");
  }
  if (-b <= kPureTol) {
    return rho.kernel();  // projector: its own square root
  }
  const double s2 = 2.0 * (a.real() - b);  // a + d - 2b, real for Hermitian kernels
  if (!(s2 > 0.0)) {
    throw std::domain_error("sqrt_kernel: degenerate kernel, Re(a + d - 2b) <= 0");
  }
  const cplx at = a - b;
  const double bt = -std::sqrt(-b * s2);
  const double q = std::sqrt(-b / s2);
  const double lk_sum = 2.0 * rho.l().real() / (1.0 + 2.0 * q);
  const cplx lt(0.5 * lk_sum, rho.l().imag());
  const double gt = 0.5 * rho.g() - 0.25 * std::log(std::numbers::pi / s2) -
                    sqr(2.0 * rho.l().real()) / (8.0 * sqr(std::sqrt(s2) + 2.0 * std::sqrt(-b)));
  return GaussianKernel(at, std::conj(at), bt, lt, std::conj(lt), gt);
}

}  // namespace gaussfid
