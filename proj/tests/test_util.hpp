#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "gaussfid/kernel.hpp"
#include "gaussfid/state.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline gaussfid::CanonicalForm random_form(Rng& rng, double gamma_max = 5.0,
                                           double m_max = 3.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return gaussfid::CanonicalForm(1.0 + (gamma_max - 1.0) * unit(rng),
                                 1.0 + (m_max - 1.0) * unit(rng),
                                 std::numbers::pi * unit(rng));
}

inline gaussfid::Displacement random_disp(Rng& rng, double u_max = 5.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = u_max * std::sqrt(unit(rng));
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  return gaussfid::Displacement{r * std::cos(phi), r * std::sin(phi)};
}

inline gaussfid::GaussianState random_state(Rng& rng, double gamma_max = 5.0,
                                            double m_max = 3.0, double u_max = 5.0) {
  return gaussfid::from_canonical(random_form(rng, gamma_max, m_max), random_disp(rng, u_max));
}

inline gaussfid::DensityKernel random_density_kernel(Rng& rng, double gamma_max = 5.0,
                                                     double m_max = 3.0, double u_max = 5.0) {
  return gaussfid::kernel_from_state(random_state(rng, gamma_max, m_max, u_max));
}

inline double kernel_distance(const gaussfid::GaussianKernel& x,
                              const gaussfid::GaussianKernel& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.d - y.d), std::abs(x.b - y.b),
                   std::abs(x.l - y.l), std::abs(x.k - y.k), std::abs(x.g - y.g)});
}

}  // namespace testutil
