#include "gaussfid/fidelity.hpp"

#include <cmath>

namespace gaussfid {

namespace {

// u^T (A1 + A2)^{-1} u by the 2x2 adjugate.
double inverse_quadratic_form(const GaussianState& s1, const GaussianState& s2) {
  const double qq = s1.cov.a_qq + s2.cov.a_qq;
  const double pp = s1.cov.a_pp + s2.cov.a_pp;
  const double pq = s1.cov.a_pq + s2.cov.a_pq;
  const double det = qq * pp - pq * pq;
  const double ua = s2.disp.alpha - s1.disp.alpha;
  const double ut = s2.disp.tau - s1.disp.tau;
  return (pp * ua * ua - 2.0 * pq * ua * ut + qq * ut * ut) / det;
}

double sum_det(const GaussianState& s1, const GaussianState& s2) {
  const double qq = s1.cov.a_qq + s2.cov.a_qq;
  const double pp = s1.cov.a_pp + s2.cov.a_pp;
  const double pq = s1.cov.a_pq + s2.cov.a_pq;
  return qq * pp - pq * pq;
}

}  // namespace

FidelityBreakdown fidelity(const GaussianState& s1, const GaussianState& s2) {
  FidelityBreakdown out{};
  out.Delta = sum_det(s1, s2);
  // Pure states can carry detA = 1 - O(1e-15); clamp each factor before the
  // product so T never goes negative under the square root.
  const double t1 = std::max(s1.cov.det() - 1.0, 0.0);
  const double t2 = std::max(s2.cov.det() - 1.0, 0.0);
  out.T = t1 * t2;
  // 2/(sqrt(Delta+T) - sqrt(T)) rationalized: the difference form cancels
  // catastrophically for high-temperature states.
  out.prefactor = 2.0 * (std::sqrt(out.Delta + out.T) + std::sqrt(out.T)) / out.Delta;
  out.exp_factor = std::exp(-inverse_quadratic_form(s1, s2));
  out.F = out.prefactor * out.exp_factor;
  return out;
}

double pure_fidelity(const GaussianState& s1, const GaussianState& s2) {
  if (std::abs(s1.cov.det() - 1.0) > 1e-10) {
    throw std::invalid_argument("pure_fidelity: first state is not pure (detA != 1)");
  }
  const double det_half = 0.25 * sum_det(s1, s2);
  return std::exp(-inverse_quadratic_form(s1, s2)) / std::sqrt(det_half);
}

double cf_overlap(const GaussianState& s1, const GaussianState& s2) {
  return 2.0 / std::sqrt(sum_det(s1, s2)) * std::exp(-inverse_quadratic_form(s1, s2));
}

double delta_T_canonical(const CanonicalForm& c1, const CanonicalForm& c2) {
  const double c = std::cos(c2.theta - c1.theta);
  const double s = std::sin(c2.theta - c1.theta);
  const double mm = c1.m * c2.m;
  const double mr = c1.m / c2.m;
  const double g12 = c1.gamma * c2.gamma;
  return g12 * g12 + 1.0 +
         g12 * (s * s * (mm * mm + 1.0 / (mm * mm)) + c * c * (mr * mr + 1.0 / (mr * mr)));
}

GMatrix g_matrix_canonical(const CanonicalForm& c1, const CanonicalForm& c2) {
  const double c = std::cos(c2.theta - c1.theta);
  const double s = std::sin(c2.theta - c1.theta);
  const double m1 = c1.m, m2 = c2.m;
  const double t = (c1.gamma * c1.gamma - 1.0) * (c2.gamma * c2.gamma - 1.0);
  const double delta = delta_T_canonical(c1, c2) - t;
  GMatrix g{};
  g.g_aa = (c1.gamma + c2.gamma * (s * s * (m1 * m2) * (m1 * m2) +
                                   c * c * (m1 / m2) * (m1 / m2))) /
           delta;
  g.g_tt = (c1.gamma + c2.gamma * (s * s / ((m1 * m2) * (m1 * m2)) +
                                   c * c * (m2 / m1) * (m2 / m1))) /
           delta;
  g.g_at = c2.gamma * c * s * (m2 * m2 - 1.0 / (m2 * m2)) / delta;
  return g;
}

double exponential_factor_canonical(const CanonicalForm& c1, const CanonicalForm& c2,
                                    const Displacement& u) {
  const GMatrix g = g_matrix_canonical(c1, c2);
  // u~ = M1^{-1} O1 u
  const double co = std::cos(c1.theta), si = std::sin(c1.theta);
  const double ua = (co * u.alpha - si * u.tau) / c1.m;
  const double ut = (si * u.alpha + co * u.tau) * c1.m;
  return std::exp(-(g.g_aa * ua * ua + 2.0 * g.g_at * ua * ut + g.g_tt * ut * ut));
}

double bures_distance(const GaussianState& s1, const GaussianState& s2) {
  const double f = std::min(fidelity(s1, s2).F, 1.0);
  return std::sqrt(2.0 - 2.0 * std::sqrt(f));
}

double bures_angle(const GaussianState& s1, const GaussianState& s2) {
  const double f = std::min(fidelity(s1, s2).F, 1.0);
  return std::acos(std::sqrt(f));
}

}  // namespace gaussfid
