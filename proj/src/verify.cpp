#include "gaussfid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gaussfid/fidelity.hpp"
#include "gaussfid/fock.hpp"
#include "gaussfid/quadrature.hpp"
#include "gaussfid/state.hpp"

namespace gaussfid {

namespace {

using Rng = std::mt19937_64;

struct RandomInputs {
  CanonicalForm form;
  Displacement disp;
};

RandomInputs random_inputs(Rng& rng, double gamma_max = 5.0, double m_max = 3.0,
                           double u_max = 5.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double gamma = 1.0 + (gamma_max - 1.0) * unit(rng);
  const double m = 1.0 + (m_max - 1.0) * unit(rng);
  const double theta = std::numbers::pi * unit(rng);
  const double r = u_max * std::sqrt(unit(rng));
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  return RandomInputs{CanonicalForm(gamma, m, theta),
                      Displacement{r * std::cos(phi), r * std::sin(phi)}};
}

GaussianState random_state(Rng& rng, double gamma_max = 5.0, double m_max = 3.0,
                           double u_max = 5.0) {
  const RandomInputs in = random_inputs(rng, gamma_max, m_max, u_max);
  return from_canonical(in.form, in.disp);
}

std::string describe(const GaussianState& s) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"a_qq\":" << s.cov.a_qq << ",\"a_pp\":" << s.cov.a_pp << ",\"a_pq\":" << s.cov.a_pq
     << ",\"alpha\":" << s.disp.alpha << ",\"tau\":" << s.disp.tau << "}";
  return os.str();
}

std::string describe_pair(const GaussianState& s1, const GaussianState& s2) {
  return "{\"state1\":" + describe(s1) + ",\"state2\":" + describe(s2) + "}";
}

std::string describe_kernel(const GaussianKernel& k) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"a\":[" << k.a.real() << "," << k.a.imag() << "],\"b\":[" << k.b.real() << ","
     << k.b.imag() << "],\"l\":[" << k.l.real() << "," << k.l.imag() << "],\"g\":["
     << k.g.real() << "," << k.g.imag() << "]}";
  return os.str();
}

class Category {
 public:
  Category(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  void record(double error, const std::string& input) {
    ++result_.cases;
    if (error > result_.max_error || result_.worst_case.empty()) {
      result_.max_error = std::max(error, result_.max_error);
      result_.worst_case = input;
    }
  }

  VerifyCategory finish(double tol_override) {
    if (tol_override >= 0.0) result_.tolerance = tol_override;
    result_.pass = result_.max_error <= result_.tolerance;
    return result_;
  }

 private:
  VerifyCategory result_;
};

double kernel_param_distance(const GaussianKernel& x, const GaussianKernel& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.d - y.d), std::abs(x.b - y.b),
                   std::abs(x.l - y.l), std::abs(x.k - y.k), std::abs(x.g - y.g)});
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  const int n = std::max(options.cases, 1);
  auto add = [&](Category& c) {
    report.categories.push_back(c.finish(options.tol_override));
    report.pass = report.pass && report.categories.back().pass;
  };

  {  // F1: unit fidelity on the diagonal, strictly below off it
    Rng rng(options.seed);
    Category identity("F1_identity", 1e-12);
    Category distinct("F1_distinct", 0.0);
    for (int i = 0; i < n; ++i) {
      const GaussianState s = random_state(rng);
      identity.record(std::abs(fidelity(s, s).F - 1.0), describe(s));
      const GaussianState other = random_state(rng);
      const double f = fidelity(s, other).F;
      distinct.record(std::max(0.0, f - (1.0 - 1e-12)), describe_pair(s, other));
    }
    add(identity);
    add(distinct);
  }

  {  // F2 + range
    Rng rng(options.seed + 1);
    Category symmetry("F2_symmetry", 1e-12);
    Category range("F_range", 1e-12);
    for (int i = 0; i < n; ++i) {
      const GaussianState s1 = random_state(rng);
      const GaussianState s2 = random_state(rng);
      const double f12 = fidelity(s1, s2).F;
      const double f21 = fidelity(s2, s1).F;
      symmetry.record(std::abs(f12 - f21), describe_pair(s1, s2));
      const double violation = std::max({0.0, f12 - 1.0, f12 <= 0.0 ? 1.0 : 0.0});
      range.record(violation, describe_pair(s1, s2));
    }
    add(symmetry);
    add(range);
  }

  {  // F3: pure first state, fidelity equals trace(rho1 rho2)
    Rng rng(options.seed + 2);
    Category pure("F3_pure_overlap", 1e-10);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
      const RandomInputs in = random_inputs(rng);
      const GaussianState s1 =
          from_canonical(CanonicalForm(1.0, 1.0 + 2.0 * unit(rng), in.form.theta), in.disp);
      const GaussianState s2 = random_state(rng);
      pure.record(std::abs(fidelity(s1, s2).F - cf_overlap(s1, s2)), describe_pair(s1, s2));
    }
    add(pure);
  }

  {  // F4: common rotation + displacement
    Rng rng(options.seed + 3);
    Category invariance("F4_invariance", 1e-12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
      const GaussianState s1 = random_state(rng);
      const GaussianState s2 = random_state(rng);
      const double rot = 2.0 * std::numbers::pi * unit(rng);
      const Displacement shift{10.0 * unit(rng) - 5.0, 10.0 * unit(rng) - 5.0};
      const double before = fidelity(s1, s2).F;
      const double after =
          fidelity(symplectic_transform(s1, rot, shift), symplectic_transform(s2, rot, shift)).F;
      invariance.record(std::abs(after - before), describe_pair(s1, s2));
    }
    add(invariance);
  }

  {  // Canonical-parameter path against the direct matrix path
    Rng rng(options.seed + 4);
    Category delta_t("canonical_delta_T", 1e-12);
    Category exp_factor("canonical_exp_factor", 1e-12);
    for (int i = 0; i < n; ++i) {
      const RandomInputs in1 = random_inputs(rng);
      const RandomInputs in2 = random_inputs(rng);
      const GaussianState s1 = from_canonical(in1.form, in1.disp);
      const GaussianState s2 = from_canonical(in2.form, in2.disp);
      const FidelityBreakdown fb = fidelity(s1, s2);
      const double canonical = delta_T_canonical(in1.form, in2.form);
      const double direct = fb.Delta + fb.T;
      delta_t.record(std::abs(canonical - direct) / direct, describe_pair(s1, s2));
      const Displacement rel{in2.disp.alpha - in1.disp.alpha, in2.disp.tau - in1.disp.tau};
      const double canon_exp = exponential_factor_canonical(in1.form, in2.form, rel);
      exp_factor.record(std::abs(canon_exp - fb.exp_factor), describe_pair(s1, s2));
    }
    add(delta_t);
    add(exp_factor);
  }

  {  // R1: closed-form composition against Gauss-Hermite quadrature
    Rng rng(options.seed + 5);
    Category r1("R1_compose_vs_quadrature", 1e-8);
    Category assoc("R1_associativity", 1e-10);
    std::vector<Point2> probes;
    for (int ix = -2; ix <= 2; ++ix) {
      for (int iy = -2; iy <= 2; ++iy) {
        probes.push_back(Point2{0.7 * ix, 0.7 * iy});
      }
    }
    for (int i = 0; i < n; ++i) {
      const GaussianKernel k1 = kernel_from_state(random_state(rng, 5.0, 3.0, 2.0)).kernel();
      const GaussianKernel k2 = kernel_from_state(random_state(rng, 5.0, 3.0, 2.0)).kernel();
      const GaussianKernel prod = compose(k1, k2);
      const auto quad = quadrature_compose(k1, k2, probes, 40);
      double err = quad.converged ? 0.0 : 1.0;
      for (std::size_t p = 0; p < probes.size(); ++p) {
        const cplx exact = evaluate(prod, probes[p].x, probes[p].y);
        err = std::max(err, std::abs(quad.values[p] - exact) / std::abs(exact));
      }
      r1.record(err, "{\"k1\":" + describe_kernel(k1) + ",\"k2\":" + describe_kernel(k2) + "}");

      const GaussianKernel k3 = kernel_from_state(random_state(rng, 5.0, 3.0, 2.0)).kernel();
      const double assoc_err =
          kernel_param_distance(compose(compose(k1, k2), k3), compose(k1, compose(k2, k3)));
      assoc.record(assoc_err, describe_kernel(k3));
    }
    add(r1);
    add(assoc);
  }

  {  // R2: square root composes back to the state
    Rng rng(options.seed + 6);
    Category r2("R2_sqrt_roundtrip", 1e-10);
    for (int i = 0; i < n; ++i) {
      const DensityKernel rho = kernel_from_state(random_state(rng));
      const GaussianKernel root = sqrt_kernel(rho);
      const double err = kernel_param_distance(compose(root, root), rho.kernel());
      r2.record(err, describe_kernel(rho.kernel()));
    }
    add(r2);
  }

  {  // Closed form against the brute-force Fock oracle (capped: expensive)
    Rng rng(options.seed + 7);
    Category fock("fock_agreement", 1e-6);
    const int cap = std::min(n, 6);
    for (int i = 0; i < cap; ++i) {
      const GaussianState s1 = random_state(rng, 2.5, 2.0, 2.0);
      const GaussianState s2 = random_state(rng, 2.5, 2.0, 2.0);
      constexpr double budget = 1e-9;
      const int dim = options.dim_override > 0
                          ? options.dim_override
                          : std::max(required_dim(s1, budget), required_dim(s2, budget));
      const FockMatrix m1 = kernel_to_fock(kernel_from_state(s1), dim, 0, budget);
      const FockMatrix m2 = kernel_to_fock(kernel_from_state(s2), dim, 0, budget);
      const double oracle = uhlmann_fidelity(m1, m2);
      fock.record(std::abs(oracle - fidelity(s1, s2).F), describe_pair(s1, s2));
    }
    add(fock);
  }

  return report;
}

}  // namespace gaussfid
