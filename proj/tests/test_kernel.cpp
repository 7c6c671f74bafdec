#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gaussfid/kernel.hpp"
#include "gaussfid/quadrature.hpp"
#include "gaussfid/state.hpp"
#include "test_util.hpp"

using namespace gaussfid;
using testutil::kernel_distance;
using testutil::random_density_kernel;

namespace {

GaussianKernel vacuum_kernel() {
  return GaussianKernel(0.5, 0.5, 0.0, 0.0, 0.0, -std::log(std::sqrt(std::numbers::pi)));
}

}  // namespace

TEST_CASE("kernel construction rejects non-decaying parameters") {
  CHECK_THROWS_AS(GaussianKernel(-0.1, 0.5, 0.0, 0.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(GaussianKernel(0.5, -0.1, 0.0, 0.0, 0.0, 0.0), std::domain_error);
  // integrable in each argument but not along the diagonal
  CHECK_THROWS_AS(GaussianKernel(0.6, 0.6, -0.7, 0.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("evaluate: vacuum at the origin") {
  const double expected = 1.0 / std::sqrt(std::numbers::pi);
  CHECK(std::abs(evaluate(vacuum_kernel(), 0.0, 0.0) - expected) < 1e-15);
  CHECK(expected == doctest::Approx(0.5641895835477563).epsilon(1e-12));
}

TEST_CASE("evaluate: thermal kernel at (1,1) matches direct substitution") {
  const double beta = 1.0;
  const auto k = thermal_kernel(beta);
  // independent route: exponent -coth(b) + 1/sinh(b) + g with the
  // unit-trace constant g = -0.5 ln(pi / tanh(b/2))
  const double g = -0.5 * std::log(std::numbers::pi / std::tanh(0.5 * beta));
  const double expected = std::exp(-1.0 / std::tanh(beta) + 1.0 / std::sinh(beta) + g);
  CHECK(std::abs(evaluate(k.kernel(), 1.0, 1.0) - expected) < 1e-14);
}

TEST_CASE("evaluate: density kernels are Hermitian pointwise") {
  testutil::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density_kernel(rng);
    const double x = 0.3 * i - 2.0, y = 1.7 - 0.2 * i;
    const cplx lhs = evaluate(rho.kernel(), x, y);
    const cplx rhs = std::conj(evaluate(rho.kernel(), y, x));
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("trace: density kernels have unit trace") {
  CHECK(std::abs(trace(vacuum_kernel()) - 1.0) < 1e-12);
  testutil::Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_density_kernel(rng);
    CHECK(std::abs(trace(rho.kernel()) - 1.0) < 1e-12);
  }
}

TEST_CASE("trace: thermal purity is tanh(beta/2)") {
  for (const double beta : {0.4, 1.0, 2.5}) {
    const auto rho = thermal_kernel(beta);
    const cplx purity = trace(compose(rho.kernel(), rho.kernel()));
    CHECK(std::abs(purity - std::tanh(0.5 * beta)) < 1e-12);
  }
  const auto rho = thermal_kernel(1.0);
  CHECK(trace(compose(rho.kernel(), rho.kernel())).real() ==
        doctest::Approx(0.46211715726000974).epsilon(1e-12));
}

TEST_CASE("trace of a product of density kernels is real, positive, at most 1") {
  testutil::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto r1 = random_density_kernel(rng);
    const auto r2 = random_density_kernel(rng);
    const cplx t = trace(compose(r1.kernel(), r2.kernel()));
    CHECK(std::abs(t.imag()) < 1e-12);
    CHECK(t.real() > 0.0);
    CHECK(t.real() <= 1.0 + 1e-12);
  }
}

TEST_CASE("normalize: vacuum shape gets g = -ln sqrt(pi)") {
  const auto rho = normalize(GaussianKernel(0.5, 0.5, 0.0, 0.0, 0.0, 7.25));
  CHECK(rho.g() == doctest::Approx(-0.5723649429247001).epsilon(1e-14));
}

TEST_CASE("normalize: thermal shape gets the Mehler constant") {
  for (const double beta : {0.3, 1.0, 4.0}) {
    const double a = 0.5 / std::tanh(beta);
    const double b = -0.5 / std::sinh(beta);
    const auto rho = normalize(GaussianKernel(a, a, b, 0.0, 0.0, 0.0));
    const double expected = -0.5 * std::log(std::numbers::pi / std::tanh(0.5 * beta));
    CHECK(std::abs(rho.g() - expected) < 1e-14);
    CHECK(std::abs(trace(rho.kernel()) - 1.0) < 1e-14);
  }
}

TEST_CASE("normalize: idempotent on already-normalized kernels") {
  testutil::Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_density_kernel(rng);
    const auto again = normalize(rho.kernel());
    CHECK(kernel_distance(again.kernel(), rho.kernel()) < 1e-14);
  }
}

TEST_CASE("normalize: error paths") {
  // broken Hermiticity: d != conj a
  CHECK_THROWS_AS(normalize(GaussianKernel(cplx(0.5, 0.2), cplx(0.5, 0.2), 0.0, 0.0, 0.0, 0.0)),
                  invalid_kernel_error);
  // b > 0 is a negative operator
  CHECK_THROWS_AS(normalize(GaussianKernel(0.5, 0.5, 0.1, 0.0, 0.0, 0.0)), non_positive_error);
}

TEST_CASE("compose: vacuum is idempotent") {
  const auto prod = compose(vacuum_kernel(), vacuum_kernel());
  CHECK(kernel_distance(prod, vacuum_kernel()) < 1e-15);
}

TEST_CASE("compose agrees with Gauss-Hermite quadrature") {
  std::vector<Point2> probes;
  for (int ix = -2; ix <= 2; ++ix) {
    for (int iy = -2; iy <= 2; ++iy) {
      probes.push_back(Point2{0.8 * ix, 0.8 * iy});
    }
  }

  SUBCASE("vacuum pair at the origin") {
    const std::vector<Point2> origin{{0.0, 0.0}};
    const auto res = quadrature_compose(vacuum_kernel(), vacuum_kernel(), origin);
    CHECK(res.converged);
    CHECK(std::abs(res.values[0] - 1.0 / std::sqrt(std::numbers::pi)) < 1e-10);
  }

  SUBCASE("thermal pair") {
    const auto t1 = thermal_kernel(1.0).kernel();
    const auto t2 = thermal_kernel(2.0).kernel();
    const auto prod = compose(t1, t2);
    const auto res = quadrature_compose(t1, t2, probes);
    CHECK(res.converged);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const cplx exact = evaluate(prod, probes[i].x, probes[i].y);
      CHECK(std::abs(res.values[i] - exact) <= 1e-8 * std::abs(exact));
    }
  }

  SUBCASE("displaced pair") {
    const auto s1 = from_canonical(CanonicalForm(1.4, 1.3, 0.4), Displacement{1.5, -0.7});
    const auto s2 = from_canonical(CanonicalForm(2.0, 1.1, 2.1), Displacement{-0.8, 2.2});
    const auto k1 = kernel_from_state(s1).kernel();
    const auto k2 = kernel_from_state(s2).kernel();
    const auto prod = compose(k1, k2);
    const auto res = quadrature_compose(k1, k2, probes);
    CHECK(res.converged);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const cplx exact = evaluate(prod, probes[i].x, probes[i].y);
      CHECK(std::abs(res.values[i] - exact) <= 1e-8 * std::abs(exact));
    }
  }

  SUBCASE("random density pairs") {
    testutil::Rng rng(15);
    for (int i = 0; i < 50; ++i) {
      const auto k1 = random_density_kernel(rng, 5.0, 3.0, 2.0).kernel();
      const auto k2 = random_density_kernel(rng, 5.0, 3.0, 2.0).kernel();
      const auto prod = compose(k1, k2);
      const auto res = quadrature_compose(k1, k2, probes);
      CHECK(res.converged);
      for (std::size_t p = 0; p < probes.size(); ++p) {
        const cplx exact = evaluate(prod, probes[p].x, probes[p].y);
        CHECK(std::abs(res.values[p] - exact) <= 1e-8 * std::abs(exact));
      }
    }
  }

  SUBCASE("order below 20 is rejected") {
    const std::vector<Point2> origin{{0.0, 0.0}};
    CHECK_THROWS_AS(quadrature_compose(vacuum_kernel(), vacuum_kernel(), origin, 10),
                    std::invalid_argument);
  }
}

TEST_CASE("compose is associative on random density triples") {
  testutil::Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const auto k1 = random_density_kernel(rng).kernel();
    const auto k2 = random_density_kernel(rng).kernel();
    const auto k3 = random_density_kernel(rng).kernel();
    const auto left = compose(compose(k1, k2), k3);
    const auto right = compose(k1, compose(k2, k3));
    CHECK(kernel_distance(left, right) < 1e-10);
  }
}

TEST_CASE("sqrt_kernel: vacuum is its own square root") {
  const auto rho = normalize(vacuum_kernel());
  CHECK(kernel_distance(sqrt_kernel(rho), rho.kernel()) < 1e-15);
}

TEST_CASE("sqrt_kernel: thermal square root is the half-temperature Mehler shape") {
  for (int i = 0; i < 20; ++i) {
    const double beta = 0.2 + 0.45 * i;
    const auto root = sqrt_kernel(thermal_kernel(beta));
    CHECK(std::abs(root.a - 0.5 / std::tanh(0.5 * beta)) < 1e-12);
    CHECK(std::abs(root.b - (-0.5 / std::sinh(0.5 * beta))) < 1e-12);
  }
}

TEST_CASE("sqrt_kernel: composing the root with itself recovers the state") {
  testutil::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto rho = random_density_kernel(rng);
    const auto root = sqrt_kernel(rho);
    // root is Hermitian with -b >= 0
    CHECK(std::abs(root.d - std::conj(root.a)) < 1e-12);
    CHECK(std::abs(root.b.imag()) < 1e-12);
    CHECK(root.b.real() <= 0.0);
    CHECK(std::abs(root.k - std::conj(root.l)) < 1e-12);
    CHECK(kernel_distance(compose(root, root), rho.kernel()) < 1e-10);
  }
}

TEST_CASE("sqrt_kernel: quadrature confirms the root composes to the state") {
  const auto rho = kernel_from_state(
      from_canonical(CanonicalForm(2.0, 1.5, 0.9), Displacement{1.0, -0.5}));
  const auto root = sqrt_kernel(rho);
  std::vector<Point2> probes{{0.0, 0.0}, {0.9, -0.4}, {-1.1, 0.6}, {0.5, 0.5}};
  const auto res = quadrature_compose(root, root, probes);
  CHECK(res.converged);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const cplx expected = evaluate(rho.kernel(), probes[i].x, probes[i].y);
    CHECK(std::abs(res.values[i] - expected) <= 1e-8 * std::abs(expected));
  }
}

TEST_CASE("DensityKernel validation") {
  // trace far from 1
  CHECK_THROWS_AS(DensityKernel(GaussianKernel(0.5, 0.5, 0.0, 0.0, 0.0, 0.0)),
                  invalid_kernel_error);
  // valid after normalize
  CHECK_NOTHROW(normalize(GaussianKernel(0.5, 0.5, 0.0, 0.0, 0.0, 0.0)));
}
