#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diracwell/errors.hpp"
#include "diracwell/quadrature.hpp"

using namespace diracwell;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (std::size_t n : {1u, 2u, 3u, 5u, 16u, 40u}) {
    const QuadratureRule rule = gauss_legendre(n);
    REQUIRE(rule.size() == static_cast<Eigen::Index>(n));
    CHECK(rule.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t p = 0; p <= 2 * n - 1; ++p) {
      const double exact = (p % 2 == 1) ? 0.0 : 2.0 / static_cast<double>(p + 1);
      const double got = rule.integrate(rule.nodes.pow(static_cast<double>(p)));
      INFO("n=" << n << " p=" << p);
      CHECK(got == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
    // Nodes are sorted and symmetric.
    for (Eigen::Index i = 1; i < rule.size(); ++i) CHECK(rule.nodes(i) > rule.nodes(i - 1));
    CHECK((rule.nodes + rule.nodes.reverse()).abs().maxCoeff() < 1e-15);
  }
  CHECK_THROWS_AS(gauss_legendre(0), ConfigError);
}

TEST_CASE("composite rule on an oscillatory Gaussian integrand") {
  // Int exp(-x^2/2) cos(t x) dx over R = sqrt(2 pi) exp(-t^2/2); truncated at +-12.
  const QuadratureRule rule = composite_gauss_legendre(-12.0, 12.0, 512);
  CHECK(rule.size() == 512);
  for (const double t : {0.0, 1.0, 3.0, 7.5}) {
    const double got = rule.integrate((-0.5 * rule.nodes.square()).exp() * (t * rule.nodes).cos());
    const double exact = std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * t * t);
    CHECK(got == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
  }
  // Node count rounds up to whole panels.
  CHECK(composite_gauss_legendre(0.0, 1.0, 20, 16).size() == 32);
  CHECK(composite_gauss_legendre(0.0, 1.0, 20, 16).weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(composite_gauss_legendre(1.0, 1.0, 16), ConfigError);
}
