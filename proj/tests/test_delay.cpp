#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diracwell/delay.hpp"

using namespace diracwell;
using Scenario = WellScenario<double>;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kKPrime = 0.99403219263764290;  // k' at E=1.01, V0=0.4

double width_at(double e, double v, double kpa) { return width_for_k_prime_a(e, v, kpa); }
}  // namespace

TEST_CASE("relativistic delay reference values") {
  // d phi / dE from 40-digit numerical differentiation of the phase.
  CHECK(group_delay_rel(Scenario{1.01, 0.4, 0.7}) == doctest::Approx(-15.097391910379173).epsilon(1e-12));
  CHECK(group_delay_rel(Scenario{1.01, 0.4, 3.0}) == doctest::Approx(28.671624375383602).epsilon(1e-12));
  CHECK(group_delay_rel(Scenario{1.01, 0.4, 10.3}) == doctest::Approx(-4.7734064722333382).epsilon(1e-12));
  CHECK(group_delay_rel(Scenario{1.5, 1.2, 2.3}) == doctest::Approx(2.6913719163622731).epsilon(1e-12));
}

TEST_CASE("relativistic delay special cases") {
  SUBCASE("free propagation gives a E / k") {
    for (const double e : {1.001, 1.5, 3.0})
      for (const double a : {0.5, 10.0}) {
        const double k = std::sqrt(e * e - 1.0);
        CHECK(group_delay_rel(Scenario{e, 0.0, a}) == doctest::Approx(a * e / k).epsilon(1e-12));
      }
  }
  SUBCASE("first resonance exceeds the light transit") {
    const Scenario s{1.01, 0.4, kPi / kKPrime};
    CHECK(group_delay_rel(s) == doctest::Approx(13.490805473480690).epsilon(1e-12));
    CHECK(s.width == doctest::Approx(3.1604536320434906).epsilon(1e-13));
    CHECK(group_delay_rel(s) > s.width);
  }
  SUBCASE("zero width") { CHECK(group_delay_rel(Scenario{1.2, 0.4, 0.0}) == 0.0); }
}

TEST_CASE("dimensionless forms agree with the direct forms") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double alpha = 1.0 + 1e-3 + 4.0 * u(rng);
    const double beta = 1e-3 + 2.0 * u(rng);
    const double a = 0.05 + 60.0 * u(rng);
    const Scenario s{alpha, beta, a};
    INFO("alpha=" << alpha << " beta=" << beta << " a=" << a);
    const double rel = group_delay_rel(s);
    CHECK(group_delay_rel_dimensionless(alpha, beta, 1.0 / a) ==
          doctest::Approx(rel).epsilon(1e-10).scale(std::max(1.0, std::abs(rel))));
    const double nonrel = group_delay_nonrel(s);
    CHECK(group_delay_nonrel_dimensionless(alpha, beta, 1.0 / a) ==
          doctest::Approx(nonrel).epsilon(1e-10).scale(std::max(1.0, std::abs(nonrel))));
  }
}

TEST_CASE("non-relativistic delay") {
  // Schroedinger phase derivative, evaluated independently at 40 digits.
  CHECK(group_delay_nonrel(Scenario{1.01, 0.2, 0.5}) == doctest::Approx(-19.903506218733155).epsilon(1e-12));
  CHECK(group_delay_nonrel(Scenario{1.01, 0.2, 1.5}) == doctest::Approx(-10.076406831351570).epsilon(1e-12));
  CHECK(group_delay_nonrel(Scenario{1.01, 0.2, 7.0}) == doctest::Approx(1.4291846881394814).epsilon(1e-12));

  SUBCASE("free transit a / v") {
    const double ek = 0.02;
    const double v = std::sqrt(2.0 * ek);
    CHECK(group_delay_nonrel(Scenario{1.0 + ek, 0.0, 9.0}) == doctest::Approx(9.0 / v).epsilon(1e-13));
  }
  SUBCASE("agrees with the relativistic delay at low energy and shallow depth") {
    for (const double a : {1.0, 3.0, 10.0, 40.0}) {
      const Scenario s{1.0 + 1e-5, 1e-4, a};
      CHECK(group_delay_rel(s) == doctest::Approx(group_delay_nonrel(s)).epsilon(1e-3));
    }
  }
  CHECK_THROWS_AS(group_delay_nonrel(Scenario{1.0, 0.2, 1.0}), DomainError);
}

TEST_CASE("threshold energy") {
  CHECK(threshold_energy(0.4) == doctest::Approx(1.1597048527648618).epsilon(1e-14));
  CHECK(std::abs(threshold_energy(0.4) - 1.16) < 0.005);
  CHECK(threshold_energy(0.2) == doctest::Approx(1.0880339146912894).epsilon(1e-14));
  CHECK(threshold_energy(1.5) == doctest::Approx(1.4311271443936894).epsilon(1e-14));
  CHECK(std::abs(threshold_energy(1e-4) - 1.00005) < 1e-7);
  CHECK(threshold_branch(0.4) == ThresholdBranch::RealRadical);
  CHECK(threshold_branch(0.2) == ThresholdBranch::Trigonometric);
  CHECK_THROWS_AS(threshold_energy(0.0), DomainError);
  CHECK_THROWS_AS(threshold_energy(-1.0), DomainError);

  SUBCASE("continuous across the branch crossover") {
    const double vc = threshold_crossover_depth();
    const double below = threshold_energy(std::nextafter(vc, 0.0));
    const double above = threshold_energy(vc);
    CHECK(std::abs(above - below) < 1e-7);
    CHECK(above == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("closed form is a root of the necessary-condition equality") {
    for (const double v : {1e-4, 0.01, 0.2, 0.3849, 0.4, 1.0, 2.0, 7.5}) {
      const double et = threshold_energy(v);
      CHECK(et > 1.0);
      CHECK(std::abs(et - threshold_energy_bisection(v)) < 1e-9);
      CHECK(std::abs(negativity_margin(et, v)) < 1e-9 * (1.0 + std::abs(negativity_margin(et + 0.1, v))));
    }
  }
}

TEST_CASE("negativity condition") {
  CHECK(negativity_condition(1.01, 0.4));
  CHECK_FALSE(negativity_condition(2.0, 0.4));
  const double et = threshold_energy(0.4);
  CHECK(negativity_condition(et - 1e-6, 0.4));
  CHECK_FALSE(negativity_condition(et + 1e-6, 0.4));
  CHECK_THROWS_AS(negativity_condition(1.0, 0.4), DomainError);

  SUBCASE("matches E < E_t on a grid") {
    for (int i = 0; i < 100; ++i) {
      const double v = 1e-3 + 2.0 * i / 99.0;
      const double et = threshold_energy(v);
      for (int j = 0; j < 100; ++j) {
        const double e = 1.0 + 1e-4 + 2.0 * j / 99.0;
        if (std::abs(e - et) < 1e-6) continue;
        CHECK(negativity_condition(e, v) == (e < et));
      }
    }
  }
}

TEST_CASE("negative delays are realizable at small width") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uv(0.05, 2.0), uf(0.0, 1.0);
  int tested = 0;
  for (int i = 0; i < 40; ++i) {
    const double v = uv(rng);
    const double e = 1.0 + (threshold_energy(v) - 1.0) * (0.05 + 0.9 * uf(rng));
    REQUIRE(negativity_condition(e, v));
    const double kp = wavenumbers(Scenario{e, v, 0.0}).inside;
    bool found = false;
    for (int j = 1; j <= 10000 && !found; ++j)
      found = group_delay_rel(Scenario{e, v, kPi / kp * j / 10000.0}) < 0.0;
    CHECK(found);
    ++tested;
  }
  CHECK(tested == 40);
}

TEST_CASE("resonance delay and slope") {
  const Scenario m1{1.01, 0.4, kPi / kKPrime};
  const Scenario m2{1.01, 0.4, 2.0 * kPi / kKPrime};
  CHECK(resonance_delay(m1) == doctest::Approx(13.490805473480690).epsilon(1e-12));
  CHECK(resonance_delay(m2) == doctest::Approx(2.0 * resonance_delay(m1)).epsilon(1e-13));
  CHECK(resonance_delay(m1) > m1.width);
  CHECK(resonance_order(m2) == 2);
  CHECK(resonance_order(Scenario{1.01, 0.4, 0.3}) == 1);

  // d tau / d a from 40-digit numerical differentiation.
  CHECK(resonance_slope(m1) == doctest::Approx(-133.24329601785766).epsilon(1e-11));
  const Scenario hot{2.0, 0.4, width_at(2.0, 0.4, kPi)};
  CHECK(resonance_slope(hot) == doctest::Approx(1.0777205024873014).epsilon(1e-11));
  CHECK(resonance_slope(hot) > 0.0);

  CHECK_THROWS_AS(resonance_delay(Scenario{1.01, 0.4, 1.0}), PreconditionError);
  CHECK_THROWS_AS(resonance_slope(Scenario{1.01, 0.4, 1.0}), PreconditionError);

  SUBCASE("slope sign follows the necessary condition and matches finite differences") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ue(1.001, 4.0), uv(0.01, 2.0);
    std::uniform_int_distribution<int> um(1, 6);
    for (int i = 0; i < 100; ++i) {
      const double e = ue(rng), v = uv(rng);
      const int m = um(rng);
      const Scenario s{e, v, width_at(e, v, m * kPi)};
      REQUIRE(is_resonant(s));
      const double slope = resonance_slope(s);
      INFO("E=" << e << " V0=" << v << " m=" << m);
      CHECK((slope < 0.0) == negativity_condition(e, v));
      CHECK(delay_width_derivative(s, 1e-6) == doctest::Approx(slope).epsilon(1e-5));
      CHECK(resonance_delay(s) > s.width);
    }
  }
}

TEST_CASE("low-energy limit") {
  const double alpha = 1.0 + 1e-6, beta = 0.4;
  const double kp = wavenumbers(Scenario{alpha, beta, 0.0}).inside;
  for (const double x : {kPi / 4.0, 1.0, 2.5, kp * 100.0}) {
    const Scenario s{alpha, beta, x / kp};
    CHECK(group_delay_rel(s) == doctest::Approx(low_energy_limit_delay(alpha, beta, x)).epsilon(1e-3));
  }
  CHECK(std::abs(low_energy_limit_delay(alpha, beta, kPi / 2.0)) < 1e-10);
  // cot > 0 drives the delay large and negative.
  CHECK(low_energy_limit_delay(alpha, beta, kPi / 4.0) < -1000.0);
  const auto st = transmission_amplitude(Scenario{alpha, beta, 2.0 / kp});
  CHECK(st.transmission == doctest::Approx(low_energy_limit_transmission(st.chi, 2.0)).epsilon(1e-4));
  CHECK(st.transmission < 1e-4);
}

TEST_CASE("delay report") {
  const auto r = analyze(Scenario{1.01, 0.4, 0.7});
  CHECK(r.delay_rel == doctest::Approx(-15.097391910379173).epsilon(1e-12));
  CHECK(r.light_transit == 0.7);
  CHECK(r.negativity_condition);
  CHECK(r.threshold_energy == doctest::Approx(1.1597048527648618).epsilon(1e-14));
  CHECK(r.resonance_slope < 0.0);
  CHECK(r.resonance_order == 1);
  CHECK(r.kinetic_energy == doctest::Approx(0.01).epsilon(1e-12));

  const auto far = analyze(Scenario{2.0, 0.4, 9.0});
  CHECK_FALSE(far.negativity_condition);
  CHECK(far.resonance_slope > 0.0);
}
