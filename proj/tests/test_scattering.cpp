#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "diracwell/scattering.hpp"

using namespace diracwell;
using Scenario = WellScenario<double>;

namespace {
constexpr double kPi = std::numbers::pi;

// Reference values from a 40-digit mpmath evaluation of the definitions.
constexpr double kK = 0.14177446878757825;
constexpr double kKPrime = 0.99403219263764290;
constexpr double kChi = 0.17100884124372464;
}  // namespace

TEST_CASE("wavenumbers") {
  const auto [k, kp] = wavenumbers(Scenario{1.01, 0.4, 0.0});
  CHECK(k == doctest::Approx(kK).epsilon(1e-14));
  CHECK(kp == doctest::Approx(kKPrime).epsilon(1e-14));
  CHECK(kp > k);

  const auto free = wavenumbers(Scenario{std::sqrt(2.0), 0.0, 1.0});
  CHECK(free.outside == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(free.inside == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(wavenumbers(Scenario{1.0, 0.4, 1.0}), DomainError);
  CHECK_THROWS_AS(wavenumbers(Scenario{0.5, 0.4, 1.0}), DomainError);
  CHECK_THROWS_AS(wavenumbers(Scenario{1.1, -0.1, 1.0}), DomainError);
  CHECK_THROWS_AS(wavenumbers(Scenario{1.1, 0.1, -1.0}), DomainError);
  CHECK_THROWS_AS(wavenumbers(Scenario{NAN, 0.1, 1.0}), DomainError);
}

TEST_CASE("chi") {
  CHECK(chi(Scenario{1.01, 0.4, 0.0}) == doctest::Approx(kChi).epsilon(1e-14));
  CHECK(chi(Scenario{3.0, 1.7, 0.0}) == doctest::Approx(0.87765042600700096).epsilon(1e-14));
  // Vanishing well: perfect matching.
  CHECK(chi(Scenario{1.01, 1e-12, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
  // E -> 1+: chi -> 0.
  CHECK(chi(Scenario{1.0 + 1e-12, 0.4, 0.0}) < 1e-5);
  CHECK_THROWS_AS(chi(Scenario{1.0, 0.4, 0.0}), DomainError);
}

TEST_CASE("transmission amplitude at resonances") {
  const double kp = kKPrime;
  for (int m = 1; m <= 6; ++m) {
    const auto st = transmission_amplitude(Scenario{1.01, 0.4, m * kPi / kp});
    CHECK(st.transmission == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(st.phase - m * kPi) < 1e-10);
    CHECK(std::abs(st.magnitude_f - 1.0) < 1e-12);
  }
}

TEST_CASE("transmission amplitude degenerate inputs") {
  SUBCASE("zero width is the identity") {
    const auto st = transmission_amplitude(Scenario{1.01, 0.4, 0.0});
    CHECK(st.transmission == 1.0);
    CHECK(st.phase == 0.0);
    CHECK(st.amplitude == std::complex<double>(1.0, 0.0));
  }
  SUBCASE("no well is free propagation") {
    for (const double e : {1.001, 1.3, 4.0}) {
      for (const double a : {0.3, 7.0, 55.0}) {
        const auto st = transmission_amplitude(Scenario{e, 0.0, a});
        CHECK(st.transmission == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(st.phase == doctest::Approx(st.k * a).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("transmission probability") {
  const double a = (kPi / 2) / kKPrime;
  // 4 chi^2 / (4 chi^2 + (chi^2 - 1)^2) with the reference chi.
  CHECK(transmission_probability(Scenario{1.01, 0.4, a}) == doctest::Approx(0.11042322115640422).epsilon(1e-12));
  const auto st = transmission_amplitude(Scenario{1.01, 0.4, a});
  CHECK(std::norm(st.amplitude) == doctest::Approx(0.11042322115640422).epsilon(1e-12));

  // Periodic in a with period pi/k'.
  for (const double a0 : {0.1, 1.7, 4.4}) {
    const double t0 = transmission_probability(Scenario{1.01, 0.4, a0});
    const double t1 = transmission_probability(Scenario{1.01, 0.4, a0 + kPi / kKPrime});
    CHECK(t1 == doctest::Approx(t0).epsilon(1e-10));
  }
}

TEST_CASE("tan singularities take the two-sided limit") {
  const double q = 0.5 * (kChi + 1.0 / kChi);
  for (int m = 0; m < 5; ++m) {
    const double x = (m + 0.5) * kPi;
    const double phi = phase_shift(Scenario{1.01, 0.4, x / kKPrime});
    CHECK(phi == doctest::Approx((m + 0.5) * kPi).epsilon(1e-12));
    // Just either side stays within the slope bound.
    for (const double dx : {-1e-9, 1e-9}) {
      const double side = phase_shift(Scenario{1.01, 0.4, (x + dx) / kKPrime});
      CHECK(std::abs(side - phi) <= 2.0 * q * 1e-9 + 1e-12);
    }
  }
}

TEST_CASE("scattering state invariants on random scenarios") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ue(1.0, 10.0), uv(0.0, 2.0), ua(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    double e = ue(rng), v = uv(rng), a = ua(rng);
    if (e == 1.0) e = 1.5;
    if (v == 0.0) v = 0.5;
    if (a == 0.0) a = 1.0;
    const auto st = transmission_amplitude(Scenario{e, v, a});
    INFO("E=" << e << " V0=" << v << " a=" << a);
    CHECK(st.chi > 0.0);
    CHECK(st.chi < 1.0);
    CHECK(st.transmission > 0.0);
    CHECK(st.transmission <= 1.0);
    CHECK(st.transmission * st.magnitude_f * st.magnitude_f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(st.amplitude) == doctest::Approx(st.transmission).epsilon(1e-12));
    // The continuous phase agrees with the argument of F modulo 2 pi.
    const double wrapped = std::remainder(st.phase - std::arg(st.amplitude), 2.0 * kPi);
    CHECK(std::abs(wrapped) < 1e-9);
  }
}

TEST_CASE("phase agrees with unwrapped complex argument along a width sweep") {
  // Independent path: unwrap arg(cos x + i q sin x) by continuity.
  const Scenario base{3.0, 1.7, 0.0};
  const auto [k, kp] = wavenumbers(base);
  const double c = chi(base);
  const double q = 0.5 * (c + 1.0 / c);
  double unwrapped = 0.0;
  double prev_arg = 0.0;
  const double da = 1e-3 / kp;
  for (int i = 1; i <= 20000; ++i) {
    const double a = da * i;
    const double x = kp * a;
    const double arg = std::arg(std::complex<double>(std::cos(x), q * std::sin(x)));
    unwrapped += std::remainder(arg - prev_arg, 2.0 * kPi);
    prev_arg = arg;
    if (i % 997 == 0) CHECK(phase_shift(Scenario{3.0, 1.7, a}) == doctest::Approx(unwrapped).epsilon(1e-10));
  }
  CHECK(phase_shift(Scenario{3.0, 1.7, 5.1}) == doctest::Approx(23.422338483033200).epsilon(1e-13));
}

TEST_CASE("templated on scalar") {
  const WellScenario<long double> s{1.01L, 0.4L, 2.0L};
  const auto st = transmission_amplitude(s);
  const auto sd = transmission_amplitude(Scenario{1.01, 0.4, 2.0});
  CHECK(static_cast<double>(st.transmission) == doctest::Approx(sd.transmission).epsilon(1e-14));
  CHECK(static_cast<double>(st.phase) == doctest::Approx(sd.phase).epsilon(1e-14));
}
