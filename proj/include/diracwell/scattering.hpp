#pragma once

// Stationary Dirac scattering (helicity +1) off the rectangular well
// -V0 on 0 < z < a.
//
// Natural units throughout: mu = c = hbar = 1. Energies are in units of the
// rest energy, lengths in reduced Compton wavelengths, times in hbar/(mu c^2).

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "diracwell/errors.hpp"

namespace diracwell {

template <typename Scalar = double>
struct WellScenario {
  Scalar energy{};  ///< total energy E (alpha), must exceed 1
  Scalar depth{};   ///< well depth V0 (beta), >= 0
  Scalar width{};   ///< well width a, >= 0

  /// Kinetic energy E - 1.
  Scalar kinetic_energy() const { return energy - Scalar(1); }
};

template <typename Scalar>
std::string describe(const WellScenario<Scalar>& s) {
  std::ostringstream os;
  os.precision(17);
  os << "(E=" << s.energy << ", V0=" << s.depth << ", a=" << s.width << ")";
  return os.str();
}

template <typename Scalar>
void check_scenario(const WellScenario<Scalar>& s) {
  using std::isfinite;
  if (!isfinite(s.energy) || !isfinite(s.depth) || !isfinite(s.width))
    throw DomainError("non-finite scenario " + describe(s));
  if (!(s.energy > Scalar(1)))
    throw DomainError("incident energy must exceed the rest energy " + describe(s));
  if (s.depth < Scalar(0))
    throw DomainError("well depth must be non-negative " + describe(s));
  if (s.width < Scalar(0))
    throw DomainError("well width must be non-negative " + describe(s));
}

template <typename Scalar>
struct Wavenumbers {
  Scalar outside;  ///< k
  Scalar inside;   ///< k'
};

/// k = sqrt(E^2 - 1) outside and k' = sqrt((E+V0)^2 - 1) inside the well.
template <typename Scalar>
Wavenumbers<Scalar> wavenumbers(const WellScenario<Scalar>& s) {
  using std::sqrt;
  check_scenario(s);
  const Scalar e = s.energy;
  const Scalar ev = s.energy + s.depth;
  return {sqrt((e - 1) * (e + 1)), sqrt((ev - 1) * (ev + 1))};
}

/// Matching ratio chi = (k/k') (E + V0 + 1)/(E + 1); lies in (0, 1] and equals 1 only for V0 = 0.
template <typename Scalar>
Scalar chi(const WellScenario<Scalar>& s) {
  const auto [k, kp] = wavenumbers(s);
  return (k / kp) * (s.energy + s.depth + 1) / (s.energy + 1);
}

template <typename Scalar = double>
struct ScatteringState {
  Scalar k{};
  Scalar k_prime{};
  Scalar chi{};
  std::complex<Scalar> amplitude{};  ///< F = e^{i phi} / f
  Scalar magnitude_f{};
  Scalar phase{};         ///< continuous phase shift phi
  Scalar transmission{};  ///< T = 1/f^2

  Scalar k_prime_a(Scalar width) const { return k_prime * width; }
};

namespace detail {

// phi = n pi + atan(q tan r), n = floor(x/pi + 1/2), r = x - n pi in [-pi/2, pi/2).
// Evaluated through atan2 with the signs of sin r and cos r recovered from x, so no
// tan is formed and the (m + 1/2) pi points return their two-sided limit.
template <typename Scalar>
Scalar branch_phase(Scalar x, Scalar q) {
  using std::atan2;
  using std::cos;
  using std::floor;
  using std::fmod;
  using std::sin;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar n = floor(x / pi + Scalar(0.5));
  const bool odd = fmod(n, Scalar(2)) != Scalar(0);
  Scalar sin_r = sin(x);
  Scalar cos_r = cos(x);
  if (odd) {
    sin_r = -sin_r;
    cos_r = -cos_r;
  }
  if (cos_r < Scalar(0)) cos_r = Scalar(0);
  return n * pi + atan2(q * sin_r, cos_r);
}

}  // namespace detail

/// T = 4 chi^2 / (4 chi^2 + (chi^2 - 1)^2 sin^2 k'a).
template <typename Scalar>
Scalar transmission_probability(const WellScenario<Scalar>& s) {
  using std::sin;
  const auto [k, kp] = wavenumbers(s);
  const Scalar c = (k / kp) * (s.energy + s.depth + 1) / (s.energy + 1);
  const Scalar sn = sin(kp * s.width);
  const Scalar c2 = c * c;
  return 4 * c2 / (4 * c2 + (c2 - 1) * (c2 - 1) * sn * sn);
}

/// Full single-energy scattering state.
///
/// The complex number f e^{i phi} = cos k'a + (i/2)(chi + 1/chi) sin k'a fixes
/// F = e^{i phi}/f. The phase returned is the continuous branch (phi = m pi at
/// k'a = m pi), not the principal argument of F.
template <typename Scalar>
ScatteringState<Scalar> transmission_amplitude(const WellScenario<Scalar>& s) {
  using std::abs;
  using std::cos;
  using std::sin;
  const auto [k, kp] = wavenumbers(s);
  const Scalar c = (k / kp) * (s.energy + s.depth + 1) / (s.energy + 1);
  const Scalar q = (c + 1 / c) / 2;
  const Scalar x = kp * s.width;
  const std::complex<Scalar> z(cos(x), q * sin(x));

  ScatteringState<Scalar> st;
  st.k = k;
  st.k_prime = kp;
  st.chi = c;
  st.magnitude_f = abs(z);
  st.amplitude = z / std::norm(z);
  st.phase = detail::branch_phase(x, q);
  const Scalar sn = sin(x);
  const Scalar c2 = c * c;
  st.transmission = 4 * c2 / (4 * c2 + (c2 - 1) * (c2 - 1) * sn * sn);
  return st;
}

/// Continuous phase shift phi(E, V0, a).
template <typename Scalar>
Scalar phase_shift(const WellScenario<Scalar>& s) {
  const auto [k, kp] = wavenumbers(s);
  const Scalar c = (k / kp) * (s.energy + s.depth + 1) / (s.energy + 1);
  return detail::branch_phase(kp * s.width, (c + 1 / c) / 2);
}

/// Width a giving a chosen k'a at fixed energy and depth.
template <typename Scalar>
Scalar width_for_k_prime_a(Scalar energy, Scalar depth, Scalar k_prime_a) {
  const auto [k, kp] = wavenumbers(WellScenario<Scalar>{energy, depth, Scalar(0)});
  return k_prime_a / kp;
}

}  // namespace diracwell
