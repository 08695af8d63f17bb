#pragma once

// Group delays (relativistic and Schroedinger limit), the negative-delay
// condition with its threshold energy, and resonance diagnostics.

#include <cmath>
#include <numbers>
#include <string>

#include "diracwell/errors.hpp"
#include "diracwell/scattering.hpp"

namespace diracwell {

inline constexpr double kResonanceTolerance = 1e-9;

namespace detail {

// sin(y)/y with the removable point handled.
template <typename Scalar>
Scalar sinc(Scalar y) {
  using std::abs;
  using std::sin;
  if (abs(y) < Scalar(1e-4)) {
    const Scalar y2 = y * y;
    return 1 - y2 / 6 + y2 * y2 / 120;
  }
  return sin(y) / y;
}

}  // namespace detail

/// Relativistic group delay tau = d phi / dE, in units of hbar/(mu c^2).
///
///   tau = T/(2 chi k') [ (1+chi^2)(E+V0) - (1-chi^2) V0 (2E+V0)/k^2 * sin(2k'a)/(2k'a) ] a
template <typename Scalar>
Scalar group_delay_rel(const WellScenario<Scalar>& s) {
  using std::sin;
  const auto st = transmission_amplitude(s);
  const Scalar e = s.energy;
  const Scalar v = s.depth;
  const Scalar c2 = st.chi * st.chi;
  const Scalar x = st.k_prime * s.width;
  const Scalar bracket = (1 + c2) * (e + v) * s.width -
                         (1 - c2) * v * (2 * e + v) / (st.k * st.k) * sin(2 * x) / (2 * st.k_prime);
  return st.transmission / (2 * st.chi * st.k_prime) * bracket;
}

/// Same delay from the dimensionless parameters alpha = E, beta = V0, gamma = 1/a.
template <typename Scalar>
Scalar group_delay_rel_dimensionless(Scalar alpha, Scalar beta, Scalar gamma) {
  using std::sin;
  using std::sqrt;
  const WellScenario<Scalar> s{alpha, beta, 1 / gamma};
  check_scenario(s);
  const Scalar c = chi(s);
  const Scalar c2 = c * c;
  const Scalar inner = (alpha + beta) * (alpha + beta) - 1;
  const Scalar x = sqrt(inner) / gamma;
  const Scalar sn = sin(x);
  const Scalar t = 4 * c2 / (4 * c2 + (c2 - 1) * (c2 - 1) * sn * sn);
  return t / (2 * c) * x / inner *
         ((1 + c2) * (alpha + beta) -
          (1 - c2) * beta * (2 * alpha + beta) / (alpha * alpha - 1) * detail::sinc(2 * x));
}

/// Schroedinger-limit wavenumbers: k = sqrt(2E'), k' = sqrt(2(E'+V0)) and the
/// well scale sqrt(2 V0).
template <typename Scalar>
struct NonrelWavenumbers {
  Scalar outside;
  Scalar inside;
  Scalar well_scale_k;
};

template <typename Scalar>
NonrelWavenumbers<Scalar> nonrel_wavenumbers(const WellScenario<Scalar>& s) {
  using std::sqrt;
  check_scenario(s);
  const Scalar ek = s.kinetic_energy();
  return {sqrt(2 * ek), sqrt(2 * (ek + s.depth)), sqrt(2 * s.depth)};
}

/// Non-relativistic group delay
///
///   tau' = (2a/k) [k^2 (k^2 + k'^2)/k0^4 - sin 2k'a / 2k'a] / [4 k^2 k'^2 / k0^4 + sin^2 k'a]
///
/// evaluated with numerator and denominator multiplied by k0^4 so V0 = 0 stays finite.
template <typename Scalar>
Scalar group_delay_nonrel(const WellScenario<Scalar>& s) {
  using std::sin;
  const auto [k, kp, k0] = nonrel_wavenumbers(s);
  const Scalar k04 = k0 * k0 * k0 * k0;
  const Scalar x = kp * s.width;
  const Scalar sn = sin(x);
  const Scalar num = k * k * (k * k + kp * kp) - k04 * detail::sinc(2 * x);
  const Scalar den = 4 * k * k * kp * kp + k04 * sn * sn;
  return 2 * s.width / k * num / den;
}

/// Non-relativistic delay in the (alpha, beta, gamma) form; k'a = sqrt(2(alpha+beta-1))/gamma.
template <typename Scalar>
Scalar group_delay_nonrel_dimensionless(Scalar alpha, Scalar beta, Scalar gamma) {
  using std::sin;
  using std::sqrt;
  check_scenario(WellScenario<Scalar>{alpha, beta, 1 / gamma});
  const Scalar am1 = alpha - 1;
  const Scalar ab1 = alpha + beta - 1;
  const Scalar x = sqrt(2 * ab1) / gamma;
  const Scalar sn = sin(x);
  return x / sqrt(am1 * ab1) * (am1 * (2 * alpha + beta - 2) - beta * beta * detail::sinc(2 * x)) /
         (4 * am1 * ab1 + beta * beta * sn * sn);
}

/// Bracket of the necessary condition: (1+chi^2)(E+V0) - (1-chi^2) V0 (2E+V0)/k^2.
/// Negative exactly when a negative delay is possible at some width.
template <typename Scalar>
Scalar negativity_margin(Scalar energy, Scalar depth) {
  const WellScenario<Scalar> s{energy, depth, Scalar(0)};
  const auto [k, kp] = wavenumbers(s);
  const Scalar c = (k / kp) * (energy + depth + 1) / (energy + 1);
  const Scalar c2 = c * c;
  return (1 + c2) * (energy + depth) - (1 - c2) * depth * (2 * energy + depth) / (k * k);
}

template <typename Scalar>
bool negativity_condition(Scalar energy, Scalar depth) {
  return negativity_margin(energy, depth) < Scalar(0);
}

enum class ThresholdBranch { RealRadical, Trigonometric };

inline const char* to_string(ThresholdBranch b) {
  return b == ThresholdBranch::RealRadical ? "real-radical" : "trig";
}

/// Depth 2/(3 sqrt 3) separating the two closed forms of E_t.
template <typename Scalar = double>
constexpr Scalar threshold_crossover_depth() {
  return Scalar(2) / (Scalar(3) * std::numbers::sqrt3_v<Scalar>);
}

template <typename Scalar>
ThresholdBranch threshold_branch(Scalar depth) {
  return depth >= threshold_crossover_depth<Scalar>() ? ThresholdBranch::RealRadical
                                                      : ThresholdBranch::Trigonometric;
}

/// Threshold energy E_t: the real root above 1 of E^3 - E - V0 = 0.
///
/// Deep wells use the real Cardano radicals; shallow wells (three real roots)
/// use the trigonometric form 2/sqrt(3) cos(acos(3 sqrt(3) V0 / 2) / 3), which is
/// the complex-conjugate sum written without complex arithmetic.
template <typename Scalar>
Scalar threshold_energy(Scalar depth) {
  using std::acos;
  using std::cbrt;
  using std::cos;
  using std::sqrt;
  if (!(depth > Scalar(0)) || !std::isfinite(static_cast<double>(depth)))
    throw DomainError("threshold energy needs a positive well depth");
  constexpr Scalar sqrt3 = std::numbers::sqrt3_v<Scalar>;
  const Scalar half = depth / 2;
  if (threshold_branch(depth) == ThresholdBranch::RealRadical) {
    const Scalar disc = sqrt(half * half - Scalar(1) / 27);
    const Scalar upper = half + disc;
    // half - disc rewritten as (1/27)/(half + disc) to avoid cancellation.
    const Scalar lower = (Scalar(1) / 27) / upper;
    return cbrt(upper) + cbrt(lower);
  }
  Scalar arg = Scalar(3) * sqrt3 / 2 * depth;
  if (arg > Scalar(1)) arg = Scalar(1);
  return 2 / sqrt3 * cos(acos(arg) / 3);
}

/// Bisection root in E of the negativity-margin equality. Independent of the closed form.
template <typename Scalar>
Scalar threshold_energy_bisection(Scalar depth, Scalar upper = Scalar(10)) {
  using std::nextafter;
  if (!(depth > Scalar(0))) throw DomainError("threshold energy needs a positive well depth");
  Scalar lo = Scalar(1);
  Scalar hi = upper;
  while (negativity_margin(hi, depth) < Scalar(0)) hi *= 2;
  // margin -> -inf as E -> 1+, so (1, hi] brackets the root.
  for (int it = 0; it < 400; ++it) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (negativity_margin(mid, depth) < Scalar(0))
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

/// True when |sin k'a| is below the resonance tolerance and k'a is at least pi/2.
template <typename Scalar>
bool is_resonant(const WellScenario<Scalar>& s, Scalar tol = Scalar(kResonanceTolerance)) {
  using std::abs;
  using std::sin;
  const auto [k, kp] = wavenumbers(s);
  const Scalar x = kp * s.width;
  return abs(sin(x)) < tol && x > std::numbers::pi_v<Scalar> / 2;
}

/// m = round(k'a / pi), never below 1.
template <typename Scalar>
long resonance_order(const WellScenario<Scalar>& s) {
  using std::lround;
  const auto [k, kp] = wavenumbers(s);
  const long m = lround(kp * s.width / std::numbers::pi_v<Scalar>);
  return m < 1 ? 1 : m;
}

template <typename Scalar>
void require_resonance(const WellScenario<Scalar>& s) {
  if (!is_resonant(s))
    throw PreconditionError("scenario is not at a transmission resonance " + describe(s));
}

/// Delay at k'a = m pi: (1/2)(chi + 1/chi)(E + V0) a / k'.
template <typename Scalar>
Scalar resonance_delay(const WellScenario<Scalar>& s) {
  require_resonance(s);
  const auto [k, kp] = wavenumbers(s);
  const Scalar c = chi(s);
  return (c + 1 / c) / 2 * (s.energy + s.depth) * s.width / kp;
}

/// Slope d tau / d a at a resonance. Independent of the resonance order.
template <typename Scalar>
Scalar resonance_slope(Scalar energy, Scalar depth) {
  const auto [k, kp] = wavenumbers(WellScenario<Scalar>{energy, depth, Scalar(0)});
  const Scalar c = chi(WellScenario<Scalar>{energy, depth, Scalar(0)});
  return negativity_margin(energy, depth) / (2 * c * kp);
}

template <typename Scalar>
Scalar resonance_slope(const WellScenario<Scalar>& s) {
  require_resonance(s);
  return resonance_slope(s.energy, s.depth);
}

/// Central finite difference of the relativistic delay in the width.
template <typename Scalar>
Scalar delay_width_derivative(const WellScenario<Scalar>& s, Scalar step = Scalar(1e-6)) {
  auto lo = s;
  auto hi = s;
  lo.width = s.width - step;
  hi.width = s.width + step;
  if (lo.width < Scalar(0)) {
    lo.width = s.width;
    return (group_delay_rel(hi) - group_delay_rel(lo)) / step;
  }
  return (group_delay_rel(hi) - group_delay_rel(lo)) / (2 * step);
}

/// Asymptote as E -> 1+: -sqrt((beta + 2)/((alpha^2 - 1) beta)) cot k'a.
template <typename Scalar>
Scalar low_energy_limit_delay(Scalar alpha, Scalar beta, Scalar k_prime_a) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  return -sqrt((beta + 2) / ((alpha * alpha - 1) * beta)) * cos(k_prime_a) / sin(k_prime_a);
}

/// T in the same limit: 4 chi^2 / (4 chi^2 + sin^2 k'a).
template <typename Scalar>
Scalar low_energy_limit_transmission(Scalar chi_value, Scalar k_prime_a) {
  using std::sin;
  const Scalar sn = sin(k_prime_a);
  return 4 * chi_value * chi_value / (4 * chi_value * chi_value + sn * sn);
}

template <typename Scalar = double>
struct DelayReport {
  Scalar delay_rel{};
  Scalar delay_nonrel{};
  Scalar light_transit{};
  bool negativity_condition{};
  Scalar threshold_energy{};
  Scalar resonance_slope{};  ///< at the nearest resonance m = max(1, round(k'a/pi))
  long resonance_order{};
  Scalar kinetic_energy{};
};

template <typename Scalar>
DelayReport<Scalar> analyze(const WellScenario<Scalar>& s) {
  check_scenario(s);
  DelayReport<Scalar> r;
  r.delay_rel = group_delay_rel(s);
  r.delay_nonrel = group_delay_nonrel(s);
  r.light_transit = s.width;
  r.kinetic_energy = s.kinetic_energy();
  r.resonance_order = resonance_order(s);
  r.resonance_slope = resonance_slope(s.energy, s.depth);
  if (s.depth > Scalar(0)) {
    r.negativity_condition = negativity_condition(s.energy, s.depth);
    r.threshold_energy = threshold_energy(s.depth);
  } else {
    r.negativity_condition = false;
    r.threshold_energy = Scalar(1);
  }
  return r;
}

}  // namespace diracwell
