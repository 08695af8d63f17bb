#include "diracwell/sweep.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "diracwell/delay.hpp"
#include "diracwell/errors.hpp"
#include "diracwell/scattering.hpp"
#include "diracwell/wavepacket.hpp"

namespace diracwell {

namespace {

constexpr std::array<std::pair<Mode, const char*>, 7> kModeNames{{
    {Mode::WidthSweep, "width-sweep"},
    {Mode::EnergySweep, "energy-sweep"},
    {Mode::PhaseSweep, "phase-sweep"},
    {Mode::Packet, "packet"},
    {Mode::ThresholdTable, "threshold-table"},
    {Mode::CompareNonrel, "compare-nonrel"},
    {Mode::Validate, "validate"},
}};

constexpr double kPi = std::numbers::pi;

struct ModeDefaults {
  double alpha;
  double beta;
  double gamma;
  double temporal_width;
  double grid_min;
  double grid_max;
  std::size_t points;
};

ModeDefaults defaults_for(Mode mode) {
  switch (mode) {
    case Mode::EnergySweep:
      return {1.01, 0.4, 0.01, 300.0, 1.0 + 1e-4, 1.2, 2000};
    case Mode::Packet:
      return {1.01, 0.4, 0.01, 300.0, 0.2 * kPi, 3.0 * kPi, 25};
    case Mode::ThresholdTable:
      return {1.01, 0.4, 0.01, 300.0, 1e-4, 2.0, 100};
    case Mode::CompareNonrel:
      return {1.01, 0.2, 0.01, 300.0, 0.1, 4.0 * kPi, 1000};
    default:
      return {1.01, 0.4, 0.01, 300.0, 0.05, 4.0 * kPi, 2000};
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

Mode parse_mode(const std::string& name) {
  for (const auto& [mode, text] : kModeNames)
    if (name == text) return mode;
  throw ConfigError("mode: unknown mode '" + name + "'");
}

std::string to_string(Mode mode) {
  for (const auto& [m, text] : kModeNames)
    if (m == mode) return text;
  return "unknown";
}

Eigen::ArrayXd Grid::values() const {
  return Eigen::ArrayXd::LinSpaced(static_cast<Eigen::Index>(points), start, stop);
}

ResolvedConfig resolve(const SweepConfig& c) {
  const ModeDefaults d = defaults_for(c.mode);
  ResolvedConfig r{c.mode,
                   c.alpha.value_or(d.alpha),
                   c.beta.value_or(d.beta),
                   c.gamma.value_or(d.gamma),
                   c.temporal_width.value_or(d.temporal_width),
                   {c.grid_min.value_or(d.grid_min), c.grid_max.value_or(d.grid_max),
                    c.points.value_or(d.points)},
                   c.nodes,
                   c.window_max};

  require(std::isfinite(r.gamma) && r.gamma > 0.0, "gamma: must be positive");
  require(std::isfinite(r.temporal_width) && r.temporal_width > 0.0, "w: must be positive");
  require(r.grid.points >= 2, "points: need at least 2 grid points");
  require(std::isfinite(r.grid.start) && std::isfinite(r.grid.stop) && r.grid.stop > r.grid.start,
          "grid: max must exceed min");
  require(r.nodes > 0, "nodes: must be positive");

  switch (r.mode) {
    case Mode::WidthSweep:
    case Mode::PhaseSweep:
    case Mode::CompareNonrel:
    case Mode::Packet:
      require(r.grid.start >= 0.0, "width-min: k'a grid must be non-negative");
      break;
    case Mode::EnergySweep:
      check_scenario(WellScenario<double>{r.grid.start, r.beta, 1.0 / r.gamma});
      break;
    case Mode::ThresholdTable:
      require(r.grid.start > 0.0, "beta-min: depth grid must be positive");
      break;
    case Mode::Validate:
      break;
  }
  // Out-of-range physics is a domain error, not a configuration error.
  if (r.mode != Mode::EnergySweep && r.mode != Mode::Validate)
    check_scenario(WellScenario<double>{r.alpha, r.beta, 0.0});
  if (r.mode == Mode::Packet && r.window_max)
    require(*r.window_max > r.alpha, "window-max: must exceed the central energy");
  return r;
}

Table run_width_sweep(const ResolvedConfig& c) {
  Table t;
  t.columns = {"k_prime_a", "a", "T", "phi", "tau_rel", "tau_nonrel", "is_resonant"};
  const Eigen::ArrayXd grid = c.grid.values();
  for (const double x : grid) {
    const WellScenario<double> s{c.alpha, c.beta, width_for_k_prime_a(c.alpha, c.beta, x)};
    const auto st = transmission_amplitude(s);
    t.rows.push_back({x, s.width, st.transmission, st.phase, group_delay_rel(s),
                      group_delay_nonrel(s), is_resonant(s)});
  }
  return t;
}

Table run_energy_sweep(const ResolvedConfig& c) {
  Table t;
  t.columns = {"alpha", "k_prime_a", "T", "tau_rel", "asymptotic_tau"};
  const double a = 1.0 / c.gamma;
  for (const double alpha : c.grid.values()) {
    const WellScenario<double> s{alpha, c.beta, a};
    const auto st = transmission_amplitude(s);
    const double x = st.k_prime * a;
    const double asym = c.beta > 0.0 ? low_energy_limit_delay(alpha, c.beta, x)
                                     : std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back({alpha, x, st.transmission, group_delay_rel(s), asym});
  }
  return t;
}

Table run_compare_nonrel(const ResolvedConfig& c) {
  Table t;
  t.columns = {"k_prime_a", "tau_rel", "tau_nonrel", "excess"};
  const WellScenario<double> base{c.alpha, c.beta, 0.0};
  const double kp_rel = wavenumbers(base).inside;
  const double kp_nonrel = nonrel_wavenumbers(base).inside;
  for (const double x : c.grid.values()) {
    const double rel = group_delay_rel(WellScenario<double>{c.alpha, c.beta, x / kp_rel});
    const double nonrel = group_delay_nonrel(WellScenario<double>{c.alpha, c.beta, x / kp_nonrel});
    t.rows.push_back({x, rel, nonrel, rel - nonrel});
  }
  return t;
}

Table run_threshold_table(const ResolvedConfig& c) {
  Table t;
  t.columns = {"beta", "E_t_closed_form", "E_t_bisection", "branch", "abs_diff"};
  for (const double beta : c.grid.values()) {
    const double closed = threshold_energy(beta);
    const double bisect = threshold_energy_bisection(beta);
    t.rows.push_back(
        {beta, closed, bisect, std::string(to_string(threshold_branch(beta))), std::abs(closed - bisect)});
  }
  return t;
}

PacketSweep run_packet(const ResolvedConfig& c, bool keep_traces) {
  PacketSweep out;
  out.summary.columns = {"k_prime_a",  "tau_theory",  "tau_numeric", "transmitted_fraction",
                         "distortion", "validity_ok", "status"};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const double x : c.grid.values()) {
    const double a = width_for_k_prime_a(c.alpha, c.beta, x);
    PacketSpec spec = PacketSpec::with_defaults(c.alpha, c.temporal_width, c.beta, a);
    spec.quadrature_nodes = c.nodes;
    spec.max_quadrature_nodes = std::max<std::size_t>(spec.max_quadrature_nodes, 2 * c.nodes);
    if (c.window_max) spec.energy_max = *c.window_max;
    const double theory = group_delay_rel(WellScenario<double>{c.alpha, c.beta, a});
    const bool valid = validity_check(spec).ok;
    try {
      const PacketResult r = propagate_transmitted(spec);
      out.summary.rows.push_back({x, theory, r.numerical_delay, r.transmitted_fraction,
                                  r.distortion, valid, std::string("ok")});
      out.max_abs_gap = std::max(out.max_abs_gap, std::abs(theory - r.numerical_delay));
      if (keep_traces) {
        Table trace;
        trace.columns = {"t", "intensity"};
        for (Eigen::Index i = 0; i < r.time.size(); ++i)
          trace.rows.push_back({r.time(i), r.intensity(i)});
        out.traces.push_back(std::move(trace));
      }
    } catch (const ConvergenceError&) {
      out.summary.rows.push_back({x, theory, nan, nan, nan, valid, std::string("convergence")});
      ++out.failed_rows;
      if (keep_traces) out.traces.emplace_back();
    } catch (const ClippingError&) {
      out.summary.rows.push_back({x, theory, nan, nan, nan, valid, std::string("clipping")});
      ++out.failed_rows;
      if (keep_traces) out.traces.emplace_back();
    }
  }
  return out;
}

}  // namespace diracwell
