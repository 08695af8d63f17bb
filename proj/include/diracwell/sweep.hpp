#pragma once

// Parameter sweeps behind the command-line front end. Width grids are given in
// k'a and converted to a internally; all outputs are written in grid order.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "diracwell/table.hpp"

namespace diracwell {

enum class Mode {
  WidthSweep,
  EnergySweep,
  PhaseSweep,
  Packet,
  ThresholdTable,
  CompareNonrel,
  Validate,
};

Mode parse_mode(const std::string& name);
std::string to_string(Mode mode);

struct Grid {
  double start{};
  double stop{};
  std::size_t points{};

  /// Equally spaced, endpoints included.
  Eigen::ArrayXd values() const;
};

struct SweepConfig {
  Mode mode{Mode::WidthSweep};
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> temporal_width;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<std::size_t> points;
  std::size_t nodes{4096};
  std::optional<double> window_max;
  std::string output_path;
  std::string trace_dir;
  bool emit_plot_script{false};
};

/// Fully specified configuration after mode defaults are applied.
struct ResolvedConfig {
  Mode mode;
  double alpha;
  double beta;
  double gamma;
  double temporal_width;
  Grid grid;
  std::size_t nodes;
  std::optional<double> window_max;
};

/// Fills unset fields with per-mode defaults and checks them. Throws ConfigError for
/// malformed grids and options, DomainError for unphysical energies or depths.
ResolvedConfig resolve(const SweepConfig& config);

/// Columns k_prime_a, a, T, phi, tau_rel, tau_nonrel, is_resonant.
Table run_width_sweep(const ResolvedConfig& config);

/// Columns alpha, k_prime_a, T, tau_rel, asymptotic_tau at fixed beta and gamma.
Table run_energy_sweep(const ResolvedConfig& config);

/// Columns k_prime_a, tau_rel, tau_nonrel, excess; each theory at its own k'.
Table run_compare_nonrel(const ResolvedConfig& config);

/// Columns beta, E_t_closed_form, E_t_bisection, branch, abs_diff.
Table run_threshold_table(const ResolvedConfig& config);

struct PacketSweep {
  Table summary;              ///< k_prime_a, tau_theory, tau_numeric, transmitted_fraction,
                              ///< distortion, validity_ok, status
  std::vector<Table> traces;  ///< (t, intensity) per row; empty table for failed rows
  double max_abs_gap{};       ///< max |tau_theory - tau_numeric| over successful rows
  std::size_t failed_rows{};
};

PacketSweep run_packet(const ResolvedConfig& config, bool keep_traces);

}  // namespace diracwell
