#pragma once

// Gaussian temporal wave packet sent through the well, synthesized in the
// energy domain:
//
//   Psi_tr(a, t) = (2 pi)^{-1/2} Int F(E) A(E) psi(E0) exp(-i E t) dE,
//   A(E) = w exp(-w^2 (E - E0)^2 / 2).
//
// The spinor psi(E0) is held at the central energy, so the intensity is
// |scalar integral|^2 times the constant spinor norm 1 + (k0/(E0 + 1))^2.

#include <cstddef>

#include <Eigen/Core>

#include "diracwell/quadrature.hpp"

namespace diracwell {

struct TimeGrid {
  double start{};
  double stop{};
  double step{};

  Eigen::Index size() const;
  double at(Eigen::Index i) const { return start + step * static_cast<double>(i); }
  Eigen::ArrayXd values() const;
};

struct PacketSpec {
  double central_energy{};  ///< E0
  double temporal_width{};  ///< w
  double depth{};           ///< V0
  double width{};           ///< a
  double energy_min{};
  double energy_max{};
  std::size_t quadrature_nodes{4096};
  std::size_t max_quadrature_nodes{65536};
  std::size_t panel_order{16};
  TimeGrid time;

  /// Window [1 + 1e-12, E0 + 6/w], 4096 nodes, t in [-6w, 6w + a + 50] with step w/200.
  static PacketSpec with_defaults(double central_energy, double temporal_width, double depth,
                                  double width);
};

/// Throws ConfigError (packet settings) or DomainError (physics inputs).
void check_packet_spec(const PacketSpec& spec);

struct PacketResult {
  Eigen::ArrayXd time;
  Eigen::ArrayXd intensity;
  double numerical_delay{};
  double transmitted_fraction{};
  double distortion{};  ///< R^2 of a Gaussian fit to the intensity trace
  double characteristic_length{};
  bool validity_ok{};
  std::size_t quadrature_nodes{};
  double convergence_shift{};  ///< |tau(n) - tau(2n)| from the doubling test
};

struct Validity {
  double characteristic_length;  ///< L = w k' / (E0 + V0)
  bool ok;                       ///< a < 2 pi L / 10
};

/// Spectral weight A(E).
double spectral_amplitude(double energy, const PacketSpec& spec);

/// |psi(E0)|^2 = 1 + (k0 / (E0 + 1))^2.
double spinor_norm(double central_energy);

/// Analytic incident intensity at z = 0: spinor norm times exp(-t^2 / w^2).
double incident_intensity(double t, const PacketSpec& spec);

/// Transmitted scalar amplitude (without the spinor) on the spec's time grid, with the
/// carrier exp(-i E0 t) removed. Uses the supplied energy rule.
Eigen::ArrayXcd transmitted_envelope(const PacketSpec& spec, const QuadratureRule& rule);

/// Intensity trace |Psi_tr(a, t)|^2 on the time grid for a given node count.
Eigen::ArrayXd transmitted_intensity(const PacketSpec& spec, std::size_t nodes);

/// Full simulation including the quadrature doubling test.
PacketResult propagate_transmitted(const PacketSpec& spec);

/// Peak time of a sampled trace: grid argmax refined by a parabola through the
/// log-intensity of the three samples around it.
double numerical_group_delay(const Eigen::ArrayXd& time, const Eigen::ArrayXd& intensity);
double numerical_group_delay(const PacketResult& result);

Validity validity_check(const PacketSpec& spec);

/// Coefficient of determination of a least-squares Gaussian fit to the trace.
double gaussian_fit_r2(const Eigen::ArrayXd& time, const Eigen::ArrayXd& intensity);

/// Trapezoid rule on a sampled trace.
double trapezoid(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

}  // namespace diracwell
