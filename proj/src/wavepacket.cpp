#include "diracwell/wavepacket.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "diracwell/errors.hpp"
#include "diracwell/scattering.hpp"

namespace diracwell {

namespace {

constexpr double kEnergyFloor = 1.0 + 1e-12;
constexpr double kDelayConvergence = 0.01;

std::string spec_string(const PacketSpec& s) {
  std::ostringstream os;
  os.precision(17);
  os << "(E0=" << s.central_energy << ", w=" << s.temporal_width << ", V0=" << s.depth
     << ", a=" << s.width << ")";
  return os.str();
}

Eigen::ArrayXcd transmission_amplitudes(const PacketSpec& spec, const Eigen::ArrayXd& energies) {
  Eigen::ArrayXcd f(energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i)
    f(i) = transmission_amplitude(WellScenario<double>{energies(i), spec.depth, spec.width}).amplitude;
  return f;
}

Eigen::ArrayXd spectral_weights(const PacketSpec& spec, const Eigen::ArrayXd& energies) {
  const double w = spec.temporal_width;
  return w * (-0.5 * w * w * (energies - spec.central_energy).square()).exp();
}

}  // namespace

Eigen::Index TimeGrid::size() const {
  if (!(step > 0.0) || !(stop >= start)) return 0;
  return static_cast<Eigen::Index>(std::floor((stop - start) / step + 1e-9)) + 1;
}

Eigen::ArrayXd TimeGrid::values() const {
  const Eigen::Index n = size();
  Eigen::ArrayXd t(n);
  for (Eigen::Index i = 0; i < n; ++i) t(i) = at(i);
  return t;
}

PacketSpec PacketSpec::with_defaults(double central_energy, double temporal_width, double depth,
                                     double width) {
  PacketSpec s;
  s.central_energy = central_energy;
  s.temporal_width = temporal_width;
  s.depth = depth;
  s.width = width;
  s.energy_min = kEnergyFloor;
  s.energy_max = central_energy + 6.0 / temporal_width;
  s.time = {-6.0 * temporal_width, 6.0 * temporal_width + width + 50.0, temporal_width / 200.0};
  return s;
}

void check_packet_spec(const PacketSpec& s) {
  check_scenario(WellScenario<double>{s.central_energy, s.depth, s.width});
  if (!(s.temporal_width > 0.0) || !std::isfinite(s.temporal_width))
    throw ConfigError("temporal width must be positive " + spec_string(s));
  if (!(s.energy_min >= 1.0))
    throw ConfigError("energy window must start at or above the rest energy " + spec_string(s));
  if (!(s.energy_max > s.central_energy))
    throw ConfigError("energy window must extend above the central energy " + spec_string(s));
  const double sigma = 1.0 / s.temporal_width;
  if (s.energy_min > std::max(kEnergyFloor, s.central_energy - 6.0 * sigma) ||
      s.energy_max < s.central_energy + 6.0 * sigma * (1.0 - 1e-12))
    throw ConfigError("energy window must cover six spectral widths around E0 " + spec_string(s));
  if (s.quadrature_nodes == 0 || s.max_quadrature_nodes < s.quadrature_nodes)
    throw ConfigError("quadrature node counts are inconsistent " + spec_string(s));
  if (s.time.size() < 3) throw ConfigError("time grid needs at least three samples");
}

double spectral_amplitude(double energy, const PacketSpec& spec) {
  const double w = spec.temporal_width;
  const double d = energy - spec.central_energy;
  return w * std::exp(-0.5 * w * w * d * d);
}

double spinor_norm(double central_energy) {
  const double k0 = std::sqrt((central_energy - 1.0) * (central_energy + 1.0));
  const double lower = k0 / (central_energy + 1.0);
  return 1.0 + lower * lower;
}

double incident_intensity(double t, const PacketSpec& spec) {
  const double w = spec.temporal_width;
  return spinor_norm(spec.central_energy) * std::exp(-t * t / (w * w));
}

Eigen::ArrayXcd transmitted_envelope(const PacketSpec& spec, const QuadratureRule& rule) {
  using cd = std::complex<double>;
  const Eigen::ArrayXd detuning = rule.nodes - spec.central_energy;
  const Eigen::ArrayXcd g = transmission_amplitudes(spec, rule.nodes) *
                            (spectral_weights(spec, rule.nodes) * rule.weights).cast<cd>() /
                            std::sqrt(2.0 * std::numbers::pi);

  const Eigen::Index nt = spec.time.size();
  // exp(-i dE t_j) advanced by a per-node phasor recurrence along the uniform grid.
  Eigen::ArrayXcd phasor(detuning.size());
  Eigen::ArrayXcd advance(detuning.size());
  for (Eigen::Index i = 0; i < detuning.size(); ++i) {
    phasor(i) = std::polar(1.0, -detuning(i) * spec.time.start);
    advance(i) = std::polar(1.0, -detuning(i) * spec.time.step);
  }
  Eigen::ArrayXcd psi(nt);
  for (Eigen::Index j = 0; j < nt; ++j) {
    psi(j) = (g * phasor).sum();
    phasor *= advance;
  }
  return psi;
}

Eigen::ArrayXd transmitted_intensity(const PacketSpec& spec, std::size_t nodes) {
  const QuadratureRule rule =
      composite_gauss_legendre(spec.energy_min, spec.energy_max, nodes, spec.panel_order);
  return spinor_norm(spec.central_energy) * transmitted_envelope(spec, rule).abs2();
}

double trapezoid(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  const Eigen::Index n = x.size();
  if (n < 2) return 0.0;
  const Eigen::ArrayXd dx = x.tail(n - 1) - x.head(n - 1);
  return 0.5 * (dx * (y.tail(n - 1) + y.head(n - 1))).sum();
}

double numerical_group_delay(const Eigen::ArrayXd& time, const Eigen::ArrayXd& intensity) {
  if (time.size() != intensity.size() || time.size() < 3)
    throw ConfigError("intensity trace needs at least three matching samples");
  Eigen::Index peak = 0;
  intensity.maxCoeff(&peak);
  if (peak == 0 || peak == intensity.size() - 1) {
    std::ostringstream os;
    os << "intensity maximum at time-grid endpoint t=" << time(peak);
    throw ClippingError(os.str());
  }
  const double h = time(peak + 1) - time(peak);
  const double ym = intensity(peak - 1);
  const double y0 = intensity(peak);
  const double yp = intensity(peak + 1);
  double shift = 0.0;
  if (ym > 0.0 && y0 > 0.0 && yp > 0.0) {
    const double lm = std::log(ym), l0 = std::log(y0), lp = std::log(yp);
    const double curv = lm - 2.0 * l0 + lp;
    if (curv < 0.0) shift = 0.5 * (lm - lp) / curv;
  } else {
    const double curv = ym - 2.0 * y0 + yp;
    if (curv < 0.0) shift = 0.5 * (ym - yp) / curv;
  }
  return time(peak) + shift * h;
}

double numerical_group_delay(const PacketResult& result) {
  return numerical_group_delay(result.time, result.intensity);
}

Validity validity_check(const PacketSpec& spec) {
  // dE/dk' = k'/(E + V0) inside the well.
  const auto [k, kp] = wavenumbers(WellScenario<double>{spec.central_energy, spec.depth, spec.width});
  const double length = spec.temporal_width * kp / (spec.central_energy + spec.depth);
  return {length, spec.width < 2.0 * std::numbers::pi * length / 10.0};
}

double gaussian_fit_r2(const Eigen::ArrayXd& time, const Eigen::ArrayXd& intensity) {
  const Eigen::Index n = time.size();
  if (n < 4) throw ConfigError("Gaussian fit needs at least four samples");
  const double total = intensity.sum();
  if (!(total > 0.0)) return 0.0;

  // Moment estimates, then damped Gauss-Newton on (amplitude, center, sigma).
  Eigen::Vector3d p;
  p(0) = intensity.maxCoeff();
  p(1) = (time * intensity).sum() / total;
  p(2) = std::sqrt(std::max(((time - p(1)).square() * intensity).sum() / total, 1e-300));

  auto residual = [&](const Eigen::Vector3d& q) {
    return (intensity - q(0) * (-(time - q(1)).square() / (2.0 * q(2) * q(2))).exp()).matrix().eval();
  };
  double cost = residual(p).squaredNorm();
  double lambda = 1e-3;
  bool settled = false;
  for (int it = 0; it < 200 && !settled; ++it) {
    const Eigen::ArrayXd z = (time - p(1)) / p(2);
    const Eigen::ArrayXd g = (-0.5 * z.square()).exp();
    Eigen::MatrixXd jac(n, 3);
    jac.col(0) = g.matrix();
    jac.col(1) = (p(0) * g * z / p(2)).matrix();
    jac.col(2) = (p(0) * g * z.square() / p(2)).matrix();
    const Eigen::VectorXd r = residual(p);
    Eigen::Matrix3d normal = jac.transpose() * jac;
    const Eigen::Vector3d rhs = jac.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 20 && !improved; ++tries) {
      Eigen::Matrix3d damped = normal;
      damped.diagonal() *= 1.0 + lambda;
      const Eigen::Vector3d candidate = p + damped.ldlt().solve(rhs);
      const double c = residual(candidate).squaredNorm();
      if (std::isfinite(c) && c < cost && candidate(2) > 0.0) {
        const double rel = (cost - c) / std::max(cost, 1e-300);
        p = candidate;
        cost = c;
        lambda = std::max(lambda / 10.0, 1e-12);
        improved = true;
        settled = rel < 1e-14;
      } else {
        lambda *= 10.0;
      }
    }
    settled = settled || !improved;
  }
  const double mean = intensity.mean();
  const double ss_tot = (intensity - mean).square().sum();
  if (!(ss_tot > 0.0)) return 1.0;
  return 1.0 - cost / ss_tot;
}

PacketResult propagate_transmitted(const PacketSpec& spec) {
  check_packet_spec(spec);
  const Eigen::ArrayXd time = spec.time.values();

  std::size_t nodes = spec.quadrature_nodes;
  Eigen::ArrayXd coarse = transmitted_intensity(spec, nodes);
  double coarse_delay = numerical_group_delay(time, coarse);
  double shift = 0.0;
  for (;;) {
    if (2 * nodes > spec.max_quadrature_nodes) {
      std::ostringstream os;
      os << "quadrature did not converge below " << spec.max_quadrature_nodes << " nodes "
         << spec_string(spec);
      throw ConvergenceError(os.str());
    }
    Eigen::ArrayXd fine = transmitted_intensity(spec, 2 * nodes);
    const double fine_delay = numerical_group_delay(time, fine);
    shift = std::abs(fine_delay - coarse_delay);
    if (shift < kDelayConvergence) break;
    nodes *= 2;
    coarse = std::move(fine);
    coarse_delay = fine_delay;
  }

  PacketResult out;
  out.time = time;
  out.intensity = std::move(coarse);
  out.numerical_delay = coarse_delay;
  out.quadrature_nodes = nodes;
  out.convergence_shift = shift;

  // Parseval: the time-integrated intensities equal the energy integrals of |F A|^2 and A^2.
  const QuadratureRule rule =
      composite_gauss_legendre(spec.energy_min, spec.energy_max, nodes, spec.panel_order);
  const Eigen::ArrayXd a2 = spectral_weights(spec, rule.nodes).square();
  const Eigen::ArrayXd t2 = transmission_amplitudes(spec, rule.nodes).abs2();
  out.transmitted_fraction = rule.integrate(t2 * a2) / rule.integrate(a2);

  out.distortion = gaussian_fit_r2(out.time, out.intensity);
  const Validity v = validity_check(spec);
  out.characteristic_length = v.characteristic_length;
  out.validity_ok = v.ok;
  return out;
}

}  // namespace diracwell
