#include "diracwell/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "diracwell/delay.hpp"
#include "diracwell/scattering.hpp"
#include "diracwell/wavepacket.hpp"

namespace diracwell {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

// Times `body`, which fills passed/detail, and applies the runtime budget.
template <typename Body>
CriterionResult timed(int id, std::string name, double budget, Body&& body) {
  CriterionResult r{id, std::move(name), true, {}, 0.0, budget};
  const auto start = Clock::now();
  std::ostringstream detail;
  detail.precision(6);
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    detail << " exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.seconds > budget) {
    r.passed = false;
    detail << " runtime " << r.seconds << " s exceeds " << budget << " s";
  }
  r.detail = detail.str();
  return r;
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

Eigen::ArrayXd linspace(double lo, double hi, Eigen::Index n) {
  return Eigen::ArrayXd::LinSpaced(n, lo, hi);
}

}  // namespace

CriterionResult check_threshold_reproduction() {
  return timed(1, "threshold reproduction", 1.0, [](std::ostream& d) {
    const double et = threshold_energy(0.4);
    bool ok = std::abs(et - 1.16) <= 0.005;
    double worst = 0.0;
    for (const double beta : linspace(1e-4, 2.0, 100))
      worst = std::max(worst, std::abs(threshold_energy(beta) - threshold_energy_bisection(beta)));
    ok = ok && worst <= 1e-9;
    d << "E_t(0.4)=" << et << ", max|closed-bisection|=" << worst;
    return ok;
  });
}

CriterionResult check_threshold_nonrel_limit() {
  return timed(2, "non-relativistic threshold limit", 1.0, [](std::ostream& d) {
    double worst_ratio = 0.0;
    const Eigen::ArrayXd exps = linspace(-6.0, -3.0, 61);
    for (const double e : exps) {
      const double beta = std::pow(10.0, e);
      const double gap = std::abs(threshold_energy(beta) - (1.0 + beta / 2.0));
      worst_ratio = std::max(worst_ratio, gap / (beta * beta));
    }
    d << "max |E_t-(1+beta/2)|/beta^2=" << worst_ratio << " (limit 10)";
    return worst_ratio <= 10.0;
  });
}

CriterionResult check_width_structure() {
  return timed(3, "width dependence structure", 5.0, [](std::ostream& d) {
    const double alpha = 1.01, beta = 0.4;
    const double kp = wavenumbers(WellScenario<double>{alpha, beta, 0.0}).inside;
    bool ok = true;
    double worst_t = 0.0, worst_res = 0.0, worst_slope = 0.0;
    for (int m = 1; m <= 4; ++m) {
      const WellScenario<double> s{alpha, beta, m * kPi / kp};
      const double t = transmission_probability(s);
      worst_t = std::max(worst_t, std::abs(t - 1.0));
      const double tau = group_delay_rel(s);
      const double res = resonance_delay(s);
      worst_res = std::max(worst_res, rel_err(tau, res));
      ok = ok && tau > s.width;
      const double slope = resonance_slope(s);
      const double fd = delay_width_derivative(s, 1e-6);
      worst_slope = std::max(worst_slope, rel_err(slope, fd));
      ok = ok && slope < 0.0;
    }
    ok = ok && worst_t <= 1e-10 && worst_res <= 1e-10 && worst_slope <= 1e-5;

    // At least one negative delay in every period of the 2000-point grid.
    const Eigen::ArrayXd grid = linspace(0.05, 4.0 * kPi, 2000);
    int periods_with_negative = 0;
    for (int m = 0; m < 4; ++m) {
      bool found = false;
      for (const double x : grid)
        if (x >= m * kPi && x < (m + 1) * kPi && group_delay_rel(WellScenario<double>{alpha, beta, x / kp}) < 0.0)
          found = true;
      periods_with_negative += found;
    }
    ok = ok && periods_with_negative == 4;
    d << "max|T-1|=" << worst_t << ", max rel(tau,res)=" << worst_res
      << ", max rel(slope,fd)=" << worst_slope << ", periods with tau<0: " << periods_with_negative
      << "/4";
    return ok;
  });
}

CriterionResult check_phase_staircase() {
  return timed(4, "phase staircase", 5.0, [](std::ostream& d) {
    const double alpha = 1.01, beta = 0.4;
    const WellScenario<double> base{alpha, beta, 0.0};
    const double kp = wavenumbers(base).inside;
    const double c = chi(base);
    const double q = 0.5 * (c + 1.0 / c);
    bool ok = true;
    double worst_res = 0.0;
    for (int m = 1; m <= 4; ++m) {
      const double phi = phase_shift(WellScenario<double>{alpha, beta, m * kPi / kp});
      worst_res = std::max(worst_res, std::abs(phi - m * kPi));
    }
    ok = worst_res <= 1e-10;

    // k'a spacing 1e-4, i.e. width spacing 1e-4/k'.
    const double delta = 1e-4 / kp;
    const double bound = 2.0 * kp * delta * q;
    const double a_lo = 0.05 / kp, a_hi = 4.0 * kPi / kp;
    const auto n = static_cast<long>(std::floor((a_hi - a_lo) / delta)) + 1;
    double prev = phase_shift(WellScenario<double>{alpha, beta, a_lo});
    double max_step = 0.0;
    bool monotone = true;
    for (long i = 1; i < n; ++i) {
      const double phi = phase_shift(WellScenario<double>{alpha, beta, a_lo + delta * static_cast<double>(i)});
      const double step = phi - prev;
      monotone = monotone && step >= 0.0;
      max_step = std::max(max_step, std::abs(step));
      prev = phi;
    }
    ok = ok && monotone && max_step <= bound;
    d << "max|phi(m pi/k')-m pi|=" << worst_res << ", monotone=" << (monotone ? "yes" : "no")
      << ", max step " << max_step << " <= " << bound;
    return ok;
  });
}

CriterionResult check_derivative_oracle() {
  return timed(5, "derivative oracle", 5.0, [](std::ostream& d) {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double h = 1e-7;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double alpha = 5.0 - 4.0 * u(rng);  // (1, 5]
      const double beta = 2.0 - 2.0 * u(rng);   // (0, 2]
      const double x = 4.0 * kPi * (1.0 - u(rng));
      const double a = width_for_k_prime_a(alpha, beta, x);
      const double tau = group_delay_rel(WellScenario<double>{alpha, beta, a});
      const double fd = (phase_shift(WellScenario<double>{alpha + h, beta, a}) -
                         phase_shift(WellScenario<double>{alpha - h, beta, a})) /
                        (2.0 * h);
      worst = std::max(worst, std::abs(tau - fd) / std::max(std::abs(tau), 1.0));
    }
    d << "max |tau - dphi/dE| / max(|tau|,1) = " << worst << " (limit 1e-6)";
    return worst <= 1e-6;
  });
}

CriterionResult check_low_energy_asymptotics() {
  return timed(6, "low-energy asymptotics", 1.0, [](std::ostream& d) {
    const double beta = 0.4, alpha = 1.0 + 1e-6;
    const double kp = wavenumbers(WellScenario<double>{alpha, beta, 0.0}).inside;
    // The gamma = 0.01 well plus a spread of k'a values at the same energy.
    std::vector<double> kpas{kp * 100.0, kPi / 4.0, 1.0, 2.0, 2.5, 4.0, 7.0};
    double worst_tau = 0.0, worst_t = 0.0;
    int checked = 0;
    for (const double x : kpas) {
      if (std::abs(std::cos(x) / std::sin(x)) <= 0.1) continue;
      const WellScenario<double> s{alpha, beta, x / kp};
      const auto st = transmission_amplitude(s);
      worst_tau = std::max(worst_tau, rel_err(group_delay_rel(s), low_energy_limit_delay(alpha, beta, x)));
      worst_t = std::max(worst_t, rel_err(st.transmission, low_energy_limit_transmission(st.chi, x)));
      ++checked;
    }
    d << checked << " widths, max rel(tau,limit)=" << worst_tau << ", max rel(T,limit)=" << worst_t;
    return checked > 0 && worst_tau <= 1e-3 && worst_t <= 1e-4;
  });
}

std::vector<CriterionResult> check_packet_campaign() {
  const double e0 = 1.01, v0 = 0.4, w = 300.0;
  const double kp = wavenumbers(WellScenario<double>{e0, v0, 0.0}).inside;
  const Eigen::ArrayXd grid = linspace(0.2 * kPi, 3.0 * kPi, 25);

  struct Row {
    double kpa, theory, numeric, doubling, window, r2, t0;
    bool valid;
  };
  std::vector<Row> rows;
  double length = 0.0;
  std::string failure;

  CriterionResult agreement = timed(7, "packet vs stationary phase", 300.0, [&](std::ostream& d) {
    bool ok = true;
    double worst_gap_ratio = 0.0, worst_doubling = 0.0, worst_window = 0.0;
    int over = 0;
    for (const double x : grid) {
      const double a = x / kp;
      const PacketSpec spec = PacketSpec::with_defaults(e0, w, v0, a);
      const PacketResult r = propagate_transmitted(spec);
      PacketSpec wide = spec;
      wide.energy_max = 2.0;
      const PacketResult rw = propagate_transmitted(wide);
      const WellScenario<double> s{e0, v0, a};
      Row row{x,
              group_delay_rel(s),
              r.numerical_delay,
              r.quadrature_nodes == spec.quadrature_nodes ? r.convergence_shift : 1.0,
              std::abs(rw.numerical_delay - r.numerical_delay),
              r.distortion,
              transmission_probability(s),
              r.validity_ok};
      length = r.characteristic_length;
      const double tol = std::max(0.05 * std::abs(row.theory), 2.0);
      const double gap = std::abs(row.numeric - row.theory);
      if (gap > tol) {
        ++over;
        char buf[128];
        std::snprintf(buf, sizeof buf, " [k'a=%.4f theory=%.4f numeric=%.4f tol=%.3f]", x,
                      row.theory, row.numeric, tol);
        failure += buf;
      }
      worst_gap_ratio = std::max(worst_gap_ratio, gap / tol);
      worst_doubling = std::max(worst_doubling, row.doubling);
      worst_window = std::max(worst_window, row.window);
      rows.push_back(row);
    }
    ok = over == 0 && worst_doubling < 0.01 && worst_window < 0.01;
    d << grid.size() << " widths, max gap/tol=" << worst_gap_ratio << " (" << over
      << " over), max doubling shift=" << worst_doubling << ", max window shift=" << worst_window
      << failure;
    return ok;
  });

  CriterionResult validity = timed(8, "distortionless restriction", 300.0, [&](std::ostream& d) {
    if (rows.size() != static_cast<std::size_t>(grid.size())) {
      d << "packet campaign incomplete";
      return false;
    }
    const bool length_ok = std::abs(length - 211.5) <= 0.01 * 211.5;
    bool all_valid = true;
    double worst_r2 = 1.0;
    int fitted = 0;
    for (const Row& r : rows) {
      all_valid = all_valid && r.valid;
      if (r.t0 > 0.5) {
        worst_r2 = std::min(worst_r2, r.r2);
        ++fitted;
      }
    }
    d << "L=" << length << ", validity_ok at all widths=" << (all_valid ? "yes" : "no") << ", min R^2="
      << worst_r2 << " over " << fitted << " widths with T>0.5";
    return length_ok && all_valid && worst_r2 >= 0.999;
  });
  return {agreement, validity};
}

CriterionResult check_nonrel_comparison() {
  return timed(9, "relativistic vs non-relativistic", 5.0, [](std::ostream& d) {
    const Eigen::ArrayXd grid = linspace(0.1, 4.0 * kPi, 1000);
    auto delays = [&](double alpha, double beta, Eigen::ArrayXd& rel, Eigen::ArrayXd& nonrel) {
      const WellScenario<double> base{alpha, beta, 0.0};
      const double kp_rel = wavenumbers(base).inside;
      const double kp_nonrel = nonrel_wavenumbers(base).inside;
      rel.resize(grid.size());
      nonrel.resize(grid.size());
      for (Eigen::Index i = 0; i < grid.size(); ++i) {
        rel(i) = group_delay_rel(WellScenario<double>{alpha, beta, grid(i) / kp_rel});
        nonrel(i) = group_delay_nonrel(WellScenario<double>{alpha, beta, grid(i) / kp_nonrel});
      }
    };

    Eigen::ArrayXd rel, nonrel;
    delays(1.01, 0.2, rel, nonrel);
    const Eigen::ArrayXd excess = rel - nonrel;
    const long below = (excess < 0.0).count();
    Eigen::Index at = 0;
    const double min_excess = excess.minCoeff(&at);

    delays(1.0 + 1e-5, 1e-4, rel, nonrel);
    const double gap = (rel - nonrel).abs().maxCoeff() / rel.abs().maxCoeff();
    const double pointwise = ((rel - nonrel).abs() / rel.abs()).maxCoeff();

    d << "alpha=1.01 beta=0.2: tau_rel<tau_nonrel at " << below << "/" << grid.size()
      << " points (min excess " << min_excess << " at k'a=" << grid(at) << "); low-energy gap "
      << gap << " (pointwise max " << pointwise << ")";
    return below == 0 && gap < 1e-3;
  });
}

std::vector<CriterionResult> run_validation_suite() {
  std::vector<CriterionResult> out;
  out.push_back(check_threshold_reproduction());
  out.push_back(check_threshold_nonrel_limit());
  out.push_back(check_width_structure());
  out.push_back(check_phase_staircase());
  out.push_back(check_derivative_oracle());
  out.push_back(check_low_energy_asymptotics());
  for (auto& r : check_packet_campaign()) out.push_back(std::move(r));
  out.push_back(check_nonrel_comparison());
  return out;
}

void print_results(const std::vector<CriterionResult>& results, std::ostream& os) {
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " ("
       << secs << " s)\n";
  }
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace diracwell
