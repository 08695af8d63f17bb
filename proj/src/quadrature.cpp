#include "diracwell/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "diracwell/errors.hpp"

namespace diracwell {

QuadratureRule gauss_legendre(std::size_t order) {
  if (order == 0) throw ConfigError("Gauss-Legendre order must be positive");
  const auto n = static_cast<Eigen::Index>(order);
  QuadratureRule rule{Eigen::ArrayXd(n), Eigen::ArrayXd(n)};

  // Newton iteration on P_n, using the symmetry of the roots.
  const Eigen::Index half = (n + 1) / 2;
  for (Eigen::Index i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (Eigen::Index j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (Eigen::Index j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(n - 1 - i) = w;
  }
  if (n % 2 == 1) rule.nodes(n / 2) = 0.0;
  return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, std::size_t total_nodes,
                                        std::size_t panel_order) {
  if (!(hi > lo)) throw ConfigError("quadrature interval must have hi > lo");
  if (total_nodes == 0 || panel_order == 0) throw ConfigError("quadrature needs at least one node");
  const std::size_t panels = (total_nodes + panel_order - 1) / panel_order;
  const QuadratureRule base = gauss_legendre(panel_order);
  const auto m = base.size();
  const auto total = static_cast<Eigen::Index>(panels) * m;

  QuadratureRule rule{Eigen::ArrayXd(total), Eigen::ArrayXd(total)};
  const double h = (hi - lo) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = lo + h * static_cast<double>(p);
    const double b = (p + 1 == panels) ? hi : a + h;
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    const auto off = static_cast<Eigen::Index>(p) * m;
    rule.nodes.segment(off, m) = mid + rad * base.nodes;
    rule.weights.segment(off, m) = rad * base.weights;
  }
  return rule;
}

}  // namespace diracwell
