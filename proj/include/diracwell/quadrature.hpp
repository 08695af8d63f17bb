#pragma once

#include <cstddef>

#include <Eigen/Core>

namespace diracwell {

struct QuadratureRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;

  Eigen::Index size() const { return nodes.size(); }

  template <typename Values>
  auto integrate(const Values& values) const {
    return (weights * values).sum();
  }
};

/// Gauss-Legendre rule of the given order on [-1, 1].
QuadratureRule gauss_legendre(std::size_t order);

/// Composite Gauss-Legendre on [lo, hi]: equal panels of `panel_order` nodes,
/// ceil(total_nodes / panel_order) panels.
QuadratureRule composite_gauss_legendre(double lo, double hi, std::size_t total_nodes,
                                        std::size_t panel_order = 16);

}  // namespace diracwell
