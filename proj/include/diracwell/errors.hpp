#pragma once

#include <stdexcept>
#include <string>

namespace diracwell {

/// Input outside the physical model (E <= mc^2, negative depth or width).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation called outside its stated domain, e.g. a resonance formula off resonance.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bad user configuration (grids, packet settings, CLI/config input).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature doubling test did not settle before the node ceiling.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Intensity maximum sits on the first or last sample of the time grid.
class ClippingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diracwell
