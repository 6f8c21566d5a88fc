#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace pf {

/// Invalid argument: negative momentum, non-positive cutoff, a outside (0,1), ...
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A physical admissibility condition is violated; carries the bound that failed.
class ConstraintError : public std::domain_error {
public:
  ConstraintError(const std::string& what, double bound)
      : std::domain_error(what), bound_(bound) {}

  double bound() const noexcept { return bound_; }

private:
  double bound_;
};

/// Ratio with a vanishing denominator (e.g. a one-photon state with zero field energy).
class DivisionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature failed. Either the subdivision budget ran out (best
/// estimate attached) or the integrand returned a non-finite value (abscissa attached).
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, double best_estimate,
                  std::optional<double> abscissa = std::nullopt)
      : std::runtime_error(what), best_estimate_(best_estimate), abscissa_(abscissa) {}

  double best_estimate() const noexcept { return best_estimate_; }
  std::optional<double> abscissa() const noexcept { return abscissa_; }

private:
  double best_estimate_;
  std::optional<double> abscissa_;
};

/// Root finder was handed a bracket without a sign change.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pf
