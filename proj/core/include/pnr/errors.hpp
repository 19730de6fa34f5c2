#pragma once

#include <stdexcept>
#include <string>

namespace pnr {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (negative mean photon number, non-finite amplitude, invalid priors, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The receiver configuration yields (numerically) no conclusive outcomes, so the
/// conditional error probability is undefined.
class NoConclusiveResults : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scalar minimization did not converge. Carries the best iterate seen.
class OptimizationError : public std::runtime_error {
public:
  OptimizationError(const std::string& what, double best_x, double best_value)
      : std::runtime_error(what), best_x_(best_x), best_value_(best_value) {}

  double best_x() const noexcept { return best_x_; }
  double best_value() const noexcept { return best_value_; }

private:
  double best_x_;
  double best_value_;
};

}  // namespace pnr
