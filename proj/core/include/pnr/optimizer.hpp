#pragma once

// Displacement optimization for the PNR receiver.

#include <cstdint>
#include <functional>

#include "pnr/quantum_core.hpp"
#include "pnr/receiver.hpp"

namespace pnr {

struct OptResult {
  Amplitude beta_opt{0.0};
  Rates rates;
  /// Intermediate bound evaluated at the receiver's own inconclusive rate.
  double matched_bound = 0.0;
  Amplitude alpha{0.0};
  std::uint32_t m = 0;
};

struct MinimizeOptions {
  double abs_tolerance = 1e-9;
  int max_iterations = 500;
};

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Brent's derivative-free minimization (golden section with parabolic
/// interpolation) of f on [lo, hi]. Locates a local minimum; the caller is
/// responsible for bracketing the basin of interest.
ScalarMinimum brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                             const MinimizeOptions& options = {});

/// Upper end of the displacement search interval: alpha + max(3, 5m).
double displacement_search_limit(Amplitude alpha, std::uint32_t m);

/// Number of coarse grid points used to seed the minimizer.
inline constexpr int kSeedGridPoints = 200;

/// Minimizes error_rate(alpha, {beta, m}) over beta in [0, displacement_search_limit].
/// A coarse grid scan picks the basin, Brent's method refines it. Throws
/// DomainError for alpha <= 0 and OptimizationError if refinement fails.
OptResult optimize_displacement(Amplitude alpha, std::uint32_t m);

/// Inconclusive rate at the optimized displacement.
double pinc_at_optimum(Amplitude alpha, std::uint32_t m);

}  // namespace pnr
