#include "pnr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pnr/bounds.hpp"
#include "pnr/errors.hpp"

namespace pnr {

namespace {

constexpr double kRelativeEps = 2.0 * std::numeric_limits<double>::epsilon();

// Objective for the displacement search. Displacements without conclusive
// outcomes are never optimal.
double error_or_inf(Amplitude alpha, std::uint32_t m, double beta) {
  try {
    return error_rate(alpha, ReceiverParams{Amplitude(beta), m});
  } catch (const NoConclusiveResults&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

ScalarMinimum brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                             const MinimizeOptions& options) {
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  double a = std::min(lo, hi);
  double b = std::max(lo, hi);
  double x = a + golden * (b - a);
  double w = x;
  double v = x;
  double fx = f(x);
  double fw = fx;
  double fv = fx;
  double d = 0.0;
  double e = 0.0;

  ScalarMinimum result;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const double mid = 0.5 * (a + b);
    // Final bracket width is at most abs_tolerance (plus a few ulps of x).
    const double tol1 = kRelativeEps * std::abs(x) + 0.25 * options.abs_tolerance;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) {
      result.converged = true;
      result.iterations = iter;
      break;
    }

    bool golden_step = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) {
        p = -p;
      } else {
        q = -q;
      }
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) {
          d = x < mid ? tol1 : -tol1;
        }
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x < mid ? b : a) - x;
      d = golden * e;
    }

    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      (u < x ? b : a) = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      (u < x ? a : b) = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
    result.iterations = iter + 1;
  }
  result.x = x;
  result.value = fx;
  return result;
}

double displacement_search_limit(Amplitude alpha, std::uint32_t m) {
  return std::abs(alpha.value()) + std::max(3.0, 5.0 * static_cast<double>(m));
}

OptResult optimize_displacement(Amplitude alpha, std::uint32_t m) {
  if (!(alpha.value() > 0.0)) {
    throw DomainError("optimize_displacement: alpha must be > 0, got " + std::to_string(alpha.value()));
  }
  const double upper = displacement_search_limit(alpha, m);
  const auto objective = [&](double beta) { return error_or_inf(alpha, m, beta); };

  // Coarse scan; strict '<' keeps the smallest beta among ties.
  const double spacing = upper / (kSeedGridPoints - 1);
  int best_index = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSeedGridPoints; ++i) {
    const double value = objective(spacing * i);
    if (value < best_value) {
      best_value = value;
      best_index = i;
    }
  }
  double best_beta = spacing * best_index;
  if (!std::isfinite(best_value)) {
    throw OptimizationError("no displacement in the search interval yields conclusive outcomes",
                            best_beta, best_value);
  }

  const double lo = spacing * std::max(best_index - 1, 0);
  const double hi = std::min(spacing * (best_index + 1), upper);
  const ScalarMinimum refined = brent_minimize(objective, lo, hi);
  if (!refined.converged) {
    const bool better = refined.value < best_value;
    throw OptimizationError("displacement refinement did not converge",
                            better ? refined.x : best_beta, better ? refined.value : best_value);
  }
  if (refined.value < best_value || (refined.value == best_value && refined.x < best_beta)) {
    best_beta = refined.x;
  }

  OptResult out;
  out.alpha = alpha;
  out.m = m;
  out.beta_opt = Amplitude(best_beta);
  out.rates = rates_closed_form(alpha, ReceiverParams{out.beta_opt, m});
  out.matched_bound = intermediate_bound(out.rates.p_inconclusive, overlap(alpha));
  return out;
}

double pinc_at_optimum(Amplitude alpha, std::uint32_t m) {
  return optimize_displacement(alpha, m).rates.p_inconclusive;
}

}  // namespace pnr
