#include "pnr/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

// exp(-mu) stays a normal double below this mean; above it, terms are built in
// log space.
constexpr double kLinearMeanLimit = 700.0;

// Iterating the pmf recurrence for very large n is pointless; switch to lgamma.
constexpr PhotonCount kLinearCountLimit = 4096;

void require_mean(double mu, const char* where) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw DomainError(std::string(where) + ": mean photon number must be finite and >= 0, got " +
                      std::to_string(mu));
  }
}

double log_space_pmf(PhotonCount n, double mu) {
  const double k = static_cast<double>(n);
  return std::exp(k * std::log(mu) - mu - std::lgamma(k + 1.0));
}

}  // namespace

Amplitude::Amplitude(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("amplitude must be finite");
  }
}

Amplitude Amplitude::from_mean_photon_number(double n_mean) {
  if (!std::isfinite(n_mean) || n_mean < 0.0) {
    throw DomainError("mean photon number must be finite and >= 0, got " + std::to_string(n_mean));
  }
  return Amplitude(std::sqrt(n_mean));
}

double overlap(Amplitude alpha) { return std::exp(-2.0 * alpha.mean_photon_number()); }

double displaced_mean(StateSign sign, Amplitude alpha, Amplitude beta) {
  const double shifted = beta.value() + static_cast<int>(sign) * alpha.value();
  return shifted * shifted;
}

double poisson_pmf(PhotonCount n, double mu) {
  require_mean(mu, "poisson_pmf");
  if (mu == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (mu > kLinearMeanLimit || n > kLinearCountLimit) {
    return log_space_pmf(n, mu);
  }
  double term = std::exp(-mu);
  for (PhotonCount k = 0; k < n; ++k) {
    term *= mu / static_cast<double>(k + 1);
  }
  return term;
}

double poisson_cdf(PhotonCount m, double mu) {
  require_mean(mu, "poisson_cdf");
  if (mu == 0.0) {
    return 1.0;
  }
  const bool log_space = mu > kLinearMeanLimit;
  double term = log_space ? 0.0 : std::exp(-mu);
  double sum = 0.0;
  for (PhotonCount k = 0; k <= m; ++k) {
    if (log_space) {
      term = log_space_pmf(k, mu);
    } else if (k > 0) {
      term *= mu / static_cast<double>(k);
    }
    sum += term;
    // Past the mode the remaining terms fall off geometrically.
    if (static_cast<double>(k) > mu && term <= 1e-18 * sum) {
      break;
    }
  }
  return std::min(sum, 1.0);
}

double poisson_tail(PhotonCount m, double mu) {
  require_mean(mu, "poisson_tail");
  if (mu == 0.0) {
    return 0.0;
  }
  if (static_cast<double>(m) + 1.0 <= mu) {
    return std::max(0.0, 1.0 - poisson_cdf(m, mu));
  }
  // Beyond the mode: terms decrease, so summing upward converges quickly.
  return poisson_window(m + 1, std::numeric_limits<PhotonCount>::max(), mu);
}

double poisson_window(PhotonCount lo, PhotonCount hi, double mu) {
  require_mean(mu, "poisson_window");
  if (lo > hi) {
    return 0.0;
  }
  if (mu == 0.0) {
    return lo == 0 ? 1.0 : 0.0;
  }
  const bool log_space = mu > kLinearMeanLimit;
  double term = poisson_pmf(lo, mu);
  double sum = 0.0;
  for (PhotonCount k = lo; k <= hi; ++k) {
    if (log_space) {
      term = log_space_pmf(k, mu);
    } else if (k > lo) {
      term *= mu / static_cast<double>(k);
    }
    sum += term;
    if (static_cast<double>(k) > mu && term <= 1e-18 * sum) {
      break;
    }
  }
  return std::min(sum, 1.0);
}

}  // namespace pnr
