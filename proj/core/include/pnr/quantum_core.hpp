#pragma once

// Numerical primitives for real-amplitude coherent states and their photon
// counting statistics.

#include <cstdint>

namespace pnr {

/// Real field amplitude of a coherent state (dimensionless). The mean photon
/// number of |a> is a^2.
class Amplitude {
public:
  /// Throws DomainError for NaN or infinite values.
  explicit Amplitude(double value);

  /// Amplitude from a mean photon number |a|^2 >= 0 (non-negative root).
  static Amplitude from_mean_photon_number(double n_mean);

  double value() const noexcept { return value_; }
  double mean_photon_number() const noexcept { return value_ * value_; }

  friend bool operator==(Amplitude, Amplitude) = default;

private:
  double value_;
};

/// Photon number n >= 0 reported by a number-resolving detector.
using PhotonCount = std::uint64_t;

/// Which of the two signal states |-a> (Minus) or |+a> (Plus).
enum class StateSign : int { Minus = -1, Plus = +1 };

/// |<-a|a>| = exp(-2 a^2).
double overlap(Amplitude alpha);

/// Mean photon number of D(beta)|sign * alpha>, i.e. (beta + sign*alpha)^2.
double displaced_mean(StateSign sign, Amplitude alpha, Amplitude beta);

/// mu^n e^{-mu} / n!. For mu = 0 this is 1 at n = 0 and 0 elsewhere.
/// Throws DomainError if mu < 0 or mu is not finite.
double poisson_pmf(PhotonCount n, double mu);

/// P(N <= m) for N ~ Poisson(mu), evaluated as the finite sum of pmf terms.
/// Equal to the regularized upper incomplete gamma ratio Gamma(m+1, mu)/m!.
double poisson_cdf(PhotonCount m, double mu);

/// P(N > m), summed from the upper side when the tail is the small part so it
/// keeps full relative precision.
double poisson_tail(PhotonCount m, double mu);

/// P(lo <= N <= hi); zero when lo > hi.
double poisson_window(PhotonCount lo, PhotonCount hi, double mu);

}  // namespace pnr
