#pragma once

// Reference limits for discriminating the binary alphabet {|-a>, |+a>}.

#include "pnr/quantum_core.hpp"

namespace pnr {

/// Binary coherent-state source: amplitude and prior probabilities of |-a>
/// (p1) and |+a> (p2).
class Alphabet {
public:
  /// Throws DomainError unless p1, p2 are in [0, 1] and sum to 1 within 1e-12.
  Alphabet(Amplitude alpha, double p1, double p2);

  static Alphabet equiprobable(Amplitude alpha) { return Alphabet(alpha, 0.5, 0.5); }

  Amplitude alpha() const noexcept { return alpha_; }
  double p1() const noexcept { return p1_; }
  double p2() const noexcept { return p2_; }
  double prior(StateSign sign) const noexcept { return sign == StateSign::Minus ? p1_ : p2_; }

private:
  Amplitude alpha_;
  double p1_;
  double p2_;
};

/// Minimum error probability without inconclusive outcomes,
/// (1 - sqrt(1 - 4 p1 p2 sigma^2)) / 2.
double helstrom(const Alphabet& a);

/// Minimum inconclusive probability for error-free discrimination, sigma.
double idp_inconclusive(const Alphabet& a);

/// Lowest error probability attainable when a fraction p_inc of outcomes is
/// inconclusive, for two equiprobable pure states with overlap sigma:
///
///   (1 - p_inc - sqrt(1 - 2 p_inc (1 - sigma) - sigma^2)) / (2 (1 - p_inc))
///
/// Only valid for equal priors. Returns 0 for p_inc >= sigma. Throws
/// DomainError for p_inc outside [0, 1) or sigma outside [0, 1].
double intermediate_bound(double p_inc, double sigma);

}  // namespace pnr
