#pragma once

// Displacement + photon-number-resolving receiver.
//
// The signal is displaced by beta and its photons are counted. A count of zero
// identifies |-a>, counts 1..m are discarded as inconclusive and anything
// above m identifies |+a>. With m = 0 this is the on/off receiver.

#include <array>
#include <cstdint>
#include <string_view>

#include "pnr/bounds.hpp"
#include "pnr/quantum_core.hpp"

namespace pnr {

/// Displacement and postselection cutoff.
struct ReceiverParams {
  Amplitude beta{0.0};
  std::uint32_t m = 0;
};

enum class Outcome : std::uint8_t { IdentifyMinus = 0, IdentifyPlus = 1, Inconclusive = 2 };

inline constexpr std::array<Outcome, 3> kAllOutcomes = {Outcome::IdentifyMinus, Outcome::IdentifyPlus,
                                                       Outcome::Inconclusive};

std::string_view to_string(Outcome o);

enum class RatesMethod : std::uint8_t { ClosedForm, DirectSum, MonteCarlo };

std::string_view to_string(RatesMethod m);

/// Average error probability conditioned on a conclusive outcome, and the
/// probability of an inconclusive outcome.
struct Rates {
  double p_error = 0.0;
  double p_inconclusive = 0.0;
  RatesMethod method = RatesMethod::ClosedForm;
};

/// Decision rule on a photon count.
constexpr Outcome classify(PhotonCount n, const ReceiverParams& params) noexcept {
  if (n == 0) {
    return Outcome::IdentifyMinus;
  }
  if (n <= params.m) {
    return Outcome::Inconclusive;
  }
  return Outcome::IdentifyPlus;
}

/// Closed-form inconclusive probability for equal priors:
///   1/2 [P(1 <= n <= m | (a-b)^2) + P(1 <= n <= m | (a+b)^2)]
/// evaluated through the cumulative Poisson ratio.
double inconclusive_rate(Amplitude alpha, const ReceiverParams& params);

/// Closed-form conditional error probability for equal priors:
///   1/2 [1 - P(n <= m | (a-b)^2) + e^{-(a+b)^2}] / (1 - p_inc).
/// Throws NoConclusiveResults when 1 - p_inc < 1e-15.
double error_rate(Amplitude alpha, const ReceiverParams& params);

/// Both closed-form rates, tagged ClosedForm.
Rates rates_closed_form(Amplitude alpha, const ReceiverParams& params);

/// Conditional outcome probabilities P(outcome | state), indexed by Outcome,
/// computed by explicit summation of the displaced-state photon distribution
/// until the accumulated mass reaches 1 - 1e-15 (and at least m + 2 terms).
std::array<double, 3> outcome_probabilities(StateSign state, Amplitude alpha,
                                            const ReceiverParams& params);

/// Rates for arbitrary priors, assembled from outcome_probabilities. Tagged
/// DirectSum. Throws NoConclusiveResults when 1 - p_inc < 1e-15.
Rates rates_direct(const Alphabet& alphabet, const ReceiverParams& params);

}  // namespace pnr
