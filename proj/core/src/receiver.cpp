#include "pnr/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

constexpr double kMinConclusive = 1e-15;
constexpr double kDirectSumTail = 1e-15;
constexpr double kLinearMeanLimit = 700.0;

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

double conditional_error(double error_mass, double conclusive_mass) {
  if (conclusive_mass < kMinConclusive) {
    throw NoConclusiveResults("receiver produces no conclusive outcomes (P(conclusive) = " +
                              std::to_string(conclusive_mass) + ")");
  }
  return clamp_probability(error_mass / conclusive_mass);
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::IdentifyMinus:
      return "identify_minus";
    case Outcome::IdentifyPlus:
      return "identify_plus";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string_view to_string(RatesMethod m) {
  switch (m) {
    case RatesMethod::ClosedForm:
      return "closed_form";
    case RatesMethod::DirectSum:
      return "direct_sum";
    case RatesMethod::MonteCarlo:
      return "monte_carlo";
  }
  return "?";
}

double inconclusive_rate(Amplitude alpha, const ReceiverParams& params) {
  if (params.m == 0) {
    return 0.0;
  }
  const double mu_minus = displaced_mean(StateSign::Minus, alpha, params.beta);
  const double mu_plus = displaced_mean(StateSign::Plus, alpha, params.beta);
  const double p_inc = 0.5 * (poisson_cdf(params.m, mu_minus) + poisson_cdf(params.m, mu_plus)) -
                       0.5 * std::exp(-mu_minus) - 0.5 * std::exp(-mu_plus);
  return clamp_probability(p_inc);
}

double error_rate(Amplitude alpha, const ReceiverParams& params) {
  const double mu_minus = displaced_mean(StateSign::Minus, alpha, params.beta);
  const double mu_plus = displaced_mean(StateSign::Plus, alpha, params.beta);
  // |-a> answered with a count above m, or |+a> answered with zero photons.
  // 1 - P(n <= m | mu) is taken from the upper tail directly.
  const double tail_minus = poisson_tail(params.m, mu_minus);
  const double vacuum_plus = std::exp(-mu_plus);
  const double error_mass = 0.5 * (tail_minus + vacuum_plus);
  // 1 - p_inc, without the cancellation when nearly everything is discarded.
  const double conclusive =
      0.5 * (std::exp(-mu_minus) + tail_minus + vacuum_plus + poisson_tail(params.m, mu_plus));
  return conditional_error(error_mass, conclusive);
}

Rates rates_closed_form(Amplitude alpha, const ReceiverParams& params) {
  return Rates{error_rate(alpha, params), inconclusive_rate(alpha, params), RatesMethod::ClosedForm};
}

std::array<double, 3> outcome_probabilities(StateSign state, Amplitude alpha,
                                            const ReceiverParams& params) {
  const double mu = displaced_mean(state, alpha, params.beta);
  std::array<double, 3> probs{};
  if (mu == 0.0) {
    probs[static_cast<std::size_t>(classify(0, params))] = 1.0;
    return probs;
  }

  const bool log_space = mu > kLinearMeanLimit;
  const PhotonCount min_terms = static_cast<PhotonCount>(params.m) + 2;
  double term = log_space ? 0.0 : std::exp(-mu);
  double cumulative = 0.0;
  for (PhotonCount n = 0;; ++n) {
    if (log_space) {
      term = poisson_pmf(n, mu);
    } else if (n > 0) {
      term *= mu / static_cast<double>(n);
    }
    probs[static_cast<std::size_t>(classify(n, params))] += term;
    cumulative += term;
    if (n + 1 >= min_terms) {
      if (cumulative >= 1.0 - kDirectSumTail) {
        break;
      }
      // Rounding can leave the running sum a few ulps short of the target.
      if (static_cast<double>(n) > mu && term <= 1e-18 * cumulative) {
        break;
      }
    }
  }
  return probs;
}

Rates rates_direct(const Alphabet& alphabet, const ReceiverParams& params) {
  const auto minus = outcome_probabilities(StateSign::Minus, alphabet.alpha(), params);
  const auto plus = outcome_probabilities(StateSign::Plus, alphabet.alpha(), params);
  constexpr auto kMinus = static_cast<std::size_t>(Outcome::IdentifyMinus);
  constexpr auto kPlus = static_cast<std::size_t>(Outcome::IdentifyPlus);
  constexpr auto kInc = static_cast<std::size_t>(Outcome::Inconclusive);

  const double p1 = alphabet.p1();
  const double p2 = alphabet.p2();
  const double p_inc = clamp_probability(p1 * minus[kInc] + p2 * plus[kInc]);
  const double error_mass = p1 * minus[kPlus] + p2 * plus[kMinus];
  const double conclusive = p1 * (minus[kMinus] + minus[kPlus]) + p2 * (plus[kMinus] + plus[kPlus]);
  return Rates{conditional_error(error_mass, conclusive), p_inc, RatesMethod::DirectSum};
}

}  // namespace pnr
