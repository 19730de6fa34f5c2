#include "pnr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

constexpr double kPriorSumTolerance = 1e-12;
constexpr double kRadicandSlack = 1e-12;

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

Alphabet::Alphabet(Amplitude alpha, double p1, double p2) : alpha_(alpha), p1_(p1), p2_(p2) {
  if (!is_probability(p1) || !is_probability(p2)) {
    throw DomainError("priors must lie in [0, 1]");
  }
  if (std::abs(p1 + p2 - 1.0) > kPriorSumTolerance) {
    throw DomainError("priors must sum to 1, got " + std::to_string(p1 + p2));
  }
}

double helstrom(const Alphabet& a) {
  const double sigma = overlap(a.alpha());
  const double radicand = 1.0 - 4.0 * a.p1() * a.p2() * sigma * sigma;
  return 0.5 * (1.0 - std::sqrt(std::max(radicand, 0.0)));
}

double idp_inconclusive(const Alphabet& a) { return overlap(a.alpha()); }

double intermediate_bound(double p_inc, double sigma) {
  if (!std::isfinite(p_inc) || p_inc < 0.0 || p_inc >= 1.0) {
    throw DomainError("intermediate_bound: p_inc must lie in [0, 1), got " + std::to_string(p_inc));
  }
  if (!is_probability(sigma)) {
    throw DomainError("intermediate_bound: sigma must lie in [0, 1], got " + std::to_string(sigma));
  }
  if (p_inc >= sigma) {
    return 0.0;
  }
  double radicand = 1.0 - 2.0 * p_inc * (1.0 - sigma) - sigma * sigma;
  if (radicand < 0.0 && radicand > -kRadicandSlack) {
    radicand = 0.0;
  }
  const double bound = (1.0 - p_inc - std::sqrt(radicand)) / (2.0 * (1.0 - p_inc));
  return std::max(bound, 0.0);
}

}  // namespace pnr
