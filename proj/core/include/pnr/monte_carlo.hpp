#pragma once

// Monte Carlo simulation of the displacement + PNR receiver, independent of the
// closed-form rate expressions.
//
// Random numbers come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Trials are split into chunks of kTrialsPerChunk; chunk c is
// driven by its own engine seeded with chunk_seed(seed, c). Chunk tallies are
// summed in chunk order, so results do not depend on the number of threads.

#include <array>
#include <cstdint>
#include <random>

#include "pnr/bounds.hpp"
#include "pnr/receiver.hpp"

namespace pnr {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kTrialsPerChunk = 1u << 16;

/// Seed for the engine of chunk `chunk` (splitmix64 finalizer over both inputs).
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
double uniform01(Engine& engine) noexcept;

/// Poisson sampler by sequential-search inversion. Means above kMaxPieceMean are
/// split into equal pieces whose counts are summed.
class PoissonSampler {
public:
  static constexpr double kMaxPieceMean = 500.0;

  /// Throws DomainError if mu < 0 or not finite.
  explicit PoissonSampler(double mu);

  PhotonCount operator()(Engine& engine) const;

  double mean() const noexcept { return mu_; }

private:
  double mu_;
  double piece_mean_;
  double piece_vacuum_;  // exp(-piece_mean_)
  std::uint32_t pieces_;
};

/// One Poisson(mu) draw.
PhotonCount sample_poisson(double mu, Engine& engine);

struct TrialTally {
  std::uint64_t n_trials = 0;
  /// counts[state][outcome]; state 0 is |-a>, 1 is |+a>; outcome indexed by Outcome.
  std::array<std::array<std::uint64_t, 3>, 2> counts{};
  std::uint64_t seed = 0;
  /// p_error is NaN when no trial was conclusive (see error_defined).
  Rates empirical_rates{0.0, 0.0, RatesMethod::MonteCarlo};
  double stderr_error = 0.0;
  double stderr_inc = 0.0;
  bool error_defined = false;

  std::uint64_t count(StateSign state, Outcome outcome) const noexcept {
    return counts[state == StateSign::Minus ? 0 : 1][static_cast<std::size_t>(outcome)];
  }
  std::uint64_t conclusive() const noexcept;
  std::uint64_t inconclusive() const noexcept;
  std::uint64_t wrong() const noexcept;
};

struct SimulateOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Runs n_trials independent trials: draw the state from the priors, displace,
/// sample the photon count, classify. Throws DomainError for n_trials == 0.
TrialTally simulate(const Alphabet& alphabet, const ReceiverParams& params, std::uint64_t n_trials,
                    std::uint64_t seed, const SimulateOptions& options = {});

}  // namespace pnr
