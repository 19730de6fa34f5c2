#include "pnr/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "pnr/errors.hpp"

namespace pnr {

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using ChunkCounts = std::array<std::array<std::uint64_t, 3>, 2>;

ChunkCounts run_chunk(const Alphabet& alphabet, const ReceiverParams& params,
                      const std::array<PoissonSampler, 2>& samplers, std::uint64_t trials,
                      std::uint64_t seed) {
  Engine engine(seed);
  ChunkCounts counts{};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t state = uniform01(engine) < alphabet.p1() ? 0 : 1;
    const PhotonCount n = samplers[state](engine);
    ++counts[state][static_cast<std::size_t>(classify(n, params))];
  }
  return counts;
}

double wald_stderr(double p, std::uint64_t n) {
  return n == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  return splitmix64(splitmix64(seed) ^ chunk);
}

double uniform01(Engine& engine) noexcept {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

PoissonSampler::PoissonSampler(double mu) : mu_(mu) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw DomainError("sample_poisson: mean must be finite and >= 0, got " + std::to_string(mu));
  }
  pieces_ = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(mu / kMaxPieceMean)));
  piece_mean_ = mu / pieces_;
  piece_vacuum_ = std::exp(-piece_mean_);
}

PhotonCount PoissonSampler::operator()(Engine& engine) const {
  if (mu_ == 0.0) {
    return 0;
  }
  PhotonCount total = 0;
  for (std::uint32_t piece = 0; piece < pieces_; ++piece) {
    const double u = uniform01(engine);
    PhotonCount k = 0;
    double term = piece_vacuum_;
    double cdf = term;
    while (u >= cdf) {
      ++k;
      term *= piece_mean_ / static_cast<double>(k);
      // u in the last few ulps below 1 can exceed the rounded total mass.
      if (term == 0.0) {
        break;
      }
      cdf += term;
    }
    total += k;
  }
  return total;
}

PhotonCount sample_poisson(double mu, Engine& engine) { return PoissonSampler(mu)(engine); }

std::uint64_t TrialTally::conclusive() const noexcept { return n_trials - inconclusive(); }

std::uint64_t TrialTally::inconclusive() const noexcept {
  return count(StateSign::Minus, Outcome::Inconclusive) + count(StateSign::Plus, Outcome::Inconclusive);
}

std::uint64_t TrialTally::wrong() const noexcept {
  return count(StateSign::Minus, Outcome::IdentifyPlus) + count(StateSign::Plus, Outcome::IdentifyMinus);
}

TrialTally simulate(const Alphabet& alphabet, const ReceiverParams& params, std::uint64_t n_trials,
                    std::uint64_t seed, const SimulateOptions& options) {
  if (n_trials == 0) {
    throw DomainError("simulate: n_trials must be >= 1");
  }
  const std::array<PoissonSampler, 2> samplers = {
      PoissonSampler(displaced_mean(StateSign::Minus, alphabet.alpha(), params.beta)),
      PoissonSampler(displaced_mean(StateSign::Plus, alphabet.alpha(), params.beta))};

  const std::uint64_t n_chunks = (n_trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<ChunkCounts> per_chunk(n_chunks);
  const auto work = [&](std::uint64_t c) {
    const std::uint64_t trials = std::min(kTrialsPerChunk, n_trials - c * kTrialsPerChunk);
    per_chunk[c] = run_chunk(alphabet, params, samplers, trials, chunk_seed(seed, c));
  };

  detail::parallel_for(n_chunks, options.threads, work);

  TrialTally tally;
  tally.n_trials = n_trials;
  tally.seed = seed;
  for (const auto& chunk : per_chunk) {
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t o = 0; o < 3; ++o) {
        tally.counts[s][o] += chunk[s][o];
      }
    }
  }

  const double p_inc = static_cast<double>(tally.inconclusive()) / static_cast<double>(n_trials);
  tally.empirical_rates.p_inconclusive = p_inc;
  tally.stderr_inc = wald_stderr(p_inc, n_trials);
  const std::uint64_t conclusive = tally.conclusive();
  tally.error_defined = conclusive > 0;
  if (tally.error_defined) {
    const double p_err = static_cast<double>(tally.wrong()) / static_cast<double>(conclusive);
    tally.empirical_rates.p_error = p_err;
    tally.stderr_error = wald_stderr(p_err, conclusive);
  } else {
    tally.empirical_rates.p_error = std::numeric_limits<double>::quiet_NaN();
  }
  return tally;
}

}  // namespace pnr
