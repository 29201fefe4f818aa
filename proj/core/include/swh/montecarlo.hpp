#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "swh/config.hpp"

namespace swh {

/// Trials are cut into consecutive blocks of this size; block b draws from
/// substream(seed, b) (simulate_r also restarts from the identity
/// permutation). Workers pull whole blocks and counts are summed as integers,
/// so the output depends on (config, trials, seed) and never on the worker
/// count.
inline constexpr std::uint64_t kTrialsPerBlock = 1u << 14;

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // sqrt(mean (1 - mean) / trials)
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  ProblemConfig config;
};

struct JHistogram {
  std::map<int, std::uint64_t> counts;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  ProblemConfig config;

  double frequency(int j) const;
  /// Empirical P[J >= t].
  double tail_frequency(int t) const;
};

/// Success frequency of the SwH strategy (the optimal cutoff rule when K = 1)
/// over uniformly random orderings. workers = 0 means one.
Estimate simulate_r(const ProblemConfig& config, std::uint64_t trials, std::uint64_t seed,
                    unsigned workers = 1);

/// Histogram of J, the number of selection items above the K-th largest
/// history item. Requires K >= 2. Each trial draws, without replacement,
/// which side of the split ranks 1, 2, ... land on until the K-th history
/// rank appears; J is determined by that prefix of the ordering.
JHistogram empirical_j(const ProblemConfig& config, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers = 1);

/// Bernstein bound for sampling without replacement on P[J >= t]:
/// exp(-L eps^2 / (2 sigma^2 + (2/3) eps)) with eps = (t - (t+K-1)/K) / L and
/// sigma^2 = (t+K-1)/N. Returns 1 when eps <= 0. For t = cK^2 the exponent
/// grows linearly in c, which gives the exp(-b c K^2) decay with b left implicit.
double bernstein_tail_bound(int n, int k, int t);

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = 1.96);

}  // namespace swh
