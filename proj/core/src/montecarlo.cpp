#include "swh/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "swh/error.hpp"
#include "swh/exact.hpp"
#include "swh/rng.hpp"
#include "swh/strategy.hpp"

namespace swh {

namespace {

// Runs `kernel(block_index, first_trial, trial_count, result&)` over every
// block, spreading blocks over `workers` threads. One Result per block.
template <class Result, class Kernel>
std::vector<Result> run_blocks(std::uint64_t trials, unsigned workers, const Kernel& kernel) {
  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<Result> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t first = b * kTrialsPerBlock;
      kernel(b, std::min(kTrialsPerBlock, trials - first), results[b]);
    }
  };
  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(workers, 1u), std::max<std::uint64_t>(blocks, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return results;
}

// Draws one ordering: the last L slots of `ranks` become a uniform ordered
// sample, and returns the global rank of the K-th largest history item.
class OrderingSampler {
 public:
  OrderingSampler(const ProblemConfig& config, std::uint64_t seed, std::uint64_t block)
      : config_(config),
        rng_(substream(seed, block)),
        ranks_(static_cast<std::size_t>(config.n_total)),
        in_selection_(static_cast<std::size_t>(config.n_total) + 1, 0) {
    std::iota(ranks_.begin(), ranks_.end(), 1);
  }

  std::span<const int> draw() {
    shuffle_tail(std::span<int>(ranks_), static_cast<std::size_t>(config_.l_selection), rng_);
    return std::span<const int>(ranks_).last(static_cast<std::size_t>(config_.l_selection));
  }

  int theta_rank(std::span<const int> selection) {
    for (int r : selection) in_selection_[r] = 1;
    int found = 0;
    int rank = 0;
    while (found < config_.k) {
      ++rank;
      if (!in_selection_[rank]) ++found;
    }
    for (int r : selection) in_selection_[r] = 0;
    return rank;
  }

 private:
  const ProblemConfig& config_;
  Engine rng_;
  std::vector<int> ranks_;
  std::vector<char> in_selection_;
};

// Reveals ranks 1, 2, ... in turn, each landing in the history with
// probability (history slots left) / (items left). This is the law of a
// uniform ordering restricted to which side each rank falls on, stopped at
// the K-th history rank, so one draw costs O(J + K) instead of O(L).
int draw_theta_rank(Engine& rng, const ProblemConfig& config) {
  int found = 0;
  int rank = 0;
  std::uint64_t slots = static_cast<std::uint64_t>(config.history_size());
  while (found < config.k) {
    const auto left = static_cast<std::uint64_t>(config.n_total - rank);
    ++rank;
    if (uniform_below(rng, left) < slots) {
      --slots;
      ++found;
    }
  }
  return rank;
}

void check_trials(std::uint64_t trials) {
  if (trials < 1) throw PreconditionError("trials must be positive");
}

}  // namespace

double JHistogram::frequency(int j) const {
  auto it = counts.find(j);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(trials);
}

double JHistogram::tail_frequency(int t) const {
  std::uint64_t hits = 0;
  for (auto it = counts.lower_bound(t); it != counts.end(); ++it) hits += it->second;
  return static_cast<double>(hits) / static_cast<double>(trials);
}

Estimate simulate_r(const ProblemConfig& config, std::uint64_t trials, std::uint64_t seed,
                    unsigned workers) {
  check_trials(trials);
  const ProblemConfig checked = ProblemConfig::make(config.n_total, config.k, config.beta);
  const int cutoff = checked.k == 1 ? optimal_cutoff(checked.n_total).t_star : 0;

  auto kernel = [&](std::uint64_t block, std::uint64_t count, std::uint64_t& successes) {
    OrderingSampler sampler(checked, seed, block);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::span<const int> selection = sampler.draw();
      const StrategyTrace trace =
          checked.k == 1
              ? detail::evaluate_cutoff(selection, cutoff)
              : detail::evaluate_swh(selection, sampler.theta_rank(selection), checked.b_cutoff);
      hits += trace.success ? 1 : 0;
    }
    successes = hits;
  };
  const std::vector<std::uint64_t> per_block =
      run_blocks<std::uint64_t>(trials, workers, kernel);

  Estimate out;
  out.successes = std::accumulate(per_block.begin(), per_block.end(), std::uint64_t{0});
  out.trials = trials;
  out.seed = seed;
  out.config = checked;
  out.mean = static_cast<double>(out.successes) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.mean * (1.0 - out.mean) / static_cast<double>(trials));
  return out;
}

JHistogram empirical_j(const ProblemConfig& config, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers) {
  check_trials(trials);
  const ProblemConfig checked = ProblemConfig::make(config.n_total, config.k, config.beta);
  if (checked.k < 2) throw PreconditionError("J is defined only for K >= 2");

  using Counts = std::vector<std::uint64_t>;
  auto kernel = [&](std::uint64_t block, std::uint64_t count, Counts& counts) {
    Engine rng = substream(seed, block);
    counts.assign(static_cast<std::size_t>(checked.l_selection) + 1, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      // theta is the rank-I item with I = J + K.
      ++counts[draw_theta_rank(rng, checked) - checked.k];
    }
  };
  const std::vector<Counts> per_block = run_blocks<Counts>(trials, workers, kernel);

  JHistogram out;
  out.trials = trials;
  out.seed = seed;
  out.config = checked;
  for (const Counts& counts : per_block) {
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] > 0) out.counts[static_cast<int>(j)] += counts[j];
    }
  }
  return out;
}

double bernstein_tail_bound(int n, int k, int t) {
  if (k < 2) throw PreconditionError("K must be >= 2");
  if (n < 1 || n % k != 0) throw PreconditionError("K must divide N");
  if (t < 1) throw PreconditionError("t must be >= 1");
  const double l = static_cast<double>(n / k);
  const double eps = (t - static_cast<double>(t + k - 1) / k) / l;
  if (eps <= 0.0) return 1.0;
  const double sigma2 = static_cast<double>(t + k - 1) / n;
  return std::exp(-l * eps * eps / (2.0 * sigma2 + (2.0 / 3.0) * eps));
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials < 1) throw PreconditionError("trials must be positive");
  if (successes > trials) throw PreconditionError("successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {centre - half, centre + half};
}

}  // namespace swh
