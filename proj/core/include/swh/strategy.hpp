#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "swh/config.hpp"
#include "swh/error.hpp"
#include "swh/rank_sequence.hpp"

namespace swh {

enum class Phase { kPhase1, kPhase2, kNone };

std::string_view to_string(Phase phase);

/// Record of one strategy run. Ranks are global (1 = largest overall);
/// positions are 1-based within the scanned sequence.
struct StrategyTrace {
  std::optional<int> theta_rank;        // K-th largest history item
  std::optional<int> theta_prime_rank;  // best of the phase-one window
  int j_count = 0;                      // selection items beating theta
  std::optional<int> selected_position;
  Phase phase = Phase::kNone;
  bool success = false;

  friend bool operator==(const StrategyTrace&, const StrategyTrace&) = default;
};

/// Runs the two-phase SwH rule on `seq`.
///
/// Phase 1 scans selection positions 1..B and takes the first item beating
/// theta, the K-th largest history item. Otherwise phase 2 takes the first
/// record after position B, i.e. the first item beating theta', the best of
/// positions 1..B. Success means the selected item is the selection maximum.
///
/// Throws PreconditionError if K < 2 or `seq` does not match `config`.
StrategyTrace run_swh_strategy(const ProblemConfig& config, const RankSequence& seq);

/// Classical cutoff rule: observe `cutoff` values, then take the first value
/// beating all of them (cutoff 0 takes the first value). Success means the
/// global maximum was taken. The trace reports the window maximum as
/// theta_prime_rank and a selection as Phase::kPhase2.
StrategyTrace run_cutoff_strategy(std::span<const double> values, int cutoff);

/// The k-th largest element of `history` (k = 1 is the maximum).
template <class T>
T kth_largest(std::span<const T> history, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > history.size()) {
    throw PreconditionError("kth_largest: k must lie in [1, history size]");
  }
  std::vector<T> copy(history.begin(), history.end());
  auto nth = copy.begin() + (k - 1);
  std::nth_element(copy.begin(), nth, copy.end(), std::greater<T>());
  return *nth;
}

namespace detail {

// Unchecked kernels over rank spans, shared with the Monte Carlo driver.
// `theta_rank` is the global rank of theta: selection ranks below it beat it.
StrategyTrace evaluate_swh(std::span<const int> selection, int theta_rank, int b_cutoff);
StrategyTrace evaluate_cutoff(std::span<const int> ranks, int cutoff);

}  // namespace detail
}  // namespace swh
