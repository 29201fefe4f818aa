#include "swh/strategy.hpp"

#include <limits>

namespace swh {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kPhase1: return "phase1";
    case Phase::kPhase2: return "phase2";
    case Phase::kNone: return "none";
  }
  return "none";
}

namespace detail {

StrategyTrace evaluate_swh(std::span<const int> selection, int theta_rank, int b_cutoff) {
  StrategyTrace trace;
  trace.theta_rank = theta_rank;

  const int length = static_cast<int>(selection.size());
  int best_pos = 0;
  for (int i = 0; i < length; ++i) {
    if (selection[i] < theta_rank) ++trace.j_count;
    if (selection[i] < selection[best_pos]) best_pos = i;
  }

  int chosen = -1;
  for (int i = 0; i < b_cutoff; ++i) {
    if (selection[i] < theta_rank) {
      chosen = i;
      trace.phase = Phase::kPhase1;
      break;
    }
  }
  if (chosen < 0) {
    int theta_prime = std::numeric_limits<int>::max();
    for (int i = 0; i < b_cutoff; ++i) theta_prime = std::min(theta_prime, selection[i]);
    trace.theta_prime_rank = theta_prime;
    for (int i = b_cutoff; i < length; ++i) {
      if (selection[i] < theta_prime) {
        chosen = i;
        trace.phase = Phase::kPhase2;
        break;
      }
    }
  }

  if (chosen >= 0) {
    trace.selected_position = chosen + 1;
    trace.success = chosen == best_pos;
  }
  return trace;
}

StrategyTrace evaluate_cutoff(std::span<const int> ranks, int cutoff) {
  StrategyTrace trace;
  const int length = static_cast<int>(ranks.size());
  int chosen = -1;
  if (cutoff == 0) {
    chosen = 0;
  } else {
    int window_best = std::numeric_limits<int>::max();
    for (int i = 0; i < cutoff; ++i) window_best = std::min(window_best, ranks[i]);
    trace.theta_prime_rank = window_best;
    for (int i = cutoff; i < length; ++i) {
      if (ranks[i] < window_best) {
        chosen = i;
        break;
      }
    }
  }
  if (chosen >= 0) {
    trace.phase = Phase::kPhase2;
    trace.selected_position = chosen + 1;
    trace.success = ranks[chosen] == 1;
  }
  return trace;
}

}  // namespace detail

StrategyTrace run_swh_strategy(const ProblemConfig& config, const RankSequence& seq) {
  if (config.k < 2) throw PreconditionError("SwH strategy requires K >= 2");
  if (seq.size() != config.n_total) throw PreconditionError("sequence length must equal N");
  if (seq.split_point() != config.history_size()) {
    throw PreconditionError("history length must equal N - N/K");
  }
  if (seq.split_point() < config.k) throw PreconditionError("history shorter than K");

  // Ranks are global, so the K-th largest history value has the K-th smallest rank.
  const std::span<const int> history = seq.history();
  std::vector<int> h(history.begin(), history.end());
  std::nth_element(h.begin(), h.begin() + (config.k - 1), h.end());
  const int theta_rank = h[config.k - 1];

  return detail::evaluate_swh(seq.selection(), theta_rank, config.b_cutoff);
}

StrategyTrace run_cutoff_strategy(std::span<const double> values, int cutoff) {
  if (cutoff < 0 || static_cast<std::size_t>(cutoff) >= values.size()) {
    throw PreconditionError("cutoff must lie in [0, length)");
  }
  const std::vector<int> ranks = to_ranks(values);
  return detail::evaluate_cutoff(ranks, cutoff);
}

}  // namespace swh
