#pragma once

namespace swh {

/// One Selecting-with-History instance.
///
/// N items arrive in uniformly random order. The first N - L are the history,
/// the last L = N / K are the selection sequence, and the first
/// B = ceil(beta * L) selection items are compared against the history
/// threshold. K = 1 is the classical secretary problem (empty history).
struct ProblemConfig {
  int n_total = 0;
  int k = 0;
  double beta = 0.0;
  int l_selection = 0;
  int b_cutoff = 0;

  /// Validates (n_total, k, beta) and derives L and B.
  /// Throws PreconditionError if K does not divide N, if beta is outside
  /// (0, 1), or if K >= 2 and the history holds fewer than K items.
  static ProblemConfig make(int n_total, int k, double beta);

  int history_size() const { return n_total - l_selection; }

  friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

/// ceil(beta * length), clamped to [1, length].
///
/// Products within 1e-9 (relative) of an integer are snapped onto it, so a
/// decimal beta such as 0.63 with length 100 yields 63 even though the binary
/// double 0.63 is slightly larger than 63/100.
int phase_one_length(double beta, int length);

}  // namespace swh
