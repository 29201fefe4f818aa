#pragma once

#include <span>
#include <vector>

namespace swh {

/// Converts distinct values to ranks, 1 = largest. Throws PreconditionError
/// on ties or non-finite values.
std::vector<int> to_ranks(std::span<const double> values);

/// A permutation of ranks 1..N (1 = largest) split into the history
/// (positions [0, split_point)) and the selection sequence (the rest).
class RankSequence {
 public:
  /// Throws PreconditionError unless `order` is a permutation of 1..N and
  /// 0 <= split_point <= N.
  RankSequence(std::vector<int> order, int split_point);

  /// Ranks the values (rejecting ties) and splits at `split_point`.
  static RankSequence from_values(std::span<const double> values, int split_point);

  std::span<const int> order() const { return order_; }
  std::span<const int> history() const { return std::span<const int>(order_).first(split_point_); }
  std::span<const int> selection() const { return std::span<const int>(order_).subspan(split_point_); }
  int split_point() const { return split_point_; }
  int size() const { return static_cast<int>(order_.size()); }

 private:
  std::vector<int> order_;
  int split_point_ = 0;
};

}  // namespace swh
