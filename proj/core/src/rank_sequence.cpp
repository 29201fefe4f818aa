#include "swh/rank_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swh/error.hpp"

namespace swh {

std::vector<int> to_ranks(std::span<const double> values) {
  std::vector<int> index(values.size());
  std::iota(index.begin(), index.end(), 0);
  for (double v : values) {
    if (!std::isfinite(v)) throw PreconditionError("values must be finite");
  }
  std::sort(index.begin(), index.end(), [&](int a, int b) { return values[a] > values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    if (r > 0 && values[index[r]] == values[index[r - 1]]) {
      throw PreconditionError("values must be distinct (ties are not allowed)");
    }
    ranks[index[r]] = static_cast<int>(r) + 1;
  }
  return ranks;
}

RankSequence::RankSequence(std::vector<int> order, int split_point)
    : order_(std::move(order)), split_point_(split_point) {
  const int n = static_cast<int>(order_.size());
  if (split_point_ < 0 || split_point_ > n) {
    throw PreconditionError("split point must lie in [0, N]");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int r : order_) {
    if (r < 1 || r > n) throw PreconditionError("ranks must lie in 1..N");
    if (seen[r]) throw PreconditionError("duplicate rank in sequence");
    seen[r] = true;
  }
}

RankSequence RankSequence::from_values(std::span<const double> values, int split_point) {
  return RankSequence(to_ranks(values), split_point);
}

}  // namespace swh
