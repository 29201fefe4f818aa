#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "swh/rng.hpp"

namespace swh {
namespace {

TEST(RngTest, SubstreamsAreDeterministicAndDistinct) {
  Engine a = substream(7, 3);
  Engine b = substream(7, 3);
  Engine c = substream(7, 4);
  Engine d = substream(8, 3);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(RngTest, UniformBelowStaysInRangeAndIsFlat) {
  Engine rng = substream(1, 0);
  std::vector<long> counts(7, 0);
  const long draws = 700000;
  for (long i = 0; i < draws; ++i) {
    const auto v = uniform_below(rng, 7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  double chi2 = 0.0;
  for (long c : counts) chi2 += (c - draws / 7.0) * (c - draws / 7.0) / (draws / 7.0);
  EXPECT_LT(chi2, 22.46);  // chi-square, 6 dof, p = 0.001
}

TEST(RngTest, FisherYatesIsUniformOverPermutations) {
  Engine rng = substream(2, 0);
  std::map<std::vector<int>, long> counts;
  const long draws = 240000;
  std::vector<int> v(4);
  for (long i = 0; i < draws; ++i) {
    std::iota(v.begin(), v.end(), 1);
    fisher_yates(std::span<int>(v), rng);
    ++counts[v];
  }
  ASSERT_EQ(counts.size(), 24u);
  double chi2 = 0.0;
  for (const auto& [perm, c] : counts) chi2 += (c - draws / 24.0) * (c - draws / 24.0) / (draws / 24.0);
  EXPECT_LT(chi2, 49.73);  // 23 dof, p = 0.001
}

TEST(RngTest, ShuffleTailGivesUniformOrderedSample) {
  // Without resetting the array between draws, the last two slots of five
  // items must still be a uniform ordered pair: 20 outcomes.
  Engine rng = substream(3, 0);
  std::vector<int> v(5);
  std::iota(v.begin(), v.end(), 1);
  std::map<std::pair<int, int>, long> counts;
  const long draws = 200000;
  for (long i = 0; i < draws; ++i) {
    shuffle_tail(std::span<int>(v), 2, rng);
    ++counts[{v[3], v[4]}];
  }
  ASSERT_EQ(counts.size(), 20u);
  double chi2 = 0.0;
  for (const auto& [pair, c] : counts) chi2 += (c - draws / 20.0) * (c - draws / 20.0) / (draws / 20.0);
  EXPECT_LT(chi2, 43.82);  // 19 dof, p = 0.001
}

}  // namespace
}  // namespace swh
