#include <gtest/gtest.h>

#include "swh/asymptotic.hpp"
#include "swh/error.hpp"

namespace swh {
namespace {

TEST(OptimizeBetaTest, DominatesRecommendedBeta) {
  for (int k : {2, 3, 10}) {
    const BetaOptimum opt = optimize_beta(k, 1e-6);
    EXPECT_EQ(opt.k, k);
    EXPECT_GT(opt.beta_star, 0.0);
    EXPECT_LT(opt.beta_star, 1.0);
    EXPECT_GE(opt.q_star, asymptotic_q(k, 0.63, 1e-6).value - 1e-9) << "K=" << k;
    EXPECT_GE(opt.q_star, opt.grid_q - 1e-6);
    EXPECT_FALSE(opt.method_note.empty());
  }
}

TEST(OptimizeBetaTest, GridScanReproducesOptimum) {
  const BetaOptimum opt = optimize_beta(2, 1e-6);
  double best = 0.0;
  for (int i = 0; i <= 980; ++i) best = std::max(best, asymptotic_q(2, 0.01 + i * 1e-3, 1e-6).value);
  EXPECT_NEAR(opt.q_star, best, 1e-6);
  EXPECT_NEAR(opt.grid_q, best, 1e-15);
}

// The quoted Q(10) = 0.55 is rounded to two decimals; the true maximum over
// beta is about 0.54995 (near beta = 0.6245), so compare at that rounding.
TEST(OptimizeBetaTest, LargeKMatchesQuotedValue) {
  const BetaOptimum opt = optimize_beta(10, 1e-6);
  EXPECT_NEAR(opt.q_star, 0.55, 0.005);
  EXPECT_NEAR(opt.q_star, 0.5499450131239859, 1e-6);
  EXPECT_NEAR(opt.beta_star, 0.6245, 0.002);
}

TEST(OptimizeBetaTest, RejectsKOne) { EXPECT_THROW(optimize_beta(1, 1e-6), PreconditionError); }

}  // namespace
}  // namespace swh
