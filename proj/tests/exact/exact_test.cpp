#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "swh/config.hpp"
#include "swh/error.hpp"
#include "swh/exact.hpp"

namespace swh {
namespace {

Rational q(long a, long b) { return make_rational(a, b); }

// Test-only oracles. They enumerate orderings directly and use their own
// strategy code (values: larger is better), independent of the library.

Rational enumerate_cutoff(int n, int t) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long wins = 0, total = 0;
  do {
    ++total;
    int chosen = -1;
    if (t == 0) {
      chosen = 0;
    } else {
      const int window = *std::max_element(perm.begin(), perm.begin() + t);
      for (int i = t; i < n; ++i) {
        if (perm[i] > window) {
          chosen = i;
          break;
        }
      }
    }
    if (chosen >= 0 && perm[chosen] == n) ++wins;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return q(wins, total);
}

struct ByJ {
  std::map<int, long> cases;
  std::map<int, long> wins;
  long total = 0;
};

ByJ enumerate_by_j(int n, int k, int b) {
  const int l = n / k;
  ByJ out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != n - l) continue;
    std::vector<int> hist, sel;
    for (int v = 1; v <= n; ++v) ((mask >> (v - 1)) & 1u ? hist : sel).push_back(v);
    std::sort(hist.rbegin(), hist.rend());
    const int theta = hist[k - 1];
    const int j = static_cast<int>(std::count_if(sel.begin(), sel.end(), [&](int v) { return v > theta; }));
    const int top = *std::max_element(sel.begin(), sel.end());
    do {
      int chosen = -1;
      for (int i = 0; i < b && chosen < 0; ++i)
        if (sel[i] > theta) chosen = i;
      if (chosen < 0) {
        const int window = *std::max_element(sel.begin(), sel.begin() + b);
        for (int i = b; i < l && chosen < 0; ++i)
          if (sel[i] > window) chosen = i;
      }
      ++out.cases[j];
      ++out.total;
      if (chosen >= 0 && sel[chosen] == top) ++out.wins[j];
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  return out;
}

TEST(SecretarySuccessTest, Examples) {
  EXPECT_EQ(secretary_success(2, 1), q(1, 2));
  EXPECT_EQ(secretary_success(4, 1), q(11, 24));
  EXPECT_EQ(secretary_success(4, 0), q(1, 4));
  EXPECT_THROW(secretary_success(4, 4), PreconditionError);
  EXPECT_THROW(secretary_success(4, -1), PreconditionError);
}

TEST(SecretarySuccessTest, MatchesPermutationEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    for (int t = 0; t < n; ++t) {
      EXPECT_EQ(secretary_success(n, t), enumerate_cutoff(n, t)) << "n=" << n << " t=" << t;
    }
  }
}

TEST(OptimalCutoffTest, Examples) {
  const SecretaryOptimum four = optimal_cutoff(4);
  EXPECT_EQ(four.t_star, 1);
  EXPECT_EQ(four.p_success, q(11, 24));

  // t = 0 and t = 1 both give 1/2; ties go to the smaller cutoff.
  const SecretaryOptimum two = optimal_cutoff(2);
  EXPECT_EQ(two.t_star, 0);
  EXPECT_EQ(two.p_success, q(1, 2));

  EXPECT_EQ(optimal_cutoff(1).p_success, 1);
}

TEST(OptimalCutoffTest, MatchesExhaustiveScan) {
  const Rational inv_e_floor = make_rational(367879, 1000000);
  for (int n = 1; n <= 80; ++n) {
    int best_t = 0;
    Rational best = secretary_success(n, 0);
    for (int t = 1; t < n; ++t) {
      const Rational v = secretary_success(n, t);
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
    const SecretaryOptimum opt = optimal_cutoff(n);
    EXPECT_EQ(opt.t_star, best_t) << "n=" << n;
    EXPECT_EQ(opt.p_success, best) << "n=" << n;
    EXPECT_GE(opt.p_success, inv_e_floor) << "n=" << n;
  }
}

TEST(OptimalCutoffTest, LargeNApproachesInverseE) {
  const SecretaryOptimum opt = optimal_cutoff(10000);
  const double inv_e = std::exp(-1.0);
  EXPECT_NEAR(to_double(opt.p_success), inv_e, 2e-4);
  EXPECT_NEAR(opt.t_star / 10000.0, inv_e, 1e-3);
}

TEST(ExactPjTest, Examples) {
  EXPECT_EQ(exact_pj(4, 2, 0), q(1, 6));
  EXPECT_EQ(exact_pj(4, 2, 1), q(2, 6));
  EXPECT_EQ(exact_pj(4, 2, 2), q(3, 6));
  EXPECT_EQ(exact_pj(4, 2, 3), 0);
  EXPECT_THROW(exact_pj(5, 2, 0), PreconditionError);
  EXPECT_THROW(exact_pj(4, 1, 0), PreconditionError);
  EXPECT_THROW(exact_pj(4, 2, -1), PreconditionError);
  EXPECT_THROW(exact_pj(6, 6, 0), PreconditionError);
}

TEST(ExactPjTest, MassSumsToOneExactly) {
  for (int k = 2; k <= 6; ++k) {
    for (int l = 1; l <= 40; ++l) {
      const int n = k * l;
      if (n - l < k) continue;
      Rational sum(0);
      for (int j = 0; j <= l; ++j) {
        const Rational p = exact_pj(n, k, j);
        EXPECT_GE(p, 0);
        EXPECT_LE(p, 1);
        sum += p;
      }
      EXPECT_EQ(sum, 1) << "N=" << n << " K=" << k;
    }
  }
}

TEST(ExactSuccessGivenJTest, Examples) {
  EXPECT_EQ(exact_success_given_j(2, 1, 0), q(1, 2));
  EXPECT_EQ(exact_success_given_j(2, 1, 1), 1);
  EXPECT_EQ(exact_success_given_j(2, 1, 2), q(1, 2));
  EXPECT_THROW(exact_success_given_j(2, 1, 3), PreconditionError);
  EXPECT_THROW(exact_success_given_j(2, 3, 0), PreconditionError);
  EXPECT_THROW(exact_success_given_j(2, 0, 0), PreconditionError);
}

TEST(ExactSuccessGivenJTest, DegenerateCutoffNeverSelects) {
  for (int l = 1; l <= 30; ++l) EXPECT_EQ(exact_success_given_j(l, l, 0), 0);
}

TEST(ExactSuccessGivenJTest, MatchesConditionalEnumeration) {
  const struct { int n, k; } cases[] = {{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {10, 2}, {12, 4}};
  for (const auto& c : cases) {
    const int l = c.n / c.k;
    for (int b = 1; b <= l; ++b) {
      const ByJ e = enumerate_by_j(c.n, c.k, b);
      for (const auto& [j, count] : e.cases) {
        const long wins = e.wins.count(j) ? e.wins.at(j) : 0;
        EXPECT_EQ(exact_success_given_j(l, b, j), q(wins, count))
            << "N=" << c.n << " K=" << c.k << " B=" << b << " j=" << j;
        EXPECT_EQ(exact_pj(c.n, c.k, j), q(count, e.total));
      }
    }
  }
}

TEST(ExactSuccessGivenJTest, RangeAndMonotoneSanity) {
  for (int l = 1; l <= 25; ++l) {
    for (int b = 1; b <= l; ++b) {
      const Rational one_competitor = exact_success_given_j(l, b, 1);
      for (int j = 0; j <= l; ++j) {
        const Rational v = exact_success_given_j(l, b, j);
        EXPECT_GE(v, 0);
        EXPECT_LE(v, 1);
        if (j >= 2) {
          EXPECT_GE(one_competitor, v) << "L=" << l << " B=" << b << " j=" << j;
        }
      }
    }
  }
}

// The product over l is squeezed between the j-1 powers of its smallest and
// largest factor; the weighted sums must bracket the exact value.
TEST(ExactSuccessGivenJTest, SandwichBoundsBracketExactValue) {
  for (int l = 2; l <= 20; ++l) {
    for (int b = 1; b <= l; ++b) {
      for (int j = 1; j <= l; ++j) {
        Rational lower(0), upper(0);
        for (int r = 1; r <= l - j + 1; ++r) {
          const Rational w = r > b ? q(b, r - 1) : Rational(1);
          Rational lo_base = 1 - q(r - 1, l + 1 - j);
          Rational hi_base = 1 - q(r - 1, l - 1);
          Rational lo(1), hi(1);
          for (int e = 0; e < j - 1; ++e) {
            lo *= lo_base;
            hi *= hi_base;
          }
          lower += w * lo;
          upper += w * hi;
        }
        lower /= l;
        upper /= l;
        const Rational exact = exact_success_given_j(l, b, j);
        EXPECT_LE(lower, exact) << "L=" << l << " B=" << b << " j=" << j;
        EXPECT_GE(upper, exact) << "L=" << l << " B=" << b << " j=" << j;
      }
    }
  }
}

TEST(ExactRTest, HandVerifiedAnchor) {
  EXPECT_EQ(exact_r(4, 2, 0.5), q(2, 3));
  EXPECT_EQ(brute_force_r(4, 2, 0.5), q(2, 3));
}

TEST(ExactRTest, KEqualOneIsSecretaryOptimum) {
  EXPECT_EQ(exact_r(4, 1, 0.5), q(11, 24));
  EXPECT_EQ(exact_r(4, 1, 0.9), q(11, 24));
}

TEST(ExactRTest, FrozenValuesFromIndependentEnumeration) {
  // Values from a separate exhaustive enumeration in exact fractions.
  EXPECT_EQ(exact_r(6, 3, 0.63), q(3, 5));
  EXPECT_EQ(exact_r(8, 2, 0.25), q(829, 1680));
  EXPECT_EQ(exact_r(6, 2, 0.5), q(7, 12));
  EXPECT_EQ(exact_r(9, 3, 0.63), q(13, 21));
  EXPECT_NEAR(to_double(exact_r(200, 2, 0.63)), 0.47695143588067457, 1e-15);
}

TEST(ExactRTest, RejectsInvalidArguments) {
  EXPECT_THROW(exact_r(5, 2, 0.5), PreconditionError);
  EXPECT_THROW(exact_r(3, 3, 0.5), PreconditionError);
  EXPECT_THROW(brute_force_r(14, 2, 0.5), PreconditionError);
  EXPECT_THROW(brute_force_r(4, 1, 0.5), PreconditionError);
}

TEST(BruteForceRTest, OracleEquivalenceGrid) {
  const double betas[] = {0.1, 0.25, 0.5, 0.63, 0.9};
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= kBruteForceMaxN; n += k) {
      if (n - n / k < k) continue;
      for (double beta : betas) {
        const Rational exact = exact_r(n, k, beta);
        EXPECT_EQ(brute_force_r(n, k, beta), exact) << "N=" << n << " K=" << k << " beta=" << beta;
        EXPECT_GE(exact, 0);
        EXPECT_LE(exact, 1);
      }
    }
  }
}

}  // namespace
}  // namespace swh
