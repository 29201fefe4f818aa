#pragma once

#include <vector>

#include "swh/config.hpp"
#include "swh/rational.hpp"

namespace swh {

/// Optimal cutoff rule for the classical secretary problem on n items.
struct SecretaryOptimum {
  int n = 0;
  int t_star = 0;
  Rational p_success;
};

/// Success probability of the cutoff rule that observes t of n items:
/// (t/n) * sum_{m=t}^{n-1} 1/m, and 1/n for t = 0.
Rational secretary_success(int n, int t);

/// argmax over t in [0, n) of secretary_success, ties toward smaller t.
///
/// Uses success(t+1) - success(t) = (sum_{m=t+1}^{n-1} 1/m - 1) / n: the
/// curve is unimodal and t_star is the first t whose tail sum is <= 1. The
/// boundary is located in long double and then confirmed exactly.
SecretaryOptimum optimal_cutoff(int n);

/// P[J = j] at finite N, where J counts selection items above the K-th
/// largest history item. Zero for j > L.
Rational exact_pj(int n, int k, int j);

/// P[success | J = j] for selection length L and phase-one length B.
///
/// j = 0 reduces to the cutoff rule with cutoff B (zero when B = L). For
/// j >= 1, conditioning on the position r of the selection maximum gives
///   (1/L) sum_{r=1}^{L-j+1} (B/(r-1))^[r>B] prod_{l=0}^{j-2} (1 - (r-1)/(L-1-l)).
/// The product equals C(L-r, j-1) / C(L-1, j-1), which is how it is evaluated.
Rational exact_success_given_j(int l, int b, int j);

/// R(N, K): exact success probability of the SwH strategy. For K = 1 this is
/// the optimal secretary probability on N items and beta is not used.
Rational exact_r(int n, int k, double beta);
Rational exact_r(const ProblemConfig& config);

inline constexpr int kBruteForceMaxN = 12;

/// R(N, K) by enumerating every (history set, selection order) pair and
/// running run_swh_strategy on each. Requires K >= 2 and N <= kBruteForceMaxN.
Rational brute_force_r(int n, int k, double beta);

// Double-precision route for large N. Products are accumulated
// incrementally over j, so the full tables cost O(L^2).

double exact_pj_fast(int n, int k, int j);
std::vector<double> exact_pj_table_fast(int n, int k);
double exact_success_given_j_fast(int l, int b, int j);
std::vector<double> exact_success_given_j_table_fast(int l, int b);
double exact_r_fast(int n, int k, double beta);

}  // namespace swh
