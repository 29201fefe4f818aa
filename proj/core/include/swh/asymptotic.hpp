#pragma once

#include <string>

namespace swh {

/// A truncated series. residual_bound bounds |true sum - value| and is at
/// most `tolerance` whenever the producing call returns normally.
struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  double residual_bound = 0.0;
  double tolerance = 0.0;
};

struct BetaOptimum {
  int k = 0;
  double beta_star = 0.0;
  double q_star = 0.0;
  double grid_beta = 0.0;  // best point of the validating grid scan
  double grid_q = 0.0;
  std::string method_note;
};

/// Limiting success probability for K = 1 (the classical secretary problem).
inline constexpr double kSecretaryLimit = 0.36787944117144233;

/// Limiting law of J: C(j+K-1, K-1) (1 - 1/K)^K K^-j, a negative binomial.
double p_limit(int k, int j);

/// Limiting P[success | J = 0] = beta log(1/beta).
double q_zero(double beta);

/// Integral of (1-x)^(j-1) / x over [beta, 1], as the series
/// sum_{m>=0} (1-beta)^(j+m) / (j+m). The tail after M terms is bounded by
/// (1-beta)^(j+M+1) / ((j+M+1) beta). Throws ConvergenceError past 10^7 terms.
SeriesValue tail_integral(double beta, int j, double tol);

/// Same integral by adaptive Simpson; kept as an independent cross-check.
double tail_integral_quadrature(double beta, int j, double tol);

/// Limiting P[success | J = j]: q_zero for j = 0, otherwise
/// (1 - (1-beta)^j)/j + beta * tail_integral(beta, j).
double q_limit(double beta, int j, double tol);

/// Q(K, beta) = sum_j p_limit(K, j) q_limit(beta, j).
///
/// Terms are added in ascending j with compensated summation. Since every
/// q(j) lies in [0, 1], stopping once the accumulated p-mass reaches
/// 1 - tol/2 leaves at most the missing mass as error; the tail integrals run
/// at tol/2 and add at most beta * tol/2 more. Throws ConvergenceError if the
/// mass target is not reached in 10^6 terms or tol is below 2e-14, where the
/// missing mass is no longer resolvable in double precision.
SeriesValue asymptotic_q(int k, double beta, double tol);

/// Maximizes Q(K, .) over [0.01, 0.99] by golden-section search and checks it
/// against a grid scan with step 1e-3. The better of the two is returned;
/// method_note records which one won and whether they disagreed beyond tol.
BetaOptimum optimize_beta(int k, double tol);

}  // namespace swh
