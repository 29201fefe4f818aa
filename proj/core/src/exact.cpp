#include "swh/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "swh/error.hpp"
#include "swh/strategy.hpp"

namespace swh {

namespace {

void check_pj_args(int n, int k) {
  if (k < 2) throw PreconditionError("K must be >= 2");
  if (n < 1 || n % k != 0) throw PreconditionError("K must divide N");
  if (n - n / k < k) throw PreconditionError("history must hold at least K items (N - N/K >= K)");
}

void check_given_j_args(int l, int b, int j) {
  if (l < 1) throw PreconditionError("L must be positive");
  if (b < 1 || b > l) throw PreconditionError("B must lie in [1, L]");
  if (j < 0 || j > l) throw PreconditionError("j must lie in [0, L]");
}

mpz_class binomial(int n, int r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

}  // namespace

Rational secretary_success(int n, int t) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (t < 0 || t >= n) throw PreconditionError("cutoff t must lie in [0, n)");
  if (t == 0) return make_rational(1, n);
  Rational out = make_rational(t, n) * harmonic_range(t, n - 1);
  out.canonicalize();
  return out;
}

SecretaryOptimum optimal_cutoff(int n) {
  if (n < 1) throw PreconditionError("n must be positive");

  // tail[t] = sum_{m=t}^{n-1} 1/m; the optimum is the first t with tail[t+1] <= 1.
  std::vector<long double> tail(static_cast<std::size_t>(n) + 1, 0.0L);
  for (int m = n - 1; m >= 1; --m) tail[m] = tail[m + 1] + 1.0L / m;
  int t = 0;
  while (t < n - 1 && tail[t + 1] > 1.0L) ++t;

  const Rational one(1);
  while (t > 0 && harmonic_range(t, n - 1) <= one) --t;
  while (t < n - 1 && harmonic_range(t + 1, n - 1) > one) ++t;

  return SecretaryOptimum{n, t, secretary_success(n, t)};
}

Rational exact_pj(int n, int k, int j) {
  check_pj_args(n, k);
  if (j < 0) throw PreconditionError("j must be nonnegative");
  const int l = n / k;
  if (j > l) return Rational(0);

  mpz_class num = binomial(j + k - 1, k - 1);
  mpz_class den = 1;
  for (int i = 0; i <= k - 1; ++i) {
    num *= n - l - i;
    den *= n - i;
  }
  for (int i = 0; i <= j - 1; ++i) {
    num *= l - i;
    den *= n - k - i;
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational exact_success_given_j(int l, int b, int j) {
  check_given_j_args(l, b, j);
  if (j == 0) return b == l ? Rational(0) : secretary_success(l, b);

  const int last = l - j + 1;
  mpz_class early = 0;  // r <= B: the maximum wins whenever it precedes the other j-1
  std::vector<mpz_class> nums;
  std::vector<mpz_class> dens;
  for (int r = 1; r <= last; ++r) {
    mpz_class ways = binomial(l - r, j - 1);
    if (r <= b) {
      early += ways;
    } else {
      nums.push_back(ways * b);
      dens.emplace_back(r - 1);
    }
  }
  Rational total = Rational(early) + sum_fractions(nums, dens);
  Rational out = total / (Rational(binomial(l - 1, j - 1)) * l);
  out.canonicalize();
  return out;
}

Rational exact_r(const ProblemConfig& config) {
  if (config.k == 1) return optimal_cutoff(config.n_total).p_success;
  check_pj_args(config.n_total, config.k);

  const int l = config.l_selection;
  Rational total(0);
  for (int j = 0; j <= l; ++j) {
    total += exact_pj(config.n_total, config.k, j) *
             exact_success_given_j(l, config.b_cutoff, j);
  }
  total.canonicalize();
  return total;
}

Rational exact_r(int n, int k, double beta) { return exact_r(ProblemConfig::make(n, k, beta)); }

Rational brute_force_r(int n, int k, double beta) {
  if (n > kBruteForceMaxN) {
    throw PreconditionError("brute force enumeration is limited to N <= " +
                            std::to_string(kBruteForceMaxN));
  }
  const ProblemConfig config = ProblemConfig::make(n, k, beta);
  if (config.k < 2) throw PreconditionError("brute force requires K >= 2");

  const int history = config.history_size();
  std::uint64_t successes = 0;
  std::uint64_t cases = 0;
  std::vector<int> order(static_cast<std::size_t>(n));

  // Each mask picks the history set; every ordering of the rest is a
  // selection sequence. History order does not affect the strategy.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != history) continue;
    std::vector<int> hist;
    std::vector<int> sel;
    for (int r = 1; r <= n; ++r) ((mask >> (r - 1)) & 1u ? hist : sel).push_back(r);
    do {
      std::copy(hist.begin(), hist.end(), order.begin());
      std::copy(sel.begin(), sel.end(), order.begin() + history);
      const StrategyTrace trace = run_swh_strategy(config, RankSequence(order, history));
      successes += trace.success ? 1 : 0;
      ++cases;
    } while (std::next_permutation(sel.begin(), sel.end()));
  }

  Rational out(mpz_class(static_cast<unsigned long>(successes)),
               mpz_class(static_cast<unsigned long>(cases)));
  out.canonicalize();
  return out;
}

}  // namespace swh
