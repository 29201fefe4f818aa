#include <cmath>

#include "swh/compensated_sum.hpp"
#include "swh/error.hpp"
#include "swh/exact.hpp"

namespace swh {

namespace {

void check_pj_args(int n, int k) {
  if (k < 2) throw PreconditionError("K must be >= 2");
  if (n < 1 || n % k != 0) throw PreconditionError("K must divide N");
  if (n - n / k < k) throw PreconditionError("history must hold at least K items (N - N/K >= K)");
}

double cutoff_rule_fast(int l, int b) {
  if (b == l) return 0.0;
  double tail = 0.0;
  for (int m = l - 1; m >= b; --m) tail += 1.0 / m;
  return static_cast<double>(b) / l * tail;
}

}  // namespace

std::vector<double> exact_pj_table_fast(int n, int k) {
  check_pj_args(n, k);
  const int l = n / k;
  std::vector<double> p(static_cast<std::size_t>(l) + 1);
  double p0 = 1.0;
  for (int i = 0; i <= k - 1; ++i) p0 *= static_cast<double>(n - l - i) / (n - i);
  p[0] = p0;
  // P[J = j+1] / P[J = j] = (j+K)/(j+1) * (L-j)/(N-K-j)
  for (int j = 0; j < l; ++j) {
    p[j + 1] = p[j] * (static_cast<double>(j + k) / (j + 1)) *
               (static_cast<double>(l - j) / (n - k - j));
  }
  return p;
}

double exact_pj_fast(int n, int k, int j) {
  check_pj_args(n, k);
  if (j < 0) throw PreconditionError("j must be nonnegative");
  if (j > n / k) return 0.0;
  return exact_pj_table_fast(n, k)[j];
}

double exact_success_given_j_fast(int l, int b, int j) {
  if (l < 1) throw PreconditionError("L must be positive");
  if (b < 1 || b > l) throw PreconditionError("B must lie in [1, L]");
  if (j < 0 || j > l) throw PreconditionError("j must lie in [0, L]");
  if (j == 0) return cutoff_rule_fast(l, b);

  double sum = 0.0;
  for (int r = 1; r <= l - j + 1; ++r) {
    double prod = 1.0;
    for (int i = 0; i <= j - 2; ++i) prod *= 1.0 - static_cast<double>(r - 1) / (l - 1 - i);
    sum += (r > b ? static_cast<double>(b) / (r - 1) : 1.0) * prod;
  }
  return sum / l;
}

std::vector<double> exact_success_given_j_table_fast(int l, int b) {
  if (l < 1) throw PreconditionError("L must be positive");
  if (b < 1 || b > l) throw PreconditionError("B must lie in [1, L]");

  std::vector<double> out(static_cast<std::size_t>(l) + 1);
  out[0] = cutoff_rule_fast(l, b);

  std::vector<double> weight(static_cast<std::size_t>(l) + 1);
  std::vector<double> prod(static_cast<std::size_t>(l) + 1, 1.0);
  for (int r = 1; r <= l; ++r) weight[r] = r > b ? static_cast<double>(b) / (r - 1) : 1.0;

  for (int j = 1; j <= l; ++j) {
    const int last = l - j + 1;
    if (j >= 2) {
      const double denom = l - 1 - (j - 2);
      for (int r = 1; r <= last; ++r) prod[r] *= 1.0 - (r - 1) / denom;
    }
    double sum = 0.0;
    for (int r = 1; r <= last; ++r) sum += weight[r] * prod[r];
    out[j] = sum / l;
  }
  return out;
}

double exact_r_fast(int n, int k, double beta) {
  const ProblemConfig config = ProblemConfig::make(n, k, beta);
  if (config.k == 1) return to_double(optimal_cutoff(n).p_success);

  const std::vector<double> pj = exact_pj_table_fast(n, k);
  const std::vector<double> given = exact_success_given_j_table_fast(config.l_selection, config.b_cutoff);
  CompensatedSum total;
  for (std::size_t j = 0; j < pj.size(); ++j) total.add(pj[j] * given[j]);
  return total.value();
}

}  // namespace swh
