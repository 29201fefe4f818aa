#include "swh/config.hpp"

#include <algorithm>
#include <cmath>

#include "swh/error.hpp"

namespace swh {

int phase_one_length(double beta, int length) {
  const double product = beta * static_cast<double>(length);
  const double nearest = std::nearbyint(product);
  double b = std::ceil(product);
  if (std::fabs(product - nearest) <= 1e-9 * std::fmax(1.0, std::fabs(product))) {
    b = nearest;
  }
  return static_cast<int>(std::clamp(b, 1.0, static_cast<double>(length)));
}

ProblemConfig ProblemConfig::make(int n_total, int k, double beta) {
  if (n_total < 1) throw PreconditionError("N must be positive");
  if (k < 1) throw PreconditionError("K must be positive");
  if (n_total % k != 0) throw PreconditionError("K must divide N");
  if (!(beta > 0.0 && beta < 1.0)) throw PreconditionError("beta must lie in (0, 1)");

  ProblemConfig c;
  c.n_total = n_total;
  c.k = k;
  c.beta = beta;
  c.l_selection = n_total / k;
  if (k >= 2 && c.history_size() < k) {
    throw PreconditionError("history must hold at least K items (N - N/K >= K)");
  }
  c.b_cutoff = phase_one_length(beta, c.l_selection);
  return c;
}

}  // namespace swh
