#include "swh/asymptotic.hpp"

#include <cmath>
#include <sstream>

#include "swh/compensated_sum.hpp"
#include "swh/error.hpp"
#include "swh/quadrature.hpp"

namespace swh {

namespace {

constexpr long kTailTermCap = 10'000'000;
constexpr int kQTermCap = 1'000'000;
constexpr double kMinMassResolution = 1e-14;

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw PreconditionError("beta must lie in (0, 1)");
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
}

}  // namespace

double p_limit(int k, int j) {
  if (k < 2) throw PreconditionError("K must be >= 2");
  if (j < 0) throw PreconditionError("j must be nonnegative");
  const double inv_k = 1.0 / k;
  double p = std::pow(1.0 - inv_k, k);
  for (int i = 0; i < j; ++i) p *= static_cast<double>(i + k) / (i + 1) * inv_k;
  return p;
}

double q_zero(double beta) {
  check_beta(beta);
  return -beta * std::log(beta);
}

SeriesValue tail_integral(double beta, int j, double tol) {
  check_beta(beta);
  check_tol(tol);
  if (j < 1) throw PreconditionError("j must be >= 1");

  const double u = 1.0 - beta;
  double power = std::pow(u, j);  // u^(j+m)
  CompensatedSum sum;
  SeriesValue out;
  out.tolerance = tol;
  for (long m = 0; m < kTailTermCap; ++m) {
    sum.add(power / static_cast<double>(j + m));
    power *= u;
    const double bound = power / (static_cast<double>(j + m + 1) * beta);
    if (bound <= tol) {
      out.value = sum.value();
      out.terms_used = static_cast<int>(m + 1);
      out.residual_bound = bound;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "tail integral series did not reach tol " << tol << " within " << kTailTermCap
      << " terms (beta=" << beta << ", j=" << j << ")";
  throw ConvergenceError(msg.str());
}

double tail_integral_quadrature(double beta, int j, double tol) {
  check_beta(beta);
  check_tol(tol);
  if (j < 1) throw PreconditionError("j must be >= 1");
  auto integrand = [j](double x) { return std::pow(1.0 - x, j - 1) / x; };
  return adaptive_simpson(integrand, beta, 1.0, tol).value;
}

double q_limit(double beta, int j, double tol) {
  check_beta(beta);
  if (j < 0) throw PreconditionError("j must be nonnegative");
  if (j == 0) return q_zero(beta);
  const double head = (1.0 - std::pow(1.0 - beta, j)) / j;
  return head + beta * tail_integral(beta, j, tol).value;
}

SeriesValue asymptotic_q(int k, double beta, double tol) {
  if (k < 2) throw PreconditionError("K must be >= 2");
  check_beta(beta);
  check_tol(tol);

  const double inv_k = 1.0 / k;
  const double mass_target = 0.5 * tol;
  const double tail_tol = 0.5 * tol;
  // 1 - mass cannot be resolved below a few ulps of 1.
  if (mass_target < kMinMassResolution) {
    std::ostringstream msg;
    msg << "Q series tolerance " << tol << " is below what double precision can certify ("
        << 2 * kMinMassResolution << ")";
    throw ConvergenceError(msg.str());
  }

  double p = std::pow(1.0 - inv_k, k);
  CompensatedSum mass;
  CompensatedSum value;
  for (int j = 0; j < kQTermCap; ++j) {
    mass.add(p);
    value.add(p * (j == 0 ? q_zero(beta) : q_limit(beta, j, tail_tol)));
    const double missing = std::fmax(0.0, 1.0 - mass.value());
    if (missing <= mass_target) {
      SeriesValue out;
      out.value = value.value();
      out.terms_used = j + 1;
      out.residual_bound = missing + beta * tail_tol * mass.value();
      out.tolerance = tol;
      return out;
    }
    p *= static_cast<double>(j + k) / (j + 1) * inv_k;
  }
  std::ostringstream msg;
  msg << "Q series did not capture probability mass 1 - " << mass_target << " within "
      << kQTermCap << " terms (K=" << k << ")";
  throw ConvergenceError(msg.str());
}

BetaOptimum optimize_beta(int k, double tol) {
  if (k < 2) throw PreconditionError("K must be >= 2");
  check_tol(tol);

  constexpr double kLo = 0.01;
  constexpr double kHi = 0.99;
  constexpr double kStep = 1e-3;
  constexpr int kGridPoints = 981;
  auto q = [&](double beta) { return asymptotic_q(k, beta, tol).value; };

  // Golden-section search, assuming Q(K, .) is unimodal on [kLo, kHi].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kLo;
  double b = kHi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = q(c);
  double fd = q(d);
  while (b - a > 1e-8) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = q(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = q(d);
    }
  }
  const double golden_beta = 0.5 * (a + b);
  const double golden_q = q(golden_beta);

  BetaOptimum out;
  out.k = k;
  out.grid_q = -1.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double beta = kLo + i * kStep;
    const double value = q(beta);
    if (value > out.grid_q) {
      out.grid_q = value;
      out.grid_beta = beta;
    }
  }

  std::ostringstream note;
  note << "golden-section on [0.01, 0.99] to width 1e-8; grid scan " << kGridPoints
       << " points, step 1e-3";
  if (golden_q >= out.grid_q) {
    out.beta_star = golden_beta;
    out.q_star = golden_q;
    note << "; golden-section result kept";
  } else {
    out.beta_star = out.grid_beta;
    out.q_star = out.grid_q;
    if (golden_q < out.grid_q - tol) {
      note << "; disagreement beyond tol: golden beta=" << golden_beta << " q=" << golden_q
           << ", grid preferred";
    } else {
      note << "; grid point kept (within tol of golden-section)";
    }
  }
  out.method_note = note.str();
  return out;
}

}  // namespace swh
