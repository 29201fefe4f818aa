#pragma once

#include <cmath>

#include "swh/error.hpp"

namespace swh {

struct QuadratureResult {
  double value = 0.0;
  long evaluations = 0;
};

namespace detail {

template <class F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth, long& evals) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw ConvergenceError("adaptive Simpson: recursion depth exhausted");
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, evals) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, evals);
}

}  // namespace detail

/// Adaptive Simpson on [a, b] with the Richardson stopping rule
/// |S(left) + S(right) - S(whole)| <= 15 tol, halving tol on each split.
template <class F>
QuadratureResult adaptive_simpson(F f, double a, double b, double tol, int max_depth = 50) {
  QuadratureResult out;
  if (a == b) return out;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  out.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  out.value = detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth, out.evaluations);
  return out;
}

}  // namespace swh
