#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "hypermst/errors.hpp"

namespace hypermst::theory {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< sum of |S2 - S1| / 15 over accepted panels
  std::size_t evaluations = 0;
};

inline constexpr int kSimpsonMaxDepth = 60;

namespace detail {

template <class F>
void simpson_panel(F& f, double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  out.evaluations += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::isnan(delta)) throw NumericalError("integrand returned NaN near x = " + std::to_string(m));
  if (std::abs(delta) <= 15.0 * tol) {
    out.value += left + right + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    return;
  }
  if (depth == 0) {
    throw NumericalError("adaptive Simpson hit depth cap on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "] without meeting tolerance");
  }
  simpson_panel(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
  simpson_panel(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction on [a, b].
template <class F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double abs_tol = 1e-9,
                                  int max_depth = kSimpsonMaxDepth) {
  QuadratureResult out;
  if (a == b) return out;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  out.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::simpson_panel(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, out);
  return out;
}

/// Integrates over consecutive breakpoints, spreading the tolerance in
/// proportion to panel length. Breakpoints must be increasing.
template <class F>
QuadratureResult integrate_piecewise(F&& f, std::span<const double> breakpoints,
                                     double abs_tol = 1e-9) {
  QuadratureResult total;
  if (breakpoints.size() < 2) return total;
  const double span = breakpoints.back() - breakpoints.front();
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double width = breakpoints[i + 1] - breakpoints[i];
    const auto part = adaptive_simpson(f, breakpoints[i], breakpoints[i + 1], abs_tol * width / span);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
  }
  return total;
}

}  // namespace hypermst::theory
