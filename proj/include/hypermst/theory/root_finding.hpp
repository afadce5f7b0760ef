#pragma once

#include <cmath>
#include <string>

#include "hypermst/errors.hpp"

namespace hypermst::theory {

struct RootResult {
  double x = 0.0;
  double lower = 0.0;  ///< final bracket
  double upper = 0.0;
  int iterations = 0;
};

/// Bisection for an increasing function with f(lo) < 0 < f(hi).
///
/// Every midpoint value is checked against the current bracket values, so
/// a function that turns out not to be monotone on the bracket raises
/// NumericalError instead of silently converging to a wrong root.
template <class F>
RootResult bisect_increasing(F&& f, double lo, double hi, double x_tol, int max_iterations = 200) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw NumericalError("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] does not straddle a sign change");
  }
  RootResult result;
  while (hi - lo > x_tol) {
    if (result.iterations == max_iterations) {
      throw NumericalError("bisection did not converge in " + std::to_string(max_iterations) +
                           " steps");
    }
    ++result.iterations;
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double f_mid = f(mid);
    if (f_mid < f_lo || f_mid > f_hi || std::isnan(f_mid)) {
      throw NumericalError("function is not increasing on the bisection bracket");
    }
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  result.lower = lo;
  result.upper = hi;
  result.x = lo + 0.5 * (hi - lo);
  return result;
}

}  // namespace hypermst::theory
