#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hypermst/errors.hpp"
#include "hypermst/theory/giant_component.hpp"
#include "hypermst/theory/quadrature.hpp"

namespace hypermst::theory {

/// zeta(3) = sum_{k>=1} 1/k^3, summed smallest-first to 10^6 terms with an
/// Euler-Maclaurin tail.
inline double zeta3() {
  static const double value = [] {
    constexpr int kTerms = 1'000'000;
    double sum = 0.0;
    for (int k = kTerms; k >= 1; --k) {
      const double kd = k;
      sum += 1.0 / (kd * kd * kd);
    }
    const double kt = kTerms;
    const double tail = 1.0 / (2.0 * kt * kt) - 1.0 / (2.0 * kt * kt * kt) + 1.0 / (4.0 * kt * kt * kt * kt);
    return sum + tail;
  }();
  return value;
}

/// sum_{k=1}^{terms} 1/k^3.
inline double zeta3_partial(std::size_t terms) {
  double sum = 0.0;
  for (std::size_t k = terms; k >= 1; --k) {
    const auto kd = static_cast<double>(k);
    sum += 1.0 / (kd * kd * kd);
  }
  return sum;
}

/// Which greedy algorithm a limit refers to.
enum class Algorithm { kruskal_upper = 1, clique_lower = 2 };

/// Two candidate limits for E[K_i - 1] given a giant fraction beta:
///  - complement_power: t(1 - beta) - (1 - beta)^t
///  - beta_power:       t(1 - beta) - (1 - beta^t)
/// They agree at beta in {0, 1}. complement_power is the expectation of
/// K - 1 when the edge's vertices fall in the giant independently with
/// probability beta; the harness measures which one the simulation follows.
enum class F2Form { complement_power, beta_power };

inline std::string to_string(F2Form form) {
  return form == F2Form::complement_power ? "complement_power" : "beta_power";
}

/// Limit of E[alpha_l(G_{i-1}, e_i)] / E[w_i] as a function of beta.
inline double f_ratio(Algorithm alg, std::size_t t, double beta,
                      F2Form form = F2Form::complement_power) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
  const auto td = static_cast<double>(t);
  if (alg == Algorithm::kruskal_upper) return 1.0 - std::pow(beta, td);
  const double spread = td * (1.0 - beta);
  if (form == F2Form::complement_power) return spread - std::pow(1.0 - beta, td);
  return spread - (1.0 - std::pow(beta, td));
}

namespace detail {

inline double ratio_at_density(Algorithm alg, std::size_t t, double x, F2Form form) {
  const double beta = x <= critical_density(t) ? 0.0 : beta_of_c(t, x).beta;
  return f_ratio(alg, t, beta, form);
}

// c*, 2c*, 4c*, ..., c: the integrand varies fastest just above threshold.
inline std::vector<double> supercritical_breakpoints(std::size_t t, double c) {
  std::vector<double> points{critical_density(t)};
  while (points.back() * 2.0 < c) points.push_back(points.back() * 2.0);
  points.push_back(c);
  return points;
}

inline double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace detail

/// Limit of the greedy prefix sum A_c = sum_{i <= cn} alpha_l(G_{i-1}, e_i):
///
///   a (t!)^{1/(t-1)} [ f_l(0) * int_0^{min(c,c*)} x^{1/(t-1)} dx
///                      + int_{c*}^{c} x^{1/(t-1)} f_l(beta(x)) dx ].
///
/// The subcritical piece is closed form; the rest is adaptive Simpson.
inline double prefix_integral(Algorithm alg, std::size_t t, double c, double a = 1.0,
                              F2Form form = F2Form::complement_power, double abs_tol = 1e-9) {
  if (t < 2) throw DomainError("t must be at least 2");
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("edge density c must be >= 0");
  if (!(a > 0.0)) throw DomainError("scale a must be positive");
  const double power = 1.0 / static_cast<double>(t - 1);
  const double scale = a * std::pow(detail::factorial(t), power);
  const double threshold = critical_density(t);

  const double below = std::min(c, threshold);
  double sum = f_ratio(alg, t, 0.0, form) * std::pow(below, power + 1.0) / (power + 1.0);
  if (c > threshold) {
    const auto points = detail::supercritical_breakpoints(t, c);
    const auto integrand = [&](double x) {
      return std::pow(x, power) * detail::ratio_at_density(alg, t, x, form);
    };
    sum += integrate_piecewise(integrand, points, abs_tol / scale).value;
  }
  return scale * sum;
}

/// Predicted C(G_t(n, cn)) / n. Every arrival lowers the component count by
/// K_i - 1, so the fraction is 1 - int_0^c E[K - 1] dx.
inline double component_fraction(std::size_t t, double c, F2Form form = F2Form::complement_power,
                                 double abs_tol = 1e-10) {
  if (!(c >= 0.0)) throw DomainError("edge density c must be >= 0");
  const double threshold = critical_density(t);
  double merged = static_cast<double>(t - 1) * std::min(c, threshold);
  if (c > threshold) {
    const auto points = detail::supercritical_breakpoints(t, c);
    merged += integrate_piecewise(
                  [&](double x) {
                    return detail::ratio_at_density(Algorithm::clique_lower, t, x, form);
                  },
                  points, abs_tol)
                  .value;
  }
  return 1.0 - merged;
}

struct TheoryConstants {
  std::size_t t = 0;
  double lower = 0.0;  ///< L_t
  double upper = 0.0;  ///< U_t
  double gap_ratio = 0.0;
  double quadrature_error_bound = 0.0;
  double critical_density = 0.0;
};

/// L_t and U_t for scale a = 1:
///
///   L_t = ((t-1)!)^{1/(t-1)} (t-1)/t^2 int_0^1 g(x)^{t/(t-1)} (1 - (1-x)^{t-1}) dx
///   U_t = ((t-1)!)^{1/(t-1)} (t-1)/t   int_0^1 g(x)^{t/(t-1)} x^{t-1} dx
///   g(x) = ln(1-x) / ((1-x)^{t-1} - 1)
///
/// The logarithmic singularity at x = 1 is removed with x = 1 - e^{-u}; the
/// u-range is cut where the integrand envelope drops below 1e-14 and the
/// remaining tail is bounded with the incomplete gamma function.
inline TheoryConstants bound_constants(std::size_t t, double abs_tol = 1e-10) {
  if (t < 2) throw DomainError("t must be at least 2");
  const auto td = static_cast<double>(t);
  const double exponent = td / (td - 1.0);

  // (u / (1 - e^{-(t-1)u}))^{t/(t-1)} e^{-u}: g^{t/(t-1)} dx after substitution.
  const auto base = [&](double u) {
    if (u == 0.0) return std::pow(1.0 / (td - 1.0), exponent);
    return std::pow(u / -std::expm1(-(td - 1.0) * u), exponent) * std::exp(-u);
  };
  const auto lower_integrand = [&](double u) { return base(u) * -std::expm1(-(td - 1.0) * u); };
  const auto upper_integrand = [&](double u) {
    return base(u) * std::pow(-std::expm1(-u), td - 1.0);
  };

  double cutoff = std::ceil(2.0 * exponent + 2.0);
  while (base(cutoff) >= 1e-14) cutoff += 1.0;
  // int_U^inf u^s e^{-u} du <= U^s e^{-U} / (1 - s/U) for U > s; both
  // trailing factors are at most 1.
  const double tail = std::pow(cutoff, exponent) * std::exp(-cutoff) / (1.0 - exponent / cutoff) /
                      std::pow(-std::expm1(-(td - 1.0) * cutoff), exponent);

  std::vector<double> points;
  for (double u = 0.0; u < cutoff; u += 1.0) points.push_back(u);
  points.push_back(cutoff);

  const double prefactor = std::pow(detail::factorial(t - 1), 1.0 / (td - 1.0)) * (td - 1.0) / td;
  const auto lower_raw = integrate_piecewise(lower_integrand, points, abs_tol);
  const auto upper_raw = integrate_piecewise(upper_integrand, points, abs_tol);

  TheoryConstants out;
  out.t = t;
  out.lower = prefactor / td * lower_raw.value;
  out.upper = prefactor * upper_raw.value;
  out.gap_ratio = out.upper / out.lower;
  out.critical_density = critical_density(t);
  out.quadrature_error_bound =
      prefactor * (abs_tol + std::max(lower_raw.error_estimate, upper_raw.error_estimate) + tail);
  return out;
}

/// Upper surrogate for the normalized component count after c*n arrivals:
/// 1 - beta_graph(2c), where beta_graph(kappa) solves beta + e^{-kappa beta} = 1.
inline double decay_surrogate(double c) {
  if (!(c > 0.0)) throw DomainError("edge density c must be positive");
  return graph_giant_fraction(2.0 * c).survival;
}

}  // namespace hypermst::theory
