#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "hypermst/errors.hpp"
#include "hypermst/theory/root_finding.hpp"

namespace hypermst::theory {

/// c* = 1/(t(t-1)): edges per vertex at which the giant component appears.
inline double critical_density(std::size_t t) {
  if (t < 2) throw DomainError("t must be at least 2");
  const auto td = static_cast<double>(t);
  return 1.0 / (td * (td - 1.0));
}

/// Edge density c at which the giant holds fraction beta,
///   c = ln(1 - beta) / (t ((1 - beta)^{t-1} - 1)),
/// written in the log-survival y = -ln(1 - beta) so that it stays accurate
/// when beta is within rounding of 1. Increasing in y, from c* at y = 0.
inline double density_from_log_survival(std::size_t t, double y) {
  if (y <= 0.0) return critical_density(t);
  const auto td = static_cast<double>(t);
  return y / (td * -std::expm1(-(td - 1.0) * y));
}

inline double density_from_fraction(std::size_t t, double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("giant fraction must lie in [0, 1)");
  return density_from_log_survival(t, -std::log1p(-beta));
}

struct BetaSolution {
  std::size_t t = 0;
  double c = 0.0;
  double beta = 0.0;      ///< limiting giant-component fraction, kept below 1
  double survival = 1.0;  ///< 1 - beta, kept separately for accuracy near beta = 1
  double residual = 0.0;  ///< |c - density(beta)|, 0 below threshold
  int iterations = 0;
};

inline constexpr double kBetaTolerance = 1e-13;

namespace detail {

// Solves density(y) = target for y > 0 by bisection; density is increasing.
template <class Density>
RootResult solve_log_survival(Density&& density, double target) {
  double hi = 1.0;
  int doublings = 0;
  while (density(hi) <= target) {
    hi *= 2.0;
    if (++doublings > 1100) throw NumericalError("could not bracket giant-component root");
  }
  const auto root = bisect_increasing([&](double y) { return density(y) - target; }, 0.0, hi,
                                      kBetaTolerance * std::max(1.0, hi));
  return root;
}

}  // namespace detail

/// Limiting giant-component fraction beta(c) of the random t-uniform
/// hypergraph with c*n edges: 0 for c <= c*, otherwise the unique root of
/// the density equation above.
inline BetaSolution beta_of_c(std::size_t t, double c) {
  if (t < 2) throw DomainError("t must be at least 2");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("edge density c must be positive");
  BetaSolution out;
  out.t = t;
  out.c = c;
  if (c <= critical_density(t)) return out;
  const auto density = [t](double y) { return density_from_log_survival(t, y); };
  const auto root = detail::solve_log_survival(density, c);
  out.iterations = root.iterations;
  out.beta = std::min(-std::expm1(-root.x), std::nextafter(1.0, 0.0));
  out.survival = std::exp(-root.x);
  out.residual = std::abs(c - density(root.x));
  return out;
}

struct GraphGiant {
  double beta = 0.0;
  double survival = 1.0;
};

/// Giant fraction of the Erdos-Renyi graph with mean degree kappa:
/// the root of beta + exp(-kappa beta) = 1, or 0 when kappa <= 1.
inline GraphGiant graph_giant_fraction(double mean_degree) {
  if (!(mean_degree >= 0.0)) throw DomainError("mean degree must be non-negative");
  if (mean_degree <= 1.0) return {};
  // With y = -ln(1 - beta) the equation reads y / (1 - e^{-y}) = kappa.
  const auto ratio = [](double y) { return y <= 0.0 ? 1.0 : y / -std::expm1(-y); };
  const auto root = detail::solve_log_survival(ratio, mean_degree);
  return {-std::expm1(-root.x), std::exp(-root.x)};
}

}  // namespace hypermst::theory
