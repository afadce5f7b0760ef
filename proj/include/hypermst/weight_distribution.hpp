#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hypermst/errors.hpp"

namespace hypermst {

enum class DistributionKind { power, exponential, empirical };

inline std::string to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::power:
      return "power";
    case DistributionKind::exponential:
      return "exp";
    case DistributionKind::empirical:
      return "empirical";
  }
  return "unknown";
}

/// Edge-weight law X > 0 with scale a = lim_{x->0+} x / F(x)^{1/(t-1)}.
///
///  - power:       F(x) = (x/a)^{t-1} on [0, a]; the scaling limit equals a exactly.
///  - exponential: F(x) = 1 - exp(-rate x); only meaningful for t = 2, where a = 1/rate.
///  - empirical:   piecewise-linear inverse CDF through quantiles tabulated at
///                 u = 0, 1/K, ..., 1; `a` is supplied by the caller.
class WeightDistribution {
 public:
  static WeightDistribution power(std::size_t t, double a = 1.0) {
    if (t < 2) throw DomainError("power distribution needs t >= 2");
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("scale a must be positive");
    WeightDistribution d;
    d.kind_ = DistributionKind::power;
    d.arity_ = t;
    d.scale_ = a;
    return d;
  }

  static WeightDistribution exponential(double rate, std::size_t t = 2) {
    if (t != 2) {
      throw DomainError("exponential weights satisfy the scaling condition only for t = 2");
    }
    if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("rate must be positive");
    WeightDistribution d;
    d.kind_ = DistributionKind::exponential;
    d.arity_ = t;
    d.rate_ = rate;
    d.scale_ = 1.0 / rate;
    return d;
  }

  static WeightDistribution empirical(std::vector<double> quantiles, double a) {
    if (quantiles.size() < 2) throw DomainError("inverse-CDF table needs at least 2 points");
    if (!std::ranges::is_sorted(quantiles) || quantiles.front() < 0.0) {
      throw DomainError("inverse-CDF table must be non-negative and non-decreasing");
    }
    if (!(a > 0.0)) throw DomainError("scale a must be positive");
    WeightDistribution d;
    d.kind_ = DistributionKind::empirical;
    d.scale_ = a;
    d.table_ = std::move(quantiles);
    return d;
  }

  [[nodiscard]] DistributionKind kind() const noexcept { return kind_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }
  [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
  [[nodiscard]] double rate() const noexcept { return rate_; }

  /// F^{-1}(u) for u in [0, 1].
  [[nodiscard]] double inverse_cdf(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) {
      throw DomainError("inverse_cdf argument " + std::to_string(u) + " outside [0, 1]");
    }
    switch (kind_) {
      case DistributionKind::power:
        return scale_ * std::pow(u, 1.0 / static_cast<double>(arity_ - 1));
      case DistributionKind::exponential:
        return -std::log1p(-u) / rate_;
      case DistributionKind::empirical: {
        const double pos = u * static_cast<double>(table_.size() - 1);
        const auto lo = std::min(static_cast<std::size_t>(pos), table_.size() - 2);
        const double frac = pos - static_cast<double>(lo);
        return table_[lo] + frac * (table_[lo + 1] - table_[lo]);
      }
    }
    return 0.0;
  }

  [[nodiscard]] double cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (kind_) {
      case DistributionKind::power:
        return x >= scale_ ? 1.0 : std::pow(x / scale_, static_cast<double>(arity_ - 1));
      case DistributionKind::exponential:
        return -std::expm1(-rate_ * x);
      case DistributionKind::empirical: {
        if (x >= table_.back()) return 1.0;
        const auto it = std::ranges::upper_bound(table_, x);
        const auto hi = static_cast<std::size_t>(it - table_.begin());
        const auto lo = hi - 1;
        const double width = table_[hi] - table_[lo];
        const double frac = width > 0.0 ? (x - table_[lo]) / width : 0.0;
        return (static_cast<double>(lo) + frac) / static_cast<double>(table_.size() - 1);
      }
    }
    return 0.0;
  }

  /// Smallest x with F(x) = 1 (infinity for unbounded support).
  [[nodiscard]] double support_max() const noexcept {
    switch (kind_) {
      case DistributionKind::power:
        return scale_;
      case DistributionKind::exponential:
        return INFINITY;
      case DistributionKind::empirical:
        return table_.back();
    }
    return INFINITY;
  }

 private:
  WeightDistribution() = default;

  DistributionKind kind_ = DistributionKind::power;
  std::size_t arity_ = 2;
  double scale_ = 1.0;
  double rate_ = 1.0;
  std::vector<double> table_;
};

inline double inverse_cdf(const WeightDistribution& dist, double u) { return dist.inverse_cdf(u); }

}  // namespace hypermst
