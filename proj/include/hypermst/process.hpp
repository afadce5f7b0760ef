#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hypermst/disjoint_set_forest.hpp"
#include "hypermst/errors.hpp"
#include "hypermst/hyperedge.hpp"
#include "hypermst/rng.hpp"
#include "hypermst/weight_distribution.hpp"

namespace hypermst {

/// N = C(n, t) as a double. Exact while N < 2^53.
inline double edge_universe_size(std::size_t n, std::size_t t) {
  if (t > n) return 0.0;
  long double result = 1.0L;
  for (std::size_t i = 1; i <= t; ++i) {
    result = result * static_cast<long double>(n - t + i) / static_cast<long double>(i);
  }
  return static_cast<double>(std::round(result));
}

/// Run-length ceiling min(C(n,t), ceil(2 n ln n)); past it the process is
/// connected with high probability.
inline std::size_t default_step_limit(std::size_t n, std::size_t t) {
  const double cap = std::ceil(2.0 * static_cast<double>(n) * std::log(static_cast<double>(n)));
  const double universe = edge_universe_size(n, t);
  return static_cast<std::size_t>(std::max(1.0, std::min(universe, cap)));
}

namespace detail {

inline void check_shape(std::size_t n, std::size_t t) {
  if (t < 2) throw MalformedEdgeError("edge arity t must be at least 2");
  if (t > kMaxArity) {
    throw MalformedEdgeError("edge arity " + std::to_string(t) + " exceeds maximum " +
                             std::to_string(kMaxArity));
  }
  if (n < t) {
    throw DomainError("need n >= t (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
  }
}

inline void check_within_universe(double universe, std::size_t m_max) {
  if (static_cast<double>(m_max) > universe) {
    throw ExhaustedUniverseError("requested " + std::to_string(m_max) +
                                 " distinct edges but only " +
                                 std::to_string(static_cast<long double>(universe)) + " exist");
  }
}

// Floyd's algorithm: a uniformly random t-subset of [0, n), returned sorted.
inline HyperEdge random_subset(std::size_t n, std::size_t t, Rng& rng) {
  std::array<Vertex, kMaxArity> chosen{};
  std::size_t k = 0;
  for (std::size_t j = n - t; j < n; ++j) {
    const auto r = static_cast<Vertex>(rng.below(j + 1));
    const bool seen = std::find(chosen.begin(), chosen.begin() + k, r) != chosen.begin() + k;
    chosen[k++] = seen ? static_cast<Vertex>(j) : r;
  }
  std::sort(chosen.begin(), chosen.begin() + t);
  return HyperEdge::from_canonical({chosen.data(), t});
}

inline std::vector<HyperEdge> all_edges(std::size_t n, std::size_t t) {
  std::vector<HyperEdge> edges;
  std::array<Vertex, kMaxArity> combo{};
  for (std::size_t i = 0; i < t; ++i) combo[i] = static_cast<Vertex>(i);
  while (true) {
    edges.push_back(HyperEdge::from_canonical({combo.data(), t}));
    std::size_t i = t;
    while (i > 0 && combo[i - 1] == n - t + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < t; ++j) combo[j] = combo[j - 1] + 1;
  }
  return edges;
}

}  // namespace detail

/// Counters reported by sample_edge_stream.
struct EdgeStreamStats {
  std::uint64_t draws = 0;     ///< candidate edges drawn
  std::uint64_t rejected = 0;  ///< draws discarded as repeats
  bool enumerated = false;     ///< true when the shuffle path was taken
};

/// The first m_max edges of a uniformly random ordering of all C(n,t)
/// edges. Each prefix is a uniform subset in uniform order.
///
/// Small requests (m_max <= N/2) draw uniform t-subsets and reject repeats;
/// larger ones enumerate every edge and partially shuffle.
inline std::vector<HyperEdge> sample_edge_stream(std::size_t n, std::size_t t, std::size_t m_max,
                                                 std::uint64_t seed,
                                                 EdgeStreamStats* stats = nullptr) {
  detail::check_shape(n, t);
  const double universe = edge_universe_size(n, t);
  detail::check_within_universe(universe, m_max);

  Rng rng(seed);
  EdgeStreamStats local;
  std::vector<HyperEdge> stream;
  stream.reserve(m_max);

  if (2.0 * static_cast<double>(m_max) > universe) {
    local.enumerated = true;
    stream = detail::all_edges(n, t);
    for (std::size_t i = 0; i < m_max; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(stream.size() - i));
      std::swap(stream[i], stream[j]);
    }
    stream.resize(m_max);
  } else {
    std::unordered_set<HyperEdge, HyperEdgeHash> seen;
    seen.reserve(2 * m_max);
    while (stream.size() < m_max) {
      HyperEdge edge = detail::random_subset(n, t, rng);
      ++local.draws;
      if (seen.insert(edge).second) {
        stream.push_back(edge);
      } else {
        ++local.rejected;
      }
    }
  }
  if (stats != nullptr) *stats = local;
  return stream;
}

/// The m_max smallest of `universe` iid draws from `dist`, ascending.
///
/// Uses the sequential spacing recursion on uniform order statistics,
///   1 - U_(i) = (1 - U_(i-1)) * V_i^{1/(N-i+1)},   V_i ~ U(0,1],
/// carried in log space, then maps through the inverse CDF. O(m_max).
inline std::vector<double> sorted_weights(double universe, std::size_t m_max,
                                          const WeightDistribution& dist, std::uint64_t seed) {
  if (!(universe >= 1.0)) throw DomainError("edge universe must be non-empty");
  detail::check_within_universe(universe, m_max);
  Rng rng(seed);
  std::vector<double> weights;
  weights.reserve(m_max);
  double log_survival = 0.0;
  for (std::size_t i = 0; i < m_max; ++i) {
    const double remaining = universe - static_cast<double>(i);
    log_survival += std::log(rng.uniform_open_closed()) / remaining;
    const double u = std::min(1.0, -std::expm1(log_survival));
    weights.push_back(dist.inverse_cdf(u));
  }
  return weights;
}

struct ProcessConfig {
  std::size_t n = 0;
  std::size_t t = 2;
  std::size_t m_max = 0;  ///< 0 selects default_step_limit(n, t)
  std::optional<WeightDistribution> distribution;  ///< defaults to power(t, 1)
  std::uint64_t seed = 0;

  [[nodiscard]] std::size_t steps() const { return m_max == 0 ? default_step_limit(n, t) : m_max; }
  [[nodiscard]] WeightDistribution weights() const {
    return distribution ? *distribution : WeightDistribution::power(t, 1.0);
  }
};

/// One arrival of the process: e_i, w_i, K_i and the state of G_i.
struct TraceStep {
  HyperEdge edge;
  double weight = 0.0;
  std::uint32_t touched = 0;  ///< K_i, components of G_{i-1} met by e_i
  std::size_t components_after = 0;
  std::size_t largest_after = 0;
};

/// G_0 ⊊ G_1 ⊊ ... ⊊ G_m in ascending weight order.
class ProcessTrace {
 public:
  ProcessTrace(std::size_t n, std::size_t t, std::vector<TraceStep> steps)
      : n_(n), t_(t), steps_(std::move(steps)) {}

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t t() const noexcept { return t_; }
  [[nodiscard]] std::size_t size() const noexcept { return steps_.size(); }
  [[nodiscard]] const std::vector<TraceStep>& steps() const noexcept { return steps_; }
  /// Step i, 1-based as in the process.
  [[nodiscard]] const TraceStep& step(std::size_t i) const { return steps_.at(i - 1); }

  /// C(G_m); m = 0 is the empty hypergraph.
  [[nodiscard]] std::size_t components_at(std::size_t m) const {
    check_step(m);
    return m == 0 ? n_ : steps_[m - 1].components_after;
  }

  [[nodiscard]] std::size_t largest_at(std::size_t m) const {
    check_step(m);
    return m == 0 ? 1 : steps_[m - 1].largest_after;
  }

  [[nodiscard]] bool connected() const noexcept { return components_at(steps_.size()) == 1; }

  /// First step after which G_i is connected, or 0 if it never is.
  [[nodiscard]] std::size_t connection_step() const noexcept {
    if (n_ == 1) return 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i].components_after == 1) return i + 1;
    }
    return 0;
  }

 private:
  void check_step(std::size_t m) const {
    if (m > steps_.size()) {
      throw BoundsError("step " + std::to_string(m) + " beyond trace length " +
                        std::to_string(steps_.size()));
    }
  }

  std::size_t n_;
  std::size_t t_;
  std::vector<TraceStep> steps_;
};

struct WeightedEdge {
  HyperEdge edge;
  double weight = 0.0;
};

inline std::vector<WeightedEdge> weighted_edges(const ProcessTrace& trace) {
  std::vector<WeightedEdge> out;
  out.reserve(trace.size());
  for (const auto& step : trace.steps()) out.push_back({step.edge, step.weight});
  return out;
}

/// Replays a given arrival sequence (distinct edges, non-decreasing
/// weights) as a trace on n vertices.
inline ProcessTrace trace_from_edges(std::size_t n, std::span<const WeightedEdge> arrivals) {
  if (arrivals.empty()) throw DomainError("trace needs at least one arrival");
  const std::size_t t = arrivals.front().edge.arity();
  detail::check_shape(n, t);
  DisjointSetForest forest(n);
  std::unordered_set<HyperEdge, HyperEdgeHash> seen;
  std::vector<TraceStep> steps;
  double previous = 0.0;
  for (const auto& [edge, weight] : arrivals) {
    if (edge.arity() != t) throw MalformedEdgeError("mixed edge arities in one trace");
    if (!(weight > 0.0) || weight < previous) {
      throw DomainError("arrival weights must be positive and non-decreasing");
    }
    if (!seen.insert(edge).second) throw MalformedEdgeError("edge " + edge.to_string() + " repeats");
    previous = weight;
    TraceStep step;
    step.edge = edge;
    step.weight = weight;
    step.touched = static_cast<std::uint32_t>(forest.merge(edge));
    step.components_after = forest.component_count();
    step.largest_after = forest.largest_component();
    steps.push_back(step);
  }
  return {n, t, std::move(steps)};
}

/// Runs the process: the i-th distinct uniform edge is paired with the
/// i-th order statistic of the weights, and K_i / C(G_i) are measured with
/// a fresh union-find. Deterministic in config.seed.
inline ProcessTrace generate_trace(const ProcessConfig& config) {
  detail::check_shape(config.n, config.t);
  const std::size_t m = config.steps();
  if (m == 0) throw DomainError("process needs at least one step");
  const auto edges =
      sample_edge_stream(config.n, config.t, m, substream_seed(config.seed, 0));
  const auto weights = sorted_weights(edge_universe_size(config.n, config.t), m,
                                      config.weights(), substream_seed(config.seed, 1));

  DisjointSetForest forest(config.n);
  std::vector<TraceStep> steps;
  steps.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    TraceStep step;
    step.edge = edges[i];
    step.weight = weights[i];
    step.touched = static_cast<std::uint32_t>(forest.merge(edges[i]));
    step.components_after = forest.component_count();
    step.largest_after = forest.largest_component();
    steps.push_back(step);
  }
  return {config.n, config.t, std::move(steps)};
}

}  // namespace hypermst
