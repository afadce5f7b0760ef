#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypermst/algorithms.hpp"
#include "hypermst/disjoint_set_forest.hpp"
#include "hypermst/harness/config.hpp"
#include "hypermst/harness/parallel.hpp"
#include "hypermst/harness/table.hpp"
#include "hypermst/oracles.hpp"
#include "hypermst/process.hpp"
#include "hypermst/rng.hpp"
#include "hypermst/theory/bounds.hpp"

namespace hypermst::harness {

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return substream_seed(seed, trial);
}

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation
  std::size_t count = 0;

  [[nodiscard]] double standard_error() const {
    return count > 0 ? stddev / std::sqrt(static_cast<double>(count)) : 0.0;
  }
};

inline Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
  }
  return s;
}

/// m = ceil(c n), ignoring floating-point fuzz in c n.
inline std::size_t steps_for_density(double c, std::size_t n) {
  const double exact = c * static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
}

namespace detail {

inline ProcessConfig process_for(const ExperimentConfig& config, std::size_t trial,
                                 std::size_t steps) {
  ProcessConfig process;
  process.n = config.n;
  process.t = config.t;
  const auto universe = static_cast<std::size_t>(
      std::min(edge_universe_size(config.n, config.t), 9.0e18));
  process.m_max = std::max<std::size_t>(1, std::min(steps, universe));
  process.distribution = config.distribution.build(config.t);
  process.seed = trial_seed(config.seed, trial);
  return process;
}

inline std::vector<double> grid_or(const ExperimentConfig& config, std::vector<double> fallback) {
  return config.grid.empty() ? std::move(fallback) : config.grid;
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Full minimum spanning subgraph runs

struct TrialStats {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  double upper = 0.0;  ///< A_1
  double clique = 0.0;  ///< A_2
  double lower = 0.0;  ///< A_2 / (t - 1)
  bool connected = false;
  std::size_t connection_step = 0;
  double giant_fraction = 0.0;
  double seconds = 0.0;
};

struct MstReport {
  ExperimentConfig config;
  std::vector<TrialStats> trials;
  Summary upper;
  Summary clique;
  Summary lower;
  std::size_t incomplete = 0;
  theory::TheoryConstants constants;

  /// Incomplete trials at the default run length should be rare.
  [[nodiscard]] bool incomplete_warning() const {
    return static_cast<double>(incomplete) >= 0.01 * static_cast<double>(trials.size());
  }

  [[nodiscard]] Table table() const {
    Table table{{"trial", "n", "t", "a", "m", "A1", "A2", "lower", "connected", "seed"}, {}};
    for (const auto& s : trials) {
      table.add_row({static_cast<std::uint64_t>(s.trial), static_cast<std::uint64_t>(config.n),
                     static_cast<std::uint64_t>(config.t), config.distribution.a,
                     static_cast<std::uint64_t>(s.m), s.upper, s.clique, s.lower, s.connected,
                     s.seed});
    }
    return table;
  }

  /// Means against both readings of the limit bracket: a*[L_t, U_t] and
  /// [L_t/a, U_t/a].
  [[nodiscard]] Table summary_table() const {
    const double a = config.distribution.a;
    Table table{{"statistic", "mean", "stddev", "bracket_lo_mul", "bracket_hi_mul",
                 "bracket_lo_div", "bracket_hi_div"},
                {}};
    for (const auto& [name, s] : {std::pair{"A1", upper}, std::pair{"A2", clique},
                                   std::pair{"lower", lower}}) {
      table.add_row({std::string(name), s.mean, s.stddev, a * constants.lower, a * constants.upper,
                     constants.lower / a, constants.upper / a});
    }
    return table;
  }
};

/// Runs both greedy algorithms on one shared trace per trial.
inline MstReport run_mst_experiment(const ExperimentConfig& config) {
  validate(config);
  const std::size_t steps =
      config.m_max == 0 ? default_step_limit(config.n, config.t) : config.m_max;
  MstReport report;
  report.config = config;
  report.constants = theory::bound_constants(config.t);
  report.trials = run_indexed(config.trials, config.workers, [&](std::size_t trial) {
    const auto start = std::chrono::steady_clock::now();
    const auto process = detail::process_for(config, trial, steps);
    const auto trace = generate_trace(process);
    TrialStats s;
    s.trial = trial;
    s.seed = process.seed;
    s.m = trace.size();
    s.upper = kruskal_upper(trace).total;
    s.clique = clique_lower(trace).total;
    s.lower = s.clique / static_cast<double>(config.t - 1);
    s.connected = trace.connected();
    s.connection_step = trace.connection_step();
    s.giant_fraction =
        static_cast<double>(trace.largest_at(trace.size())) / static_cast<double>(config.n);
    s.seconds = detail::seconds_since(start);
    return s;
  });
  std::vector<double> upper, clique, lower;
  for (const auto& s : report.trials) {
    upper.push_back(s.upper);
    clique.push_back(s.clique);
    lower.push_back(s.lower);
    if (!s.connected) ++report.incomplete;
  }
  report.upper = summarize(upper);
  report.clique = summarize(clique);
  report.lower = summarize(lower);
  return report;
}

// ---------------------------------------------------------------------------
// Prefix sums A_c against the integral prediction

struct PrefixPoint {
  double c = 0.0;
  std::size_t m = 0;
  Summary upper;   ///< A_1 prefix / a
  Summary clique;  ///< A_2 prefix / a
  double predicted_upper = 0.0;
  double predicted_clique_complement = 0.0;
  double predicted_clique_beta = 0.0;

  [[nodiscard]] double upper_relative_error() const {
    return predicted_upper > 0.0 ? std::abs(upper.mean - predicted_upper) / predicted_upper
                                 : std::abs(upper.mean);
  }
  [[nodiscard]] theory::F2Form better_clique_form() const {
    return std::abs(clique.mean - predicted_clique_complement) <=
                   std::abs(clique.mean - predicted_clique_beta)
               ? theory::F2Form::complement_power
               : theory::F2Form::beta_power;
  }
};

struct PrefixReport {
  ExperimentConfig config;
  std::vector<PrefixPoint> points;

  [[nodiscard]] Table table() const {
    Table table{{"c", "m", "mean_A1", "sd_A1", "pred_A1", "rel_err_A1", "mean_A2", "sd_A2",
                 "pred_A2_complement_power", "pred_A2_beta_power", "better_f2"},
                {}};
    for (const auto& p : points) {
      table.add_row({p.c, static_cast<std::uint64_t>(p.m), p.upper.mean, p.upper.stddev,
                     p.predicted_upper, p.upper_relative_error(), p.clique.mean, p.clique.stddev,
                     p.predicted_clique_complement, p.predicted_clique_beta,
                     theory::to_string(p.better_clique_form())});
    }
    return table;
  }
};

/// Empirical A_{ceil(cn)} / a for both algorithms, against the prefix
/// integral under both candidate forms of the lower algorithm's ratio.
inline PrefixReport run_prefix_curve(const ExperimentConfig& config) {
  validate(config);
  const auto grid = detail::grid_or(config, {0.25, 0.5, 1.0, 2.0});
  std::vector<std::size_t> checkpoints;
  for (double c : grid) checkpoints.push_back(steps_for_density(c, config.n));
  const std::size_t steps = checkpoints.back();
  if (static_cast<double>(steps) > edge_universe_size(config.n, config.t)) {
    throw ConfigError("grid exceeds the number of edges of the complete hypergraph");
  }

  struct Prefixes {
    std::vector<double> upper, clique;
  };
  const double a = config.distribution.a;
  const auto runs = run_indexed(config.trials, config.workers, [&](std::size_t trial) {
    const auto trace = generate_trace(detail::process_for(config, trial, steps));
    Prefixes p{kruskal_upper(trace, checkpoints).prefix_values,
               clique_lower(trace, checkpoints).prefix_values};
    for (auto& v : p.upper) v /= a;
    for (auto& v : p.clique) v /= a;
    return p;
  });

  PrefixReport report;
  report.config = config;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    PrefixPoint point;
    point.c = grid[j];
    point.m = checkpoints[j];
    std::vector<double> upper, clique;
    for (const auto& run : runs) {
      upper.push_back(run.upper[j]);
      clique.push_back(run.clique[j]);
    }
    point.upper = summarize(upper);
    point.clique = summarize(clique);
    using theory::Algorithm;
    using theory::F2Form;
    point.predicted_upper = theory::prefix_integral(Algorithm::kruskal_upper, config.t, point.c);
    point.predicted_clique_complement = theory::prefix_integral(
        Algorithm::clique_lower, config.t, point.c, 1.0, F2Form::complement_power);
    point.predicted_clique_beta = theory::prefix_integral(Algorithm::clique_lower, config.t,
                                                          point.c, 1.0, F2Form::beta_power);
    report.points.push_back(point);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Giant component against beta(c)

struct GiantPoint {
  double c = 0.0;
  std::size_t m = 0;
  Summary fraction;  ///< largest component / n at step m
  double beta = 0.0;
  double residual = 0.0;
  // Per-arrival ratios averaged over a window of steps around m.
  double upper_rate = 0.0;  ///< mean 1(K_i > 1)
  double merge_rate = 0.0;  ///< mean K_i - 1
  double predicted_upper_rate = 0.0;
  double predicted_merge_complement = 0.0;
  double predicted_merge_beta = 0.0;

  [[nodiscard]] double abs_error() const { return std::abs(fraction.mean - beta); }
};

struct GiantReport {
  ExperimentConfig config;
  std::vector<GiantPoint> points;
  double tolerance = 0.03;

  [[nodiscard]] bool within_tolerance() const {
    return std::ranges::all_of(points, [&](const auto& p) { return p.abs_error() <= tolerance; });
  }

  [[nodiscard]] Table table() const {
    Table table{{"c", "m", "mean_giant_fraction", "sd_giant_fraction", "beta", "abs_error",
                 "eq_residual", "within_tol", "rate_K_gt_1", "pred_f1", "rate_K_minus_1",
                 "pred_f2_complement_power", "pred_f2_beta_power"},
                {}};
    for (const auto& p : points) {
      table.add_row({p.c, static_cast<std::uint64_t>(p.m), p.fraction.mean, p.fraction.stddev,
                     p.beta, p.abs_error(), p.residual, p.abs_error() <= tolerance, p.upper_rate,
                     p.predicted_upper_rate, p.merge_rate, p.predicted_merge_complement,
                     p.predicted_merge_beta});
    }
    return table;
  }
};

inline GiantReport run_giant_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto grid = detail::grid_or(config, {0.1, 0.3, 0.5, 1.0});
  const std::size_t window = std::max<std::size_t>(1, config.n / 50);
  const auto universe = edge_universe_size(config.n, config.t);
  std::vector<std::size_t> checkpoints;
  for (double c : grid) {
    const auto m = steps_for_density(c, config.n);
    if (static_cast<double>(m) > universe) {
      throw ConfigError("grid exceeds the number of edges of the complete hypergraph");
    }
    checkpoints.push_back(m);
  }
  const std::size_t steps = checkpoints.back() + window;

  struct Observation {
    std::vector<double> fraction, upper_rate, merge_rate;
  };
  const auto runs = run_indexed(config.trials, config.workers, [&](std::size_t trial) {
    const auto trace = generate_trace(detail::process_for(config, trial, steps));
    Observation obs;
    for (std::size_t m : checkpoints) {
      obs.fraction.push_back(static_cast<double>(trace.largest_at(m)) /
                             static_cast<double>(config.n));
      const std::size_t first = m > window ? m - window + 1 : 1;
      const std::size_t last = std::min(trace.size(), m + window);
      double hits = 0.0, merges = 0.0;
      for (std::size_t i = first; i <= last; ++i) {
        const auto k = trace.step(i).touched;
        hits += k > 1 ? 1.0 : 0.0;
        merges += static_cast<double>(k) - 1.0;
      }
      const auto width = static_cast<double>(last - first + 1);
      obs.upper_rate.push_back(hits / width);
      obs.merge_rate.push_back(merges / width);
    }
    return obs;
  });

  GiantReport report;
  report.config = config;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    GiantPoint point;
    point.c = grid[j];
    point.m = checkpoints[j];
    std::vector<double> fraction;
    double upper_rate = 0.0, merge_rate = 0.0;
    for (const auto& run : runs) {
      fraction.push_back(run.fraction[j]);
      upper_rate += run.upper_rate[j];
      merge_rate += run.merge_rate[j];
    }
    point.fraction = summarize(fraction);
    point.upper_rate = upper_rate / static_cast<double>(runs.size());
    point.merge_rate = merge_rate / static_cast<double>(runs.size());
    if (point.c > 0.0) {
      const auto solution = theory::beta_of_c(config.t, point.c);
      point.beta = solution.beta;
      point.residual = solution.residual;
    }
    using theory::Algorithm;
    using theory::F2Form;
    point.predicted_upper_rate = theory::f_ratio(Algorithm::kruskal_upper, config.t, point.beta);
    point.predicted_merge_complement =
        theory::f_ratio(Algorithm::clique_lower, config.t, point.beta, F2Form::complement_power);
    point.predicted_merge_beta =
        theory::f_ratio(Algorithm::clique_lower, config.t, point.beta, F2Form::beta_power);
    report.points.push_back(point);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Component-count decay

struct DecayPoint {
  double c = 0.0;
  std::size_t m = 0;
  Summary fraction;  ///< C(G_m) / n
  double max_fraction = 0.0;
  double surrogate = 1.0;  ///< 1 - beta_graph(2c)
  double bound = 1.0;      ///< surrogate + n^{-1/5}
  double within_rate = 0.0;
  double predicted_complement = 0.0;
  double predicted_beta = 0.0;
};

struct DecayReport {
  ExperimentConfig config;
  std::vector<DecayPoint> points;
  bool monotone = true;   ///< C(G_i) never increased along any trace
  double log_slope = 0.0; ///< least-squares slope of ln(mean C/n) against c
  double required_rate = 0.95;

  [[nodiscard]] bool passed() const {
    const bool bounded = std::ranges::all_of(
        points, [&](const auto& p) { return p.within_rate >= required_rate; });
    return bounded && monotone && log_slope < 0.0;
  }

  [[nodiscard]] Table table() const {
    Table table{{"c", "m", "mean_C_over_n", "sd_C_over_n", "max_C_over_n", "surrogate", "bound",
                 "within_rate", "pred_complement_power", "pred_beta_power"},
                {}};
    for (const auto& p : points) {
      table.add_row({p.c, static_cast<std::uint64_t>(p.m), p.fraction.mean, p.fraction.stddev,
                     p.max_fraction, p.surrogate, p.bound, p.within_rate, p.predicted_complement,
                     p.predicted_beta});
    }
    return table;
  }
};

inline DecayReport run_decay_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto grid = detail::grid_or(config, {1, 2, 3, 4, 5, 6});
  std::vector<std::size_t> checkpoints;
  for (double c : grid) checkpoints.push_back(steps_for_density(c, config.n));
  if (static_cast<double>(checkpoints.back()) > edge_universe_size(config.n, config.t)) {
    throw ConfigError("grid exceeds the number of edges of the complete hypergraph");
  }
  const std::size_t steps = checkpoints.back();

  struct Observation {
    std::vector<double> fraction;
    bool monotone = true;
  };
  const auto runs = run_indexed(config.trials, config.workers, [&](std::size_t trial) {
    const auto trace = generate_trace(detail::process_for(config, trial, steps));
    Observation obs;
    std::size_t previous = config.n;
    for (const auto& step : trace.steps()) {
      if (step.components_after > previous) obs.monotone = false;
      previous = step.components_after;
    }
    for (std::size_t m : checkpoints) {
      obs.fraction.push_back(static_cast<double>(trace.components_at(m)) /
                             static_cast<double>(config.n));
    }
    return obs;
  });

  DecayReport report;
  report.config = config;
  const double allowance = std::pow(static_cast<double>(config.n), -0.2);
  for (const auto& run : runs) report.monotone = report.monotone && run.monotone;
  std::vector<double> xs, ys;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    DecayPoint point;
    point.c = grid[j];
    point.m = checkpoints[j];
    std::vector<double> fraction;
    std::size_t within = 0;
    point.surrogate = point.c > 0.0 ? theory::decay_surrogate(point.c) : 1.0;
    point.bound = point.surrogate + allowance;
    for (const auto& run : runs) {
      fraction.push_back(run.fraction[j]);
      point.max_fraction = std::max(point.max_fraction, run.fraction[j]);
      if (run.fraction[j] <= point.bound) ++within;
    }
    point.fraction = summarize(fraction);
    point.within_rate = static_cast<double>(within) / static_cast<double>(runs.size());
    point.predicted_complement =
        theory::component_fraction(config.t, point.c, theory::F2Form::complement_power);
    point.predicted_beta =
        theory::component_fraction(config.t, point.c, theory::F2Form::beta_power);
    if (point.c > 0.0 && point.fraction.mean > 0.0) {
      xs.push_back(point.c);
      ys.push_back(std::log(point.fraction.mean));
    }
    report.points.push_back(point);
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    report.log_slope = sxy / sxx;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hypergraph -> graph projection

struct ProjectionTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double c = 0.0;
  std::size_t m = 0;
  std::size_t hyper_components = 0;
  std::size_t graph_components = 0;
  std::size_t distinct_pairs = 0;
  std::size_t kept_pairs = 0;
  bool degenerate = false;

  [[nodiscard]] bool dominates() const { return graph_components >= hyper_components; }
};

struct ProjectionReport {
  ExperimentConfig config;
  std::vector<ProjectionTrial> trials;

  [[nodiscard]] std::size_t degenerate_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(trials, [](const auto& p) { return p.degenerate; }));
  }
  [[nodiscard]] bool all_dominate() const {
    return std::ranges::all_of(trials, [](const auto& p) { return p.dominates(); });
  }

  [[nodiscard]] Table table() const {
    Table table{{"trial", "seed", "c", "m", "C_hypergraph", "C_graph", "distinct_pairs",
                 "kept_pairs", "degenerate", "dominates"},
                {}};
    for (const auto& p : trials) {
      table.add_row({static_cast<std::uint64_t>(p.trial), p.seed, p.c,
                     static_cast<std::uint64_t>(p.m), static_cast<std::uint64_t>(p.hyper_components),
                     static_cast<std::uint64_t>(p.graph_components),
                     static_cast<std::uint64_t>(p.distinct_pairs),
                     static_cast<std::uint64_t>(p.kept_pairs), p.degenerate, p.dominates()});
    }
    return table;
  }
};

/// Projects each of the first m hyperedges onto a uniformly random pair of
/// its vertices, removes repeated pairs, randomly keeps floor(m/2) of the
/// rest, and compares component counts of the graph and the hypergraph.
inline ProjectionReport run_projection_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto grid = detail::grid_or(config, {2.0});
  std::vector<std::size_t> checkpoints;
  for (double c : grid) checkpoints.push_back(steps_for_density(c, config.n));
  if (static_cast<double>(checkpoints.back()) > edge_universe_size(config.n, config.t)) {
    throw ConfigError("grid exceeds the number of edges of the complete hypergraph");
  }
  const std::size_t steps = checkpoints.back();

  const auto runs = run_indexed(config.trials, config.workers, [&](std::size_t trial) {
    const auto process = detail::process_for(config, trial, steps);
    const auto trace = generate_trace(process);
    Rng rng(substream_seed(process.seed, 2));
    std::vector<ProjectionTrial> rows;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const std::size_t m = checkpoints[j];
      ProjectionTrial row;
      row.trial = trial;
      row.seed = process.seed;
      row.c = grid[j];
      row.m = m;
      row.hyper_components = trace.components_at(m);

      std::vector<std::pair<Vertex, Vertex>> pairs;
      std::unordered_set<std::uint64_t> seen;
      for (std::size_t i = 1; i <= m; ++i) {
        const auto& edge = trace.step(i).edge;
        // First two entries of a uniform shuffle = a uniform ordered pair.
        const auto first = static_cast<std::size_t>(rng.below(edge.arity()));
        auto second = static_cast<std::size_t>(rng.below(edge.arity() - 1));
        if (second >= first) ++second;
        const Vertex u = std::min(edge[first], edge[second]);
        const Vertex v = std::max(edge[first], edge[second]);
        if (seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) pairs.emplace_back(u, v);
      }
      row.distinct_pairs = pairs.size();
      const std::size_t target = m / 2;
      row.degenerate = pairs.size() < target;
      if (!row.degenerate) {
        for (std::size_t i = 0; i < target; ++i) {
          const auto k = i + static_cast<std::size_t>(rng.below(pairs.size() - i));
          std::swap(pairs[i], pairs[k]);
        }
        pairs.resize(target);
      }
      row.kept_pairs = pairs.size();
      DisjointSetForest forest(config.n);
      for (const auto& [u, v] : pairs) forest.unite(u, v);
      row.graph_components = forest.component_count();
      rows.push_back(row);
    }
    return rows;
  });

  ProjectionReport report;
  report.config = config;
  for (const auto& rows : runs) report.trials.insert(report.trials.end(), rows.begin(), rows.end());
  return report;
}

// ---------------------------------------------------------------------------
// Exact sandwich on small instances

struct SandwichTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::size_t candidates = 0;
  double lower = 0.0;
  double exact = 0.0;
  double upper = 0.0;
  double clique = 0.0;
  double oracle = 0.0;
  std::string failure;  ///< empty when every check held

  [[nodiscard]] bool passed() const { return failure.empty(); }
};

struct SandwichReport {
  ExperimentConfig config;
  std::vector<SandwichTrial> trials;

  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(std::ranges::count_if(trials, [](const auto& s) { return !s.passed(); }));
  }
  [[nodiscard]] bool passed() const { return failures() == 0; }

  [[nodiscard]] Table table() const {
    Table table{{"trial", "seed", "m", "candidates", "lower", "msp", "A1", "A2", "clique_oracle",
                 "pass", "failure"},
                {}};
    for (const auto& s : trials) {
      table.add_row({static_cast<std::uint64_t>(s.trial), s.seed, static_cast<std::uint64_t>(s.m),
                     static_cast<std::uint64_t>(s.candidates), s.lower, s.exact, s.upper,
                     s.clique, s.oracle, s.passed(), s.failure});
    }
    return table;
  }
};

inline constexpr double kOracleTolerance = 1e-9;

/// Per trial: A_2/(t-1) <= exact minimum spanning subgraph <= A_1, and A_2
/// equals the clique-expansion MST.
inline SandwichReport run_sandwich_experiment(const ExperimentConfig& config) {
  validate(config);
  if (config.n > 8) throw ConfigError("sandwich runs need n <= 8 for the exhaustive oracle");
  const std::size_t steps =
      config.m_max == 0 ? default_step_limit(config.n, config.t) : config.m_max;

  SandwichReport report;
  report.config = config;
  report.trials = run_indexed(config.trials, config.workers, [&](std::size_t trial) {
    const auto process = detail::process_for(config, trial, steps);
    const auto trace = generate_trace(process);
    SandwichTrial s;
    s.trial = trial;
    s.seed = process.seed;
    s.m = trace.size();
    s.upper = kruskal_upper(trace).total;
    s.clique = clique_lower(trace).total;
    s.lower = s.clique / static_cast<double>(config.t - 1);
    const auto edges = weighted_edges(trace);
    const auto oracle = clique_expand_oracle(edges, config.n);
    s.oracle = oracle.weight;
    if (!trace.connected()) {
      s.failure = "trace not connected";
      return s;
    }
    const auto candidates = msp_candidates(config.n, edges, s.upper);
    s.candidates = candidates.size();
    if (candidates.size() > kBruteForceEdgeCap) {
      s.failure = "candidate set exceeds exhaustive-search capacity";
      return s;
    }
    s.exact = brute_force_msp(config.n, candidates);
    const double slack = 1e-12 * std::max(1.0, s.upper);
    if (s.lower > s.exact + slack) {
      s.failure = "lower bound exceeds exact minimum";
    } else if (s.exact > s.upper + slack) {
      s.failure = "exact minimum exceeds upper bound";
    } else if (std::abs(s.clique - s.oracle) > kOracleTolerance) {
      s.failure = "clique algorithm disagrees with clique-expansion oracle";
    } else if (!oracle.connected) {
      s.failure = "clique expansion disconnected";
    }
    return s;
  });
  return report;
}

}  // namespace hypermst::harness
