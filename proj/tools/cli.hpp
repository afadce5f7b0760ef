#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hypermst/hypermst.hpp"

namespace hypermst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the directory result files go to.
inline constexpr const char* kOutputDirVariable = "HYPERMST_OUTPUT_DIR";

namespace detail {

using harness::ExperimentConfig;
using harness::ExperimentKind;

// Raw flag text keyed by the config-file key it maps to.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::string config_path;
  std::map<std::string, CLI::Option*> options;
};

inline void add_flags(CLI::App& sub, FlagSet& flags, const std::vector<std::string>& keys) {
  static const std::map<std::string, std::string> help = {
      {"t", "edge arity t >= 2"},
      {"n", "number of vertices"},
      {"c", "edges-per-vertex value or comma list (fractions like 1/6 allowed)"},
      {"trials", "number of Monte Carlo trials"},
      {"seed", "base seed (default 0)"},
      {"a", "weight scale a"},
      {"dist", "weight distribution: power or exp"},
      {"out", "output file path"},
      {"workers", "worker threads (default: logical cores)"},
      {"m", "process length (default min(C(n,t), ceil(2 n ln n)))"},
  };
  for (const auto& key : keys) {
    flags.options[key] = sub.add_option("--" + key, flags.values[key], help.at(key));
  }
  sub.add_option("--config", flags.config_path, "key = value file; flags override it");
}

inline ExperimentConfig resolve(const FlagSet& flags, ExperimentConfig config) {
  if (!flags.config_path.empty()) {
    for (const auto& [key, value] : harness::read_key_value_file(flags.config_path)) {
      harness::apply_setting(config, key, value);
    }
  }
  for (const auto& [key, option] : flags.options) {
    if (option->count() > 0) harness::apply_setting(config, key, flags.values.at(key));
  }
  return config;
}

inline std::string format_grid(const std::vector<double>& grid) {
  std::string out;
  for (double c : grid) {
    if (!out.empty()) out += ',';
    out += harness::format_cell(c);
  }
  return out;
}

inline void print_config(std::ostream& out, const ExperimentConfig& config,
                         const std::vector<double>& grid) {
  out << "# experiment = " << harness::to_string(config.kind) << '\n'
      << "# n = " << config.n << '\n'
      << "# t = " << config.t << '\n'
      << "# trials = " << config.trials << '\n'
      << "# seed = " << config.seed << '\n'
      << "# dist = " << to_string(config.distribution.kind) << '\n'
      << "# a = " << harness::format_cell(config.distribution.a) << '\n';
  if (!grid.empty()) out << "# c = " << format_grid(grid) << '\n';
  if (config.m_max != 0) out << "# m = " << config.m_max << '\n';
}

inline std::filesystem::path output_path(const ExperimentConfig& config) {
  if (!config.output_path.empty()) return config.output_path;
  const char* dir = std::getenv(kOutputDirVariable);
  std::filesystem::path base = (dir != nullptr && *dir != '\0') ? dir : ".";
  return base / (harness::to_string(config.kind) + ".csv");
}

inline void emit(std::ostream& out, const harness::Table& table, const ExperimentConfig& config) {
  const auto path = output_path(config);
  harness::write_table(table, path);
  out << "# wrote " << path.string() << '\n';
}

inline std::string num(double v) { return harness::format_cell(v); }

}  // namespace detail

/// Runs the command line. Returns 0 on success, 1 when an experiment's
/// assertions fail and 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::ExperimentConfig;
  using detail::ExperimentKind;
  using detail::num;

  CLI::App app{"Random minimum spanning subgraph of t-uniform hypergraphs: greedy bounds, "
               "limit constants and Monte Carlo experiments",
               "hypermst"};
  app.require_subcommand(1);

  struct Command {
    CLI::App* app;
    detail::FlagSet flags;
    ExperimentConfig defaults;
  };
  std::map<std::string, Command> commands;

  const std::vector<std::string> experiment_keys = {"t", "n", "c", "trials", "seed", "a",
                                                    "dist", "out", "workers", "m"};
  auto make_default = [](ExperimentKind kind, std::size_t n, std::size_t t, std::size_t trials,
                         std::vector<double> grid) {
    ExperimentConfig c;
    c.kind = kind;
    c.n = n;
    c.t = t;
    c.trials = trials;
    c.grid = std::move(grid);
    c.workers = std::max(1u, std::thread::hardware_concurrency());
    return c;
  };
  auto add = [&](const std::string& name, const std::string& description,
                 std::vector<std::string> keys, ExperimentConfig defaults) {
    auto& cmd = commands[name];
    cmd.app = app.add_subcommand(name, description);
    cmd.defaults = std::move(defaults);
    detail::add_flags(*cmd.app, cmd.flags, keys);
  };

  add("constants", "print L_t, U_t, gap ratio and threshold c* (t = 2..10 if --t is omitted)",
      {"t", "out"}, make_default(ExperimentKind::mst, 2, 2, 1, {}));
  add("beta", "solve for the giant-component fraction beta(c)", {"t", "c", "out"},
      make_default(ExperimentKind::giant, 3, 3, 1, {0.5}));
  add("simulate", "full-process runs of both greedy algorithms", experiment_keys,
      make_default(ExperimentKind::mst, 2000, 3, 20, {}));
  add("curve", "prefix sums A_c against the integral prediction", experiment_keys,
      make_default(ExperimentKind::prefix_curve, 5000, 3, 10, {0.5, 1.0, 2.0}));
  add("giant", "largest component against beta(c)", experiment_keys,
      make_default(ExperimentKind::giant, 20000, 3, 10, {0.3, 0.5, 1.0}));
  add("decay", "normalized component counts against the decay surrogate", experiment_keys,
      make_default(ExperimentKind::decay, 10000, 3, 20, {1, 2, 3, 4, 5, 6}));
  add("projection", "hypergraph vs projected-graph component counts", experiment_keys,
      make_default(ExperimentKind::projection, 10000, 3, 20, {2.0}));
  add("verify", "exact sandwich and oracle checks; nonzero exit on any violation",
      experiment_keys, make_default(ExperimentKind::sandwich, 7, 3, 200, {}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    if (args.empty()) throw CLI::CallForHelp();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (args.empty()) {
      err << app.help();
      return kExitUsage;
    }
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::string name;
  for (auto& [key, cmd] : commands) {
    if (cmd.app->parsed()) name = key;
  }
  auto& cmd = commands.at(name);

  try {
    ExperimentConfig config = detail::resolve(cmd.flags, cmd.defaults);
    const bool t_given = cmd.flags.options.count("t") && cmd.flags.options.at("t")->count() > 0;

    if (name == "constants") {
      harness::Table table{{"t", "L_t", "U_t", "gap_ratio", "gap_over_ln_t_plus_1", "c_star",
                            "quadrature_error_bound"},
                           {}};
      const std::size_t first = t_given ? config.t : 2;
      const std::size_t last = t_given ? config.t : 10;
      if (first < 2) throw ConfigError("t must be at least 2");
      for (std::size_t t = first; t <= last; ++t) {
        const auto k = theory::bound_constants(t);
        table.add_row({static_cast<std::uint64_t>(t), k.lower, k.upper, k.gap_ratio,
                       k.gap_ratio / std::log(static_cast<double>(t) + 1.0), k.critical_density,
                       k.quadrature_error_bound});
      }
      out << harness::to_csv(table);
      if (!config.output_path.empty()) harness::write_table(table, config.output_path);
      return kExitOk;
    }

    if (name == "beta") {
      harness::validate(config);
      harness::Table table{{"t", "c", "beta", "residual", "c_star", "supercritical"}, {}};
      for (double c : config.grid) {
        const auto s = theory::beta_of_c(config.t, c);
        table.add_row({static_cast<std::uint64_t>(config.t), c, s.beta, s.residual,
                       theory::critical_density(config.t), c > theory::critical_density(config.t)});
      }
      out << harness::to_csv(table);
      if (!config.output_path.empty()) harness::write_table(table, config.output_path);
      return kExitOk;
    }

    harness::validate(config);
    detail::print_config(out, config, name == "simulate" || name == "verify" ? std::vector<double>{}
                                                                             : config.grid);

    if (name == "simulate") {
      const auto report = harness::run_mst_experiment(config);
      out << harness::to_csv(report.summary_table());
      out << "# incomplete trials = " << report.incomplete << '\n';
      if (report.incomplete_warning()) {
        err << "warning: " << report.incomplete << " of " << report.trials.size()
            << " trials were not connected at the run-length ceiling\n";
      }
      detail::emit(out, report.table(), config);
      return kExitOk;
    }
    if (name == "curve") {
      const auto report = harness::run_prefix_curve(config);
      out << harness::to_csv(report.table());
      detail::emit(out, report.table(), config);
      return kExitOk;
    }
    if (name == "giant") {
      const auto report = harness::run_giant_experiment(config);
      out << harness::to_csv(report.table());
      detail::emit(out, report.table(), config);
      return report.within_tolerance() ? kExitOk : kExitAssertion;
    }
    if (name == "decay") {
      const auto report = harness::run_decay_experiment(config);
      out << harness::to_csv(report.table());
      out << "# monotone = " << (report.monotone ? 1 : 0) << '\n'
          << "# log_slope = " << num(report.log_slope) << '\n';
      detail::emit(out, report.table(), config);
      return report.passed() ? kExitOk : kExitAssertion;
    }
    if (name == "projection") {
      const auto report = harness::run_projection_experiment(config);
      out << "# dominance = " << (report.all_dominate() ? 1 : 0) << '\n'
          << "# degenerate trials = " << report.degenerate_count() << '\n';
      detail::emit(out, report.table(), config);
      return report.all_dominate() ? kExitOk : kExitAssertion;
    }

    // verify
    bool ok = true;
    auto check = [&](bool pass, const std::string& label) {
      out << (pass ? "PASS " : "FAIL ") << label << '\n';
      ok = ok && pass;
    };
    const auto sandwich = harness::run_sandwich_experiment(config);
    check(sandwich.passed(), "sandwich n=" + std::to_string(config.n) + " t=" +
                                 std::to_string(config.t) + ": " +
                                 std::to_string(sandwich.trials.size() - sandwich.failures()) +
                                 "/" + std::to_string(sandwich.trials.size()));
    for (const auto& s : sandwich.trials) {
      if (!s.passed()) out << "  trial " << s.trial << " seed " << s.seed << ": " << s.failure << '\n';
    }

    std::size_t oracle_ok = 0;
    constexpr std::size_t kOracleTrials = 100;
    for (std::size_t trial = 0; trial < kOracleTrials; ++trial) {
      ProcessConfig process;
      process.n = 12;
      process.t = 3;
      process.seed = harness::trial_seed(config.seed + 1, trial);
      const auto trace = generate_trace(process);
      const auto oracle = clique_expand_oracle(weighted_edges(trace), process.n);
      if (std::abs(clique_lower(trace).total - oracle.weight) <= harness::kOracleTolerance) {
        ++oracle_ok;
      }
    }
    check(oracle_ok == kOracleTrials, "clique algorithm = clique-expansion oracle n=12 t=3: " +
                                          std::to_string(oracle_ok) + "/" +
                                          std::to_string(kOracleTrials));

    ExperimentConfig graph = config;
    graph.n = 8;
    graph.t = 2;
    graph.trials = 50;
    const auto collapse = harness::run_sandwich_experiment(graph);
    bool equal = collapse.passed();
    for (const auto& s : collapse.trials) {
      equal = equal && s.lower == s.upper && std::abs(s.exact - s.upper) <= 1e-12;
    }
    check(equal, "t=2 collapse lower = exact = upper n=8: " + std::to_string(collapse.trials.size()) +
                     " trials");

    const auto k2 = theory::bound_constants(2);
    check(std::abs(k2.upper - theory::zeta3()) <= 1e-6 &&
              std::abs(k2.lower - theory::zeta3() / 2.0) <= 1e-6,
          "L_2 = zeta(3)/2, U_2 = zeta(3): " + num(k2.lower) + ", " + num(k2.upper));

    double worst = 0.0;
    for (std::size_t t = 2; t <= 6; ++t) {
      for (double c : {0.2, 0.5, 1.0, 2.0, 5.0}) worst = std::max(worst, theory::beta_of_c(t, c).residual);
    }
    check(worst <= 1e-10, "giant-fraction equation residual <= 1e-10: " + num(worst));

    detail::emit(out, sandwich.table(), config);
    return ok ? kExitOk : kExitAssertion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return dynamic_cast<const ConfigError*>(&e) != nullptr ? kExitUsage : kExitAssertion;
  }
}

}  // namespace hypermst::cli
