#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hypermst/hypermst.hpp"

using namespace hypermst;
using namespace hypermst::harness;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hypermst_harness_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig make_config(ExperimentKind kind, std::size_t n, std::size_t t, std::size_t trials,
                             std::vector<double> grid = {}) {
  ExperimentConfig config;
  config.kind = kind;
  config.n = n;
  config.t = t;
  config.trials = trials;
  config.grid = std::move(grid);
  config.workers = 4;
  return config;
}

}  // namespace

TEST(Table, CsvFormatting) {
  Table table{{"x", "label", "flag"}, {}};
  table.add_row({0.1 + 0.2, std::string("a,b"), true});
  table.add_row({std::int64_t{-3}, std::string("say \"hi\""), false});
  EXPECT_EQ(to_csv(table), "x,label,flag\n0.3,\"a,b\",1\n-3,\"say \"\"hi\"\"\",0\n");
  EXPECT_THROW(table.add_row({1.0}), ConfigError);
  EXPECT_EQ(format_cell(1.0 / 3.0), "0.333333333333");
}

TEST(Table, WriteHeaderOnlyAndReportIoErrors) {
  const auto dir = scratch_dir("table");
  Table empty{{"a", "b"}, {}};
  write_table(empty, dir / "nested" / "empty.csv");
  EXPECT_EQ(slurp(dir / "nested" / "empty.csv"), "a,b\n");
  std::ofstream(dir / "blocker") << "x";
  EXPECT_THROW(write_table(empty, dir / "blocker" / "out.csv"), IoError);
}

TEST(Config, ParsingHelpers) {
  EXPECT_DOUBLE_EQ(parse_number("1/6"), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(parse_number(" 0.25 "), 0.25);
  EXPECT_THROW(parse_number("abc"), ConfigError);
  EXPECT_THROW(parse_number("1/0"), ConfigError);
  EXPECT_EQ(parse_grid("0.1,1/2,2"), (std::vector<double>{0.1, 0.5, 2.0}));
  EXPECT_EQ(parse_unsigned("42"), 42u);
  EXPECT_THROW(parse_unsigned("-1"), ConfigError);
  EXPECT_EQ(parse_kind("prefix-curve"), ExperimentKind::prefix_curve);
  EXPECT_THROW(parse_kind("bogus"), ConfigError);
}

TEST(Config, KeyValueFileAndValidation) {
  const auto dir = scratch_dir("config");
  std::ofstream(dir / "run.cfg") << "# study\nkind = giant\nn = 500\nt=4\nc = 0.1, 1/2\n\ndist = power # inline\n";
  ExperimentConfig config;
  for (const auto& [k, v] : read_key_value_file(dir / "run.cfg")) apply_setting(config, k, v);
  EXPECT_EQ(config.kind, ExperimentKind::giant);
  EXPECT_EQ(config.n, 500u);
  EXPECT_EQ(config.t, 4u);
  EXPECT_EQ(config.grid, (std::vector<double>{0.1, 0.5}));
  EXPECT_NO_THROW(validate(config));

  EXPECT_THROW(apply_setting(config, "colour", "blue"), ConfigError);
  EXPECT_THROW(read_key_value_file(dir / "missing.cfg"), IoError);
  std::ofstream(dir / "bad.cfg") << "just words\n";
  EXPECT_THROW(read_key_value_file(dir / "bad.cfg"), ConfigError);

  auto bad = config;
  bad.grid = {0.5, 0.5};
  EXPECT_THROW(validate(bad), ConfigError);
  bad = config;
  bad.trials = 0;
  EXPECT_THROW(validate(bad), ConfigError);
  bad = config;
  bad.distribution.kind = DistributionKind::exponential;
  EXPECT_THROW(validate(bad), ConfigError);
}

TEST(Parallel, ResultsInIndexOrderAndErrorsPropagate) {
  const auto squares = run_indexed(100, 8, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(squares[i], i * i);
  EXPECT_THROW(run_indexed(10, 4,
                           [](std::size_t i) -> int {
                             if (i == 7) throw DomainError("boom");
                             return 0;
                           }),
               DomainError);
}

TEST(MstExperiment, SchemaAndWorkerInvariance) {
  auto config = make_config(ExperimentKind::mst, 200, 3, 6);
  config.seed = 11;
  const auto parallel = run_mst_experiment(config);
  config.workers = 1;
  const auto serial = run_mst_experiment(config);
  EXPECT_EQ(to_csv(parallel.table()), to_csv(serial.table()));
  EXPECT_EQ(to_csv(parallel.summary_table()), to_csv(serial.summary_table()));
  const std::string csv = to_csv(serial.table());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,n,t,a,m,A1,A2,lower,connected,seed");
  for (const auto& s : serial.trials) {
    EXPECT_GE(s.clique, s.upper);
    EXPECT_DOUBLE_EQ(s.lower, s.clique / 2.0);
  }
}

TEST(MstExperiment, DeterministicFileBytes) {
  const auto dir = scratch_dir("determinism");
  auto config = make_config(ExperimentKind::mst, 150, 3, 1);
  config.seed = 5;
  write_table(run_mst_experiment(config).table(), dir / "first.csv");
  write_table(run_mst_experiment(config).table(), dir / "second.csv");
  EXPECT_EQ(slurp(dir / "first.csv"), slurp(dir / "second.csv"));
  config.seed = 6;
  write_table(run_mst_experiment(config).table(), dir / "third.csv");
  EXPECT_NE(slurp(dir / "first.csv"), slurp(dir / "third.csv"));
}

TEST(MstExperiment, ThreeUniformMeansInsideBracket) {
  const auto report = run_mst_experiment(make_config(ExperimentKind::mst, 2000, 3, 20));
  EXPECT_LE(report.lower.mean, report.upper.mean);
  EXPECT_GE(report.lower.mean, report.constants.lower - 0.1);
  EXPECT_LE(report.upper.mean, report.constants.upper + 0.1);
  EXPECT_FALSE(report.incomplete_warning());
}

TEST(PrefixCurve, ZeroAndSubcriticalPoints) {
  auto report = run_prefix_curve(make_config(ExperimentKind::prefix_curve, 5000, 2, 20, {0.0, 0.25}));
  EXPECT_EQ(report.points[0].upper.mean, 0.0);
  EXPECT_EQ(report.points[0].m, 0u);
  EXPECT_NEAR(report.points[1].upper.mean, 0.0625, 0.05 * 0.0625);

  report = run_prefix_curve(make_config(ExperimentKind::prefix_curve, 5000, 3, 20, {0.1, 1.0 / 6.0}));
  for (const auto& p : report.points) {
    EXPECT_LE(p.upper_relative_error(), 0.05);
    EXPECT_NEAR(p.clique.mean, p.predicted_clique_complement, 0.05 * p.predicted_clique_complement);
    EXPECT_DOUBLE_EQ(p.predicted_clique_complement, p.predicted_clique_beta);
  }
}

TEST(PrefixCurve, ConcentrationOfPrefixSums) {
  const auto report = run_prefix_curve(make_config(ExperimentKind::prefix_curve, 5000, 3, 50, {1.0}));
  const auto& p = report.points.front();
  EXPECT_LE(p.upper.stddev, 0.1 * p.upper.mean);
  EXPECT_LE(p.clique.stddev, 0.1 * p.clique.mean);
}

TEST(GiantExperiment, SubAndSupercritical) {
  const auto report =
      run_giant_experiment(make_config(ExperimentKind::giant, 20000, 3, 10, {0.1, 0.5}));
  EXPECT_LE(report.points[0].fraction.mean, 0.02);
  EXPECT_LE(report.points[1].abs_error(), 0.03);
  EXPECT_TRUE(report.within_tolerance());

  auto full = make_config(ExperimentKind::giant, 12, 3, 3, {18.0});
  const auto saturated = run_giant_experiment(full);
  EXPECT_DOUBLE_EQ(saturated.points[0].fraction.mean, 1.0);
}

TEST(DecayExperiment, BoundAndMonotonicity) {
  auto config = make_config(ExperimentKind::decay, 10000, 3, 10, {0.0, 2.0});
  const auto report = run_decay_experiment(config);
  EXPECT_DOUBLE_EQ(report.points[0].fraction.mean, 1.0);
  EXPECT_LE(report.points[1].max_fraction, theory::decay_surrogate(2.0) + 0.16);
  EXPECT_TRUE(report.monotone);
}

TEST(ProjectionExperiment, Dominance) {
  const auto report =
      run_projection_experiment(make_config(ExperimentKind::projection, 10000, 3, 5, {0.0, 2.0}));
  for (const auto& row : report.trials) {
    EXPECT_TRUE(row.dominates());
    if (row.m == 0) {
      EXPECT_EQ(row.graph_components, 10000u);
      EXPECT_EQ(row.hyper_components, 10000u);
    }
  }
  EXPECT_EQ(report.degenerate_count(), 0u);
}

TEST(SandwichExperiment, SmallInstances) {
  auto config = make_config(ExperimentKind::sandwich, 7, 3, 40);
  EXPECT_TRUE(run_sandwich_experiment(config).passed());

  config = make_config(ExperimentKind::sandwich, 8, 2, 20);
  const auto graph = run_sandwich_experiment(config);
  ASSERT_TRUE(graph.passed());
  for (const auto& s : graph.trials) {
    EXPECT_NEAR(s.lower, s.exact, 1e-12);
    EXPECT_NEAR(s.exact, s.upper, 1e-12);
  }

  config = make_config(ExperimentKind::sandwich, 3, 3, 5);
  for (const auto& s : run_sandwich_experiment(config).trials) {
    EXPECT_DOUBLE_EQ(s.lower, s.upper);
    EXPECT_DOUBLE_EQ(s.exact, s.upper);
  }

  config.n = 9;
  EXPECT_THROW(run_sandwich_experiment(config), ConfigError);
}
