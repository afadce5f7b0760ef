#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "hypermst/process.hpp"

using namespace hypermst;

namespace {

// Asymptotic two-sample Kolmogorov-Smirnov critical value at alpha = 0.01.
double ks_critical_001(std::size_t n1, std::size_t n2) {
  const double c_alpha = std::sqrt(-std::log(0.01 / 2.0) / 2.0);  // 1.6276
  return c_alpha * std::sqrt(static_cast<double>(n1 + n2) / static_cast<double>(n1 * n2));
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

// Pearson statistic for a 2 x k contingency table.
double homogeneity_chi2(const std::map<int, double>& a, const std::map<int, double>& b) {
  std::map<int, double> total;
  double na = 0, nb = 0;
  for (auto [k, v] : a) total[k] += v, na += v;
  for (auto [k, v] : b) total[k] += v, nb += v;
  double stat = 0.0;
  for (auto [k, v] : total) {
    const double ea = v * na / (na + nb);
    const double eb = v * nb / (na + nb);
    const double oa = a.count(k) ? a.at(k) : 0.0;
    const double ob = b.count(k) ? b.at(k) : 0.0;
    stat += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  return stat;
}

}  // namespace

TEST(EdgeUniverse, BinomialCounts) {
  EXPECT_EQ(edge_universe_size(20, 3), 1140.0);
  EXPECT_EQ(edge_universe_size(100, 2), 4950.0);
  EXPECT_EQ(edge_universe_size(3, 3), 1.0);
  EXPECT_EQ(default_step_limit(7, 3), 28u);
  EXPECT_EQ(default_step_limit(300, 2), static_cast<std::size_t>(std::ceil(600 * std::log(300.0))));
}

TEST(SampleEdgeStream, SingleEdgeUniverse) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const auto edges = sample_edge_stream(3, 3, 1, seed);
    ASSERT_EQ(edges.size(), 1u);
    EXPECT_EQ(edges[0], make_edge({0, 1, 2}, 3));
  }
}

TEST(SampleEdgeStream, ExhaustsSmallUniverseWithoutRepeats) {
  EdgeStreamStats stats;
  const auto edges = sample_edge_stream(20, 3, 1140, 5, &stats);
  EXPECT_TRUE(stats.enumerated);
  std::vector<HyperEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
  EXPECT_EQ(sorted.size(), 1140u);
}

TEST(SampleEdgeStream, RejectsRequestsBeyondUniverse) {
  EXPECT_THROW(sample_edge_stream(5, 3, 11, 0), ExhaustedUniverseError);
  EXPECT_THROW(sample_edge_stream(2, 3, 1, 0), DomainError);
}

TEST(SampleEdgeStream, DeterministicPerSeed) {
  EXPECT_EQ(sample_edge_stream(50, 4, 100, 17), sample_edge_stream(50, 4, 100, 17));
  EXPECT_NE(sample_edge_stream(50, 4, 100, 17), sample_edge_stream(50, 4, 100, 18));
}

TEST(SampleEdgeStream, InclusionFrequenciesAreUniform) {
  // n = 6, t = 3: 20 edges, 10 drawn, so every edge is included w.p. 1/2.
  constexpr int kSeeds = 100'000;
  const auto universe = detail::all_edges(6, 3);
  for (std::size_t m : {10u, 11u}) {  // rejection path, then shuffle path
    std::map<HyperEdge, double> included;
    std::map<HyperEdge, double> first;
    for (int seed = 0; seed < kSeeds; ++seed) {
      const auto edges = sample_edge_stream(6, 3, m, static_cast<std::uint64_t>(seed) + 1000 * m);
      for (const auto& e : edges) included[e] += 1;
      first[edges.front()] += 1;
    }
    const double p = static_cast<double>(m) / 20.0;
    const double sigma = std::sqrt(kSeeds * p * (1 - p));
    double chi2_first = 0.0;
    for (const auto& e : universe) {
      EXPECT_NEAR(included[e], kSeeds * p, 3 * sigma) << e.to_string() << " m=" << m;
      const double expected = kSeeds / 20.0;
      chi2_first += (first[e] - expected) * (first[e] - expected) / expected;
    }
    // chi-square, 19 degrees of freedom, alpha = 0.01.
    EXPECT_LT(chi2_first, 36.191);
  }
}

TEST(SampleEdgeStream, RejectionOverheadWithinBudget) {
  // At m = N/2 the expected draw count is about N ln 2 = 1.39 m.
  const double universe = edge_universe_size(50, 3);
  const auto m = static_cast<std::size_t>(universe / 2);
  EdgeStreamStats stats;
  sample_edge_stream(50, 3, m, 3, &stats);
  EXPECT_FALSE(stats.enumerated);
  EXPECT_EQ(stats.draws - stats.rejected, m);
  EXPECT_LE(stats.draws, 2 * m);
}

TEST(InverseCdf, Examples) {
  const auto power3 = WeightDistribution::power(3, 1.0);
  EXPECT_DOUBLE_EQ(inverse_cdf(power3, 0.25), 0.5);
  EXPECT_EQ(inverse_cdf(power3, 0.0), 0.0);
  EXPECT_EQ(inverse_cdf(WeightDistribution::power(5, 2.0), 0.0), 0.0);
  const auto expo = WeightDistribution::exponential(1.0);
  EXPECT_NEAR(inverse_cdf(expo, 1.0 - std::exp(-1.0)), 1.0, 1e-15);
  EXPECT_THROW(inverse_cdf(power3, -0.1), DomainError);
  EXPECT_THROW(inverse_cdf(power3, 1.5), DomainError);
}

TEST(WeightDistribution, ScalingAndAdmissibility) {
  EXPECT_THROW(WeightDistribution::exponential(1.0, 3), DomainError);
  EXPECT_EQ(WeightDistribution::exponential(4.0).scale(), 0.25);
  // x / F(x)^{1/(t-1)} is exactly a for the power law.
  const auto d = WeightDistribution::power(4, 2.5);
  for (double x : {1e-6, 1e-3, 0.5}) EXPECT_NEAR(x / std::cbrt(d.cdf(x)), 2.5, 1e-12);
  const auto table = WeightDistribution::empirical({0.0, 1.0, 3.0}, 1.0);
  EXPECT_DOUBLE_EQ(table.inverse_cdf(0.75), 2.0);
  EXPECT_DOUBLE_EQ(table.cdf(2.0), 0.75);
  EXPECT_THROW(WeightDistribution::empirical({1.0, 0.5}, 1.0), DomainError);
}

TEST(SortedWeights, AscendingWithinSupport) {
  const auto dist = WeightDistribution::power(3, 2.0);
  const auto w = sorted_weights(edge_universe_size(40, 3), 500, dist, 11);
  EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
  EXPECT_GE(w.front(), 0.0);
  EXPECT_LE(w.back(), 2.0);
  EXPECT_THROW(sorted_weights(10, 11, dist, 0), ExhaustedUniverseError);
}

TEST(SortedWeights, MatchesSortOracleInLaw) {
  // N = m = 10 uniforms: the recursion must reproduce every order statistic
  // of sorting 10 iid draws.
  constexpr std::size_t kReps = 10'000;
  const auto dist = WeightDistribution::power(2, 1.0);
  std::vector<std::vector<double>> stream(10), oracle(10);
  std::mt19937_64 gen(424242);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t r = 0; r < kReps; ++r) {
    const auto w = sorted_weights(10, 10, dist, r);
    std::vector<double> draws(10);
    for (auto& x : draws) x = unif(gen);
    std::sort(draws.begin(), draws.end());
    for (std::size_t k = 0; k < 10; ++k) {
      stream[k].push_back(w[k]);
      oracle[k].push_back(draws[k]);
    }
  }
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_LT(ks_statistic(stream[k], oracle[k]), ks_critical_001(kReps, kReps)) << "k=" << k;
  }
}

TEST(SortedWeights, MinimumOfManyUniformsHasClosedFormMean) {
  const double universe = edge_universe_size(100, 2);
  constexpr int kTrials = 100'000;
  const auto dist = WeightDistribution::power(2, 1.0);
  double sum = 0.0;
  for (int i = 0; i < kTrials; ++i) sum += sorted_weights(universe, 1, dist, i)[0];
  const double expected = 1.0 / (universe + 1.0);  // 2.0198e-4
  const double sd = std::sqrt(universe / ((universe + 1) * (universe + 1) * (universe + 2)));
  EXPECT_NEAR(sum / kTrials, expected, 3 * sd / std::sqrt(static_cast<double>(kTrials)));
}

TEST(GenerateTrace, SingleEdgeHypergraph) {
  ProcessConfig config;
  config.n = 4;
  config.t = 4;
  config.m_max = 1;
  const auto trace = generate_trace(config);
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace.step(1).touched, 4u);
  EXPECT_EQ(trace.step(1).components_after, 1u);
}

TEST(GenerateTrace, TwoTriplesOnFourVerticesConnect) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ProcessConfig config{4, 3, 4, std::nullopt, seed};
    const auto trace = generate_trace(config);
    EXPECT_EQ(trace.components_at(2), 1u);
    EXPECT_EQ(trace.connection_step(), 2u);
  }
}

TEST(GenerateTrace, InvariantsAndDeterminism) {
  ProcessConfig config{60, 3, 0, WeightDistribution::power(3, 1.5), 8};
  const auto trace = generate_trace(config);
  const auto again = generate_trace(config);
  ASSERT_EQ(trace.size(), default_step_limit(60, 3));
  std::size_t merged = 0;
  std::size_t previous = 60;
  std::vector<HyperEdge> edges;
  for (std::size_t i = 1; i <= trace.size(); ++i) {
    const auto& s = trace.step(i);
    EXPECT_EQ(s.edge, again.step(i).edge);
    EXPECT_EQ(s.weight, again.step(i).weight);
    if (i > 1) {
      EXPECT_LE(trace.step(i - 1).weight, s.weight);
    }
    EXPECT_LE(s.components_after, previous);
    EXPECT_EQ(previous - s.components_after, s.touched - 1u);
    merged += s.touched - 1;
    previous = s.components_after;
    edges.push_back(s.edge);
  }
  ASSERT_TRUE(trace.connected());
  EXPECT_EQ(merged, 59u);
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(std::unique(edges.begin(), edges.end()), edges.end());
  EXPECT_THROW(static_cast<void>(trace.components_at(trace.size() + 1)), BoundsError);
}

TEST(GenerateTrace, MatchesFullMaterializationInLaw) {
  // Oracle: give every one of the C(10,3) = 120 edges an iid weight, sort,
  // and replay. Compare K at a few steps, the connection step and w_5.
  constexpr std::size_t n = 10, t = 3;
  constexpr int kReps = 4000;
  const auto dist = WeightDistribution::power(t, 1.0);
  const auto universe = detail::all_edges(n, t);
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::map<int, std::map<int, double>> k_fast, k_oracle;
  std::map<int, double> conn_fast, conn_oracle;
  std::vector<double> w5_fast, w5_oracle;
  const std::vector<int> probes = {3, 5, 8};
  for (int r = 0; r < kReps; ++r) {
    ProcessConfig config{n, t, 40, dist, static_cast<std::uint64_t>(r)};
    const auto fast = generate_trace(config);

    std::vector<WeightedEdge> all;
    for (const auto& e : universe) all.push_back({e, dist.inverse_cdf(unif(gen))});
    std::sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.weight < b.weight; });
    all.resize(40);
    const auto slow = trace_from_edges(n, all);

    for (int p : probes) {
      k_fast[p][static_cast<int>(fast.step(p).touched)] += 1;
      k_oracle[p][static_cast<int>(slow.step(p).touched)] += 1;
    }
    conn_fast[std::min<int>(static_cast<int>(fast.connection_step()), 12)] += 1;
    conn_oracle[std::min<int>(static_cast<int>(slow.connection_step()), 12)] += 1;
    w5_fast.push_back(fast.step(5).weight);
    w5_oracle.push_back(slow.step(5).weight);
  }
  for (int p : probes) EXPECT_LT(homogeneity_chi2(k_fast[p], k_oracle[p]), 9.2103) << "step " << p;
  // Connection step bins 4..12 (fewer edges cannot span 10 vertices): df <= 8.
  EXPECT_LT(homogeneity_chi2(conn_fast, conn_oracle), 20.090);
  EXPECT_LT(ks_statistic(w5_fast, w5_oracle), ks_critical_001(kReps, kReps));
}

TEST(TraceFromEdges, RejectsBadSequences) {
  std::vector<WeightedEdge> descending = {{make_edge({0, 1, 2}, 4), 0.5},
                                          {make_edge({0, 1, 3}, 4), 0.2}};
  EXPECT_THROW(trace_from_edges(4, descending), DomainError);
  std::vector<WeightedEdge> repeated = {{make_edge({0, 1, 2}, 4), 0.1},
                                        {make_edge({2, 1, 0}, 4), 0.2}};
  EXPECT_THROW(trace_from_edges(4, repeated), MalformedEdgeError);
}
