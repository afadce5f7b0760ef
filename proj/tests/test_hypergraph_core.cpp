#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hypermst/disjoint_set_forest.hpp"
#include "hypermst/hyperedge.hpp"

using namespace hypermst;

namespace {

std::vector<Vertex> verts(const HyperEdge& e) { return {e.begin(), e.end()}; }

// Naive connectivity: one label per vertex, relabel on every merge.
struct LabelOracle {
  std::vector<std::size_t> label;
  explicit LabelOracle(std::size_t n) : label(n) {
    for (std::size_t i = 0; i < n; ++i) label[i] = i;
  }
  std::size_t distinct(const HyperEdge& e) const {
    std::set<std::size_t> seen;
    for (Vertex v : e.vertices()) seen.insert(label[v]);
    return seen.size();
  }
  void merge(const HyperEdge& e) {
    const std::size_t target = label[e[0]];
    for (Vertex v : e.vertices()) {
      const std::size_t old = label[v];
      for (auto& l : label) {
        if (l == old) l = target;
      }
    }
  }
  std::size_t components() const { return std::set<std::size_t>(label.begin(), label.end()).size(); }
};

HyperEdge random_edge(std::mt19937_64& gen, std::size_t n, std::size_t t) {
  std::vector<std::int64_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::int64_t>(i);
  std::shuffle(pool.begin(), pool.end(), gen);
  pool.resize(t);
  return make_edge(pool, n);
}

}  // namespace

TEST(MakeEdge, SortsIntoCanonicalOrder) {
  EXPECT_EQ(verts(make_edge({3, 1, 2}, 5)), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(verts(make_edge({0, 1}, 2)), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(make_edge({4, 0, 2}, 5), make_edge({2, 4, 0}, 5));
  EXPECT_FALSE(make_edge({0, 1, 2}, 5) == make_edge({0, 1, 3}, 5));
}

TEST(MakeEdge, RejectsDuplicatesAndOutOfRange) {
  EXPECT_THROW(make_edge({1, 1, 2}, 5), MalformedEdgeError);
  EXPECT_THROW(make_edge({0, 5, 2}, 5), BoundsError);
  EXPECT_THROW(make_edge({-1, 2}, 5), BoundsError);
  EXPECT_THROW(make_edge({3}, 5), MalformedEdgeError);
}

TEST(DisjointSetForest, StartsWithSingletons) {
  EXPECT_EQ(DisjointSetForest(1).component_count(), 1u);
  EXPECT_EQ(DisjointSetForest(5).component_count(), 5u);
  EXPECT_THROW(DisjointSetForest(0), EmptyUniverseError);
}

TEST(DisjointSetForest, CountDistinctExamples) {
  DisjointSetForest forest(5);
  EXPECT_EQ(forest.count_distinct(make_edge({0, 1, 2}, 5)), 3u);
  forest.merge(make_edge({0, 1, 2}, 5));
  EXPECT_EQ(forest.count_distinct(make_edge({0, 1, 3}, 5)), 2u);
  EXPECT_EQ(forest.count_distinct(make_edge({0, 1, 2}, 5)), 1u);
  EXPECT_EQ(forest.component_count(), 3u);
}

TEST(DisjointSetForest, MergeReturnsComponentsTouchedBeforehand) {
  DisjointSetForest forest(4);
  EXPECT_EQ(forest.merge(make_edge({0, 1, 2}, 4)), 3u);
  EXPECT_EQ(forest.component_count(), 2u);
  EXPECT_EQ(forest.merge(make_edge({0, 1, 3}, 4)), 2u);
  EXPECT_EQ(forest.component_count(), 1u);
  EXPECT_EQ(forest.merge(make_edge({1, 2, 3}, 4)), 1u);
  EXPECT_EQ(forest.component_count(), 1u);
  EXPECT_EQ(forest.largest_component(), 4u);
}

TEST(DisjointSetForest, EqualSizesMergeUnderSmallerRoot) {
  DisjointSetForest forest(6);
  forest.unite(5, 2);
  EXPECT_EQ(forest.find(5), 2u);
  forest.unite(4, 3);
  forest.unite(4, 2);
  EXPECT_EQ(forest.find(4), 2u);
}

TEST(DisjointSetForest, RejectsVerticesOutsideUniverse) {
  DisjointSetForest forest(3);
  EXPECT_THROW(forest.find(3), BoundsError);
  EXPECT_THROW(forest.merge(make_edge({0, 1, 3}, 4)), BoundsError);
}

TEST(DisjointSetForestProperty, AgreesWithLabelOracleOnRandomSequences) {
  std::mt19937_64 gen(20241017);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + gen() % 49;
    const std::size_t t = 2 + gen() % std::min<std::size_t>(n - 1, 5);
    DisjointSetForest forest(n);
    LabelOracle oracle(n);
    std::size_t previous = n;
    for (int step = 0; step < 60; ++step) {
      const HyperEdge e = random_edge(gen, n, t);
      const std::size_t k = forest.count_distinct(e);
      ASSERT_EQ(k, oracle.distinct(e));
      ASSERT_EQ(forest.count_distinct(e), k);  // idempotent
      ASSERT_GE(k, 1u);
      ASSERT_LE(k, t);
      const std::size_t before = forest.merge(e);
      oracle.merge(e);
      ASSERT_EQ(before, k);
      ASSERT_EQ(previous - forest.component_count(), before - 1);
      ASSERT_LE(forest.component_count(), previous);
      previous = forest.component_count();

      std::set<Vertex> roots;
      std::size_t covered = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (roots.insert(forest.find(v)).second) covered += forest.component_size(v);
      }
      ASSERT_EQ(roots.size(), forest.component_count());
      ASSERT_EQ(roots.size(), oracle.components());
      ASSERT_EQ(covered, n);
    }
  }
}

TEST(DisjointSetForestProperty, FindWorkStaysNearLinear) {
  constexpr std::size_t n = 1'000'000;
  constexpr std::size_t operations = 2'000'000;
  DisjointSetForest forest(n);
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t i = 0; i < operations; ++i) forest.unite(pick(gen), pick(gen));
  // Two finds per unite; the inverse-Ackermann factor is below 4 here.
  EXPECT_LE(forest.find_steps(), 8 * (operations + n));
}
