#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hypermst/disjoint_set_forest.hpp"
#include "hypermst/errors.hpp"
#include "hypermst/hyperedge.hpp"
#include "hypermst/process.hpp"

namespace hypermst {

/// Largest subset size the exhaustive oracle accepts.
inline constexpr std::size_t kBruteForceEdgeCap = 40;

/// True iff replacing every hyperedge by a clique gives a connected graph
/// on all n vertices.
inline bool hypergraph_connected(std::size_t n, std::span<const HyperEdge> edges) {
  if (n == 0) return false;
  DisjointSetForest forest(n);
  for (const auto& edge : edges) forest.merge(edge);
  return forest.component_count() == 1;
}

struct ForestWeight {
  double weight = 0.0;
  bool connected = false;
  std::size_t components = 0;
};

/// Independent check for clique_lower: expands each hyperedge into all
/// t(t-1)/2 vertex pairs and runs textbook pairwise Kruskal with its own
/// label-array bookkeeping. Disconnected inputs return the spanning-forest
/// weight with `connected == false`. `n == 0` means "max vertex + 1".
inline ForestWeight clique_expand_oracle(std::span<const WeightedEdge> edges, std::size_t n = 0) {
  struct Pair {
    Vertex u;
    Vertex v;
    double weight;
  };
  std::vector<Pair> pairs;
  for (const auto& [edge, weight] : edges) {
    for (std::size_t i = 0; i < edge.arity(); ++i) {
      n = std::max<std::size_t>(n, edge[i] + 1);
      for (std::size_t j = i + 1; j < edge.arity(); ++j) pairs.push_back({edge[i], edge[j], weight});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.weight < b.weight; });

  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  std::vector<std::vector<Vertex>> members(n);
  for (std::size_t v = 0; v < n; ++v) members[v] = {static_cast<Vertex>(v)};

  ForestWeight result;
  result.components = n;
  for (const auto& [u, v, weight] : pairs) {
    std::size_t a = label[u];
    std::size_t b = label[v];
    if (a == b) continue;
    if (members[a].size() < members[b].size()) std::swap(a, b);
    for (Vertex x : members[b]) label[x] = a;
    members[a].insert(members[a].end(), members[b].begin(), members[b].end());
    members[b].clear();
    result.weight += weight;
    --result.components;
  }
  result.connected = result.components == 1;
  return result;
}

/// Drops edges that cannot belong to any spanning subgraph lighter than
/// `upper_bound`: a spanning subgraph has at least ceil((n-1)/(t-1)) edges,
/// so an edge e is useless once w_e plus the smallest other weights needed
/// to reach that count already exceeds the bound. Every edge of an optimal
/// subset survives whenever the optimum is at most `upper_bound`, so the
/// reduced set has the same minimum.
inline std::vector<WeightedEdge> msp_candidates(std::size_t n, std::span<const WeightedEdge> edges,
                                                double upper_bound) {
  if (edges.empty()) return {};
  const std::size_t t = edges.front().edge.arity();
  const std::size_t min_edges = n <= 1 ? 1 : (n - 1 + t - 2) / (t - 1);
  std::vector<double> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) sorted.push_back(e.weight);
  std::ranges::sort(sorted);

  // Sums taken in a different order may differ from upper_bound by rounding.
  const double limit = upper_bound * (1.0 + 1e-12);
  std::vector<WeightedEdge> kept;
  for (const auto& e : edges) {
    double others = 0.0;
    std::size_t taken = 0;
    bool skipped_self = false;
    for (double w : sorted) {
      if (taken + 1 >= min_edges) break;
      if (!skipped_self && w == e.weight) {
        skipped_self = true;
        continue;
      }
      others += w;
      ++taken;
    }
    if (e.weight + others <= limit) kept.push_back(e);
  }
  return kept;
}

/// Exact minimum spanning subgraph weight by exhaustive search.
///
/// Subsets are visited by cardinality, starting at the smallest size that
/// can span. Within a class, edges are taken in ascending weight order and a
/// branch is cut once its partial weight plus the cheapest completion
/// reaches the best spanning weight so far; a whole class is skipped once
/// its cheapest possible subset does.
inline double brute_force_msp(std::size_t n, std::span<const WeightedEdge> edges) {
  if (edges.size() > kBruteForceEdgeCap) {
    throw CapacityError("exhaustive search limited to " + std::to_string(kBruteForceEdgeCap) +
                        " edges, got " + std::to_string(edges.size()));
  }
  std::vector<HyperEdge> plain;
  for (const auto& e : edges) plain.push_back(e.edge);
  if (edges.empty() || !hypergraph_connected(n, plain)) {
    throw NoSpanningSubgraphError("edge set does not connect all " + std::to_string(n) +
                                  " vertices");
  }

  std::vector<WeightedEdge> sorted(edges.begin(), edges.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.weight < b.weight; });
  const std::size_t count = sorted.size();
  std::vector<double> cheapest(count + 1, 0.0);  // cheapest[i]: sum of i smallest weights
  for (std::size_t i = 0; i < count; ++i) cheapest[i + 1] = cheapest[i] + sorted[i].weight;
  // Cheapest way to pick r more edges at or after position `from`.
  auto completion = [&](std::size_t from, std::size_t r) {
    return cheapest[from + r] - cheapest[from];
  };

  const std::size_t t = sorted.front().edge.arity();
  const std::size_t min_edges = n <= 1 ? 1 : (n - 1 + t - 2) / (t - 1);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> chosen;

  auto spans = [&]() {
    DisjointSetForest forest(n);
    for (std::size_t idx : chosen) forest.merge(sorted[idx].edge);
    return forest.component_count() == 1;
  };

  std::function<void(std::size_t, std::size_t, double)> extend =
      [&](std::size_t from, std::size_t size, double partial) {
        const std::size_t need = size - chosen.size();
        if (need == 0) {
          if (partial < best && spans()) best = partial;
          return;
        }
        for (std::size_t i = from; i + need <= count; ++i) {
          if (partial + completion(i, need) >= best) return;
          chosen.push_back(i);
          extend(i + 1, size, partial + sorted[i].weight);
          chosen.pop_back();
        }
      };

  for (std::size_t size = std::min(min_edges, count); size <= count; ++size) {
    if (cheapest[size] >= best) break;
    extend(0, size, 0.0);
  }
  return best;
}

}  // namespace hypermst
