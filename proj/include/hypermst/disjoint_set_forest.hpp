#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hypermst/errors.hpp"
#include "hypermst/hyperedge.hpp"

namespace hypermst {

/// Union-find over vertices 0..n-1 with union by size and path compression.
///
/// Besides the usual find/unite it reports the two quantities the greedy
/// algorithms read: the number of distinct components an edge touches (K)
/// and the total component count C(G). Equal-size roots are merged under
/// the smaller root index so that a fixed sequence of merges always yields
/// the same forest.
class DisjointSetForest {
 public:
  explicit DisjointSetForest(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    if (n == 0) throw EmptyUniverseError("disjoint-set forest needs at least one vertex");
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
    largest_ = 1;
  }

  [[nodiscard]] std::size_t universe() const noexcept { return parent_.size(); }
  [[nodiscard]] std::size_t component_count() const noexcept { return components_; }
  [[nodiscard]] std::size_t largest_component() const noexcept { return largest_; }

  /// Number of parent-link hops taken by all finds so far.
  [[nodiscard]] std::uint64_t find_steps() const noexcept { return find_steps_; }

  Vertex find(Vertex v) {
    check(v);
    Vertex root = v;
    while (parent_[root] != root) {
      root = parent_[root];
      ++find_steps_;
    }
    while (parent_[v] != root) {
      Vertex next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  std::size_t component_size(Vertex v) { return size_[find(v)]; }

  bool same_component(Vertex a, Vertex b) { return find(a) == find(b); }

  /// Merges the components of `a` and `b`; returns false if already joined.
  bool unite(Vertex a, Vertex b) {
    Vertex ra = find(a);
    Vertex rb = find(b);
    if (ra == rb) return false;
    link_roots(ra, rb);
    return true;
  }

  /// K: the number of distinct components containing the edge's vertices.
  std::size_t count_distinct(const HyperEdge& edge) {
    std::array<Vertex, kMaxArity> roots{};
    return collect_roots(edge, roots);
  }

  /// Joins every vertex of `edge` into one component and returns K as it
  /// was before the merge. The component count drops by exactly K - 1.
  std::size_t merge(const HyperEdge& edge) {
    std::array<Vertex, kMaxArity> roots{};
    const std::size_t distinct = collect_roots(edge, roots);
    Vertex target = roots[0];
    for (std::size_t i = 1; i < distinct; ++i) {
      target = link_roots(target, roots[i]);
    }
    return distinct;
  }

 private:
  void check(Vertex v) const {
    if (v >= parent_.size()) {
      throw BoundsError("vertex " + std::to_string(v) + " outside forest of size " +
                        std::to_string(parent_.size()));
    }
  }

  std::size_t collect_roots(const HyperEdge& edge, std::array<Vertex, kMaxArity>& roots) {
    std::size_t distinct = 0;
    for (Vertex v : edge.vertices()) {
      const Vertex r = find(v);
      if (std::find(roots.begin(), roots.begin() + distinct, r) == roots.begin() + distinct) {
        roots[distinct++] = r;
      }
    }
    return distinct;
  }

  // Both arguments must be distinct roots. Returns the surviving root.
  Vertex link_roots(Vertex ra, Vertex rb) {
    if (size_[ra] < size_[rb] || (size_[ra] == size_[rb] && rb < ra)) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    largest_ = std::max(largest_, size_[ra]);
    --components_;
    return ra;
  }

  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
  std::size_t largest_ = 0;
  std::uint64_t find_steps_ = 0;
};

}  // namespace hypermst
