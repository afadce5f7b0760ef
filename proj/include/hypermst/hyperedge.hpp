#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "hypermst/errors.hpp"

namespace hypermst {

using Vertex = std::uint32_t;

/// Largest supported edge arity t.
inline constexpr std::size_t kMaxArity = 16;

/// A t-element vertex set stored in canonical (strictly increasing) order.
///
/// Storage is inline so that the process generator can keep hundreds of
/// thousands of edges without per-edge allocation.
class HyperEdge {
 public:
  HyperEdge() = default;

  [[nodiscard]] std::size_t arity() const noexcept { return size_; }
  [[nodiscard]] std::span<const Vertex> vertices() const noexcept {
    return {vertices_.data(), size_};
  }
  [[nodiscard]] Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }
  [[nodiscard]] auto begin() const noexcept { return vertices_.begin(); }
  [[nodiscard]] auto end() const noexcept { return vertices_.begin() + size_; }

  friend bool operator==(const HyperEdge& lhs, const HyperEdge& rhs) noexcept {
    return std::ranges::equal(lhs.vertices(), rhs.vertices());
  }
  friend bool operator<(const HyperEdge& lhs, const HyperEdge& rhs) noexcept {
    return std::ranges::lexicographical_compare(lhs.vertices(), rhs.vertices());
  }

  [[nodiscard]] std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i != 0) out += ',';
      out += std::to_string(vertices_[i]);
    }
    return out + ")";
  }

  /// Builds an edge from vertices that the caller guarantees are sorted,
  /// distinct and in range. Used on hot paths after validation elsewhere.
  static HyperEdge from_canonical(std::span<const Vertex> sorted) noexcept {
    HyperEdge edge;
    edge.size_ = sorted.size();
    std::ranges::copy(sorted, edge.vertices_.begin());
    return edge;
  }

 private:
  std::array<Vertex, kMaxArity> vertices_{};
  std::size_t size_ = 0;
};

/// Validates `raw` against a universe of `n` vertices and returns the
/// canonical sorted edge.
inline HyperEdge make_edge(std::span<const std::int64_t> raw, std::size_t n) {
  if (raw.size() < 2) {
    throw MalformedEdgeError("hyperedge needs at least 2 vertices, got " +
                             std::to_string(raw.size()));
  }
  if (raw.size() > kMaxArity) {
    throw MalformedEdgeError("hyperedge arity " + std::to_string(raw.size()) +
                             " exceeds the supported maximum " + std::to_string(kMaxArity));
  }
  std::array<Vertex, kMaxArity> sorted{};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || static_cast<std::uint64_t>(raw[i]) >= n) {
      throw BoundsError("vertex " + std::to_string(raw[i]) + " outside [0, " +
                        std::to_string(n) + ")");
    }
    sorted[i] = static_cast<Vertex>(raw[i]);
  }
  std::sort(sorted.begin(), sorted.begin() + raw.size());
  if (std::adjacent_find(sorted.begin(), sorted.begin() + raw.size()) !=
      sorted.begin() + raw.size()) {
    throw MalformedEdgeError("hyperedge has a repeated vertex");
  }
  return HyperEdge::from_canonical({sorted.data(), raw.size()});
}

inline HyperEdge make_edge(std::initializer_list<std::int64_t> raw, std::size_t n) {
  return make_edge(std::span<const std::int64_t>(raw.begin(), raw.size()), n);
}

struct HyperEdgeHash {
  std::size_t operator()(const HyperEdge& edge) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ edge.arity();
    for (Vertex v : edge.vertices()) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hypermst
