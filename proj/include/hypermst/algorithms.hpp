#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypermst/errors.hpp"
#include "hypermst/process.hpp"

namespace hypermst {

/// Output of a greedy pass over a process trace.
struct AlgorithmResult {
  double total = 0.0;                       ///< sum of all increments
  std::vector<double> prefix_values;        ///< A_c at each requested step count
  std::vector<std::size_t> selected_steps;  ///< 1-based steps with a positive increment
};

namespace detail {

template <class Increment>
AlgorithmResult greedy_pass(const ProcessTrace& trace, std::span<const std::size_t> checkpoints,
                            Increment&& multiplicity) {
  for (std::size_t c : checkpoints) {
    if (c > trace.size()) {
      throw BoundsError("checkpoint " + std::to_string(c) + " beyond trace length " +
                        std::to_string(trace.size()));
    }
  }
  std::vector<double> running(trace.size() + 1, 0.0);
  AlgorithmResult result;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace.steps()[i];
    const double factor = multiplicity(step.touched);
    running[i + 1] = running[i] + factor * step.weight;
    if (factor > 0.0) result.selected_steps.push_back(i + 1);
  }
  result.total = running.back();
  result.prefix_values.reserve(checkpoints.size());
  for (std::size_t c : checkpoints) result.prefix_values.push_back(running[c]);
  return result;
}

}  // namespace detail

/// Kruskal on the hypergraph: pay w_i whenever e_i joins at least two
/// components. The selected edges span, so the total bounds the minimum
/// spanning subgraph from above.
inline AlgorithmResult kruskal_upper(const ProcessTrace& trace,
                                     std::span<const std::size_t> checkpoints = {}) {
  return detail::greedy_pass(trace, checkpoints,
                             [](std::uint32_t k) { return k > 1 ? 1.0 : 0.0; });
}

/// Pay w_i (K_i - 1) per arrival. This is the MST of the multigraph that
/// replaces each hyperedge by a clique of the same weight; dividing by t-1
/// bounds the minimum spanning subgraph from below.
inline AlgorithmResult clique_lower(const ProcessTrace& trace,
                                    std::span<const std::size_t> checkpoints = {}) {
  return detail::greedy_pass(trace, checkpoints,
                             [](std::uint32_t k) { return static_cast<double>(k) - 1.0; });
}

}  // namespace hypermst
