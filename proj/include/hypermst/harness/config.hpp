#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hypermst/errors.hpp"
#include "hypermst/weight_distribution.hpp"

namespace hypermst::harness {

enum class ExperimentKind { mst, prefix_curve, giant, decay, projection, sandwich };

inline std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::mst:
      return "mst";
    case ExperimentKind::prefix_curve:
      return "prefix-curve";
    case ExperimentKind::giant:
      return "giant";
    case ExperimentKind::decay:
      return "decay";
    case ExperimentKind::projection:
      return "projection";
    case ExperimentKind::sandwich:
      return "sandwich";
  }
  return "unknown";
}

inline ExperimentKind parse_kind(std::string_view text) {
  for (auto kind : {ExperimentKind::mst, ExperimentKind::prefix_curve, ExperimentKind::giant,
                    ExperimentKind::decay, ExperimentKind::projection, ExperimentKind::sandwich}) {
    if (to_string(kind) == text) return kind;
  }
  throw ConfigError("unknown experiment kind '" + std::string(text) + "'");
}

/// Which weight law to draw from; the scale a is shared by both kinds.
struct DistributionChoice {
  DistributionKind kind = DistributionKind::power;
  double a = 1.0;

  [[nodiscard]] WeightDistribution build(std::size_t t) const {
    if (kind == DistributionKind::exponential) return WeightDistribution::exponential(1.0 / a, t);
    return WeightDistribution::power(t, a);
  }
};

inline DistributionKind parse_distribution(std::string_view text) {
  if (text == "power") return DistributionKind::power;
  if (text == "exp" || text == "exponential") return DistributionKind::exponential;
  throw ConfigError("unknown distribution '" + std::string(text) + "' (expected power or exp)");
}

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::mst;
  std::size_t n = 1000;
  std::size_t t = 3;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::vector<double> grid;  ///< c-values (edges per vertex), strictly increasing
  DistributionChoice distribution;
  std::string output_path;
  unsigned workers = 1;
  double sigma = 3.0;      ///< width of statistical tolerance bands
  std::size_t m_max = 0;   ///< 0 selects the default run length
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_plain(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses a decimal or a simple fraction such as "1/6".
inline double parse_number(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return detail::parse_plain(text);
  const double numerator = detail::parse_plain(text.substr(0, slash));
  const double denominator = detail::parse_plain(text.substr(slash + 1));
  if (denominator == 0.0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return numerator / denominator;
}

/// Comma-separated list of numbers (fractions allowed).
inline std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

inline std::uint64_t parse_unsigned(std::string_view text) {
  text = detail::trim(text);
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

/// Reads `key = value` lines; '#' starts a comment. Later keys win.
inline std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open config file " + path.string());
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t number = 0;
  while (std::getline(file, line)) {
    ++number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": expected key = value");
    }
    entries[std::string(detail::trim(view.substr(0, eq)))] =
        std::string(detail::trim(view.substr(eq + 1)));
  }
  return entries;
}

/// Sets one field of `config` from its textual form. Keys match the
/// command-line flag names.
inline void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
  if (key == "kind") {
    config.kind = parse_kind(value);
  } else if (key == "n") {
    config.n = parse_unsigned(value);
  } else if (key == "t") {
    config.t = parse_unsigned(value);
  } else if (key == "trials") {
    config.trials = parse_unsigned(value);
  } else if (key == "seed") {
    config.seed = parse_unsigned(value);
  } else if (key == "c" || key == "grid") {
    config.grid = parse_grid(value);
  } else if (key == "a") {
    config.distribution.a = parse_number(value);
  } else if (key == "dist") {
    config.distribution.kind = parse_distribution(value);
  } else if (key == "out") {
    config.output_path = std::string(value);
  } else if (key == "workers") {
    config.workers = static_cast<unsigned>(parse_unsigned(value));
  } else if (key == "sigma") {
    config.sigma = parse_number(value);
  } else if (key == "m") {
    config.m_max = parse_unsigned(value);
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

inline void validate(const ExperimentConfig& config) {
  if (config.t < 2) throw ConfigError("t must be at least 2");
  if (config.n < config.t) throw ConfigError("n must be at least t");
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (!(config.distribution.a > 0.0)) throw ConfigError("scale a must be positive");
  if (config.distribution.kind == DistributionKind::exponential && config.t != 2) {
    throw ConfigError("exponential weights are only admissible for t = 2");
  }
  if (!(config.sigma > 0.0)) throw ConfigError("sigma must be positive");
  for (std::size_t i = 0; i < config.grid.size(); ++i) {
    if (!(config.grid[i] >= 0.0) || !std::isfinite(config.grid[i])) {
      throw ConfigError("grid values must be finite and non-negative");
    }
    if (i > 0 && !(config.grid[i] > config.grid[i - 1])) {
      throw ConfigError("grid must be strictly increasing");
    }
  }
}

}  // namespace hypermst::harness
