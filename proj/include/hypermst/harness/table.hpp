#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "hypermst/errors.hpp"

namespace hypermst::harness {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

/// Rows of a result file. Column order is fixed by `columns`.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
      throw ConfigError("row has " + std::to_string(row.size()) + " cells, table has " +
                        std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
  }
};

/// Doubles use 12 significant digits; booleans print as 1/0.
inline std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "1" : "0"; }
    std::string operator()(double v) const {
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.12g", v);
      return buffer;
    }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string quoted = "\"";
      for (char ch : v) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      return quoted + "\"";
    }
  };
  return std::visit(Visitor{}, cell);
}

inline std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out += ',';
    out += format_cell(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

/// Writes the table as comma-separated values with a header row.
inline void write_table(const Table& table, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory for " + path.string() + ": " + ec.message());
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  const std::string body = to_csv(table);
  file.write(body.data(), static_cast<std::streamsize>(body.size()));
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace hypermst::harness
