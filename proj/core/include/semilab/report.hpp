#pragma once

// JSON and CSV report emission. Field order is fixed so identical runs
// produce byte-identical files.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "semilab/types.hpp"

namespace semilab {

struct Report {
  std::string query;
  std::string instance;
  std::optional<Bounds> bounds;
  std::optional<std::string> verdict;
  std::vector<std::string> witnesses;
  std::vector<std::string> elements;
  std::optional<bool> complete;
  bool truncated = false;
  /// Query-specific fields appended after the common ones, as serialized JSON.
  std::vector<std::pair<std::string, std::string>> extra;

  void add_json(std::string key, std::string json) { extra.emplace_back(std::move(key), std::move(json)); }
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

std::string to_json(const Report& r);
/// Writes text to path; throws IoError naming the path.
void write_file(const std::string& path, const std::string& text);
/// JSON to `out`, and to the optional file paths.
void emit_report(const Report& r, std::ostream& out, const std::optional<std::string>& json_path,
                 const CsvTable* csv = nullptr, const std::optional<std::string>& csv_path = std::nullopt);

}  // namespace semilab
