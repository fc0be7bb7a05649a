#pragma once

// Tabular command output, rendered as CSV (header row, numeric rows,
// `#` metadata lines) or as a single JSON document.

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "massplanck/io.hpp"

namespace massplanck::cli {

struct Table {
  std::string subcommand;
  std::string units;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> meta;     // before the header
  std::vector<std::pair<std::string, double>> summary;  // after the rows
};

inline void write_csv(std::ostream& out, const Table& t) {
  for (const auto& [key, value] : t.meta) out << "# " << key << '=' << io::format_double(value) << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << io::format_double(row[c]);
    out << '\n';
  }
  for (const auto& [key, value] : t.summary) {
    out << "# " << key << '=' << io::format_double(value) << '\n';
  }
}

inline nlohmann::json to_json(const Table& t) {
  nlohmann::json doc;
  doc["subcommand"] = t.subcommand;
  doc["units"] = t.units;
  doc["columns"] = t.columns;
  doc["rows"] = t.rows;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : t.meta) meta[key] = value;
  doc["meta"] = meta;
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [key, value] : t.summary) summary[key] = value;
  doc["summary"] = summary;
  return doc;
}

}  // namespace massplanck::cli
