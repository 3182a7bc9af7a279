#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "meanlab/grid.hpp"

namespace meanlab {

enum class Format { table, csv, json };
Format format_from_string(const std::string& s);
std::string to_string(Format f);

/// Rows of the numeric payload. Cells are numbers, strings or booleans.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

/// One subcommand's output. The table is the numeric payload shared by the
/// CSV and JSON renderings; `summary` holds scalar outcomes shown alongside.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  Table table;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  std::string verdict;
};

/// Shortest decimal that parses back to v; "nan", "inf", "-inf" otherwise.
std::string format_number(double v);

/// Top-level object with keys command, inputs, results, witnesses, verdict.
/// results carries columns, rows and summary.
nlohmann::ordered_json to_json(const Report& r);
/// Header row plus one line per table row, numbers in shortest round-trip
/// form.
std::string to_csv(const Report& r);
/// Aligned columns with numbers at 9 significant digits, then the summary
/// and the verdict.
std::string to_table(const Report& r);
std::string render(const Report& r, Format f);

/// A parsed command line. Serializes to JSON and parses back unchanged.
struct RunConfig {
  std::string command;
  std::vector<std::string> args;  ///< positional arguments after the command
  GridOptions grid;
  double tol = 1e-11;
  Format format = Format::table;
  std::string out;  ///< empty for standard output

  bool operator==(const RunConfig&) const;
};

nlohmann::ordered_json to_json(const RunConfig& c);
/// Throws std::invalid_argument on missing or ill-typed fields.
RunConfig run_config_from_json(const nlohmann::ordered_json& j);

}  // namespace meanlab
