#include "meanlab/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace meanlab {

using json = nlohmann::ordered_json;

Format format_from_string(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("format must be table, csv or json, got '" + s + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::table: return "table";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "?";
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

// JSON has no NaN or infinity; those cells become null.
json cell_for_json(const json& c) {
  if (c.is_number_float() && !std::isfinite(c.get<double>())) return nullptr;
  return c;
}

std::string cell_text(const json& c, bool lossy) {
  if (c.is_number_float()) {
    const double v = c.get<double>();
    if (!lossy || !std::isfinite(v)) return format_number(v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
  }
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  if (c.is_number_unsigned()) return std::to_string(c.get<unsigned long long>());
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_string()) return c.get<std::string>();
  if (c.is_null()) return "";
  return c.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar_text(const json& v) {
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

json to_json(const Report& r) {
  json rows = json::array();
  for (const auto& row : r.table.rows) {
    json jr = json::array();
    for (const auto& c : row) jr.push_back(cell_for_json(c));
    rows.push_back(std::move(jr));
  }
  json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = {{"columns", r.table.columns}, {"rows", rows}, {"summary", r.summary}};
  j["witnesses"] = r.witnesses;
  j["verdict"] = r.verdict;
  return j;
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.table.columns.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(r.table.columns[i]);
  }
  os << '\n';
  for (const auto& row : r.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(cell_text(row[i], false));
    }
    os << '\n';
  }
  return os.str();
}

std::string to_table(const Report& r) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(r.table.columns);
  for (const auto& row : r.table.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) line.push_back(cell_text(c, true));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(r.table.columns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) os << "  ";
      os << line[i];
      if (i + 1 < line.size() && i < width.size()) {
        os << std::string(width[i] - line[i].size(), ' ');
      }
    }
    os << '\n';
  }
  for (const auto& [key, value] : r.summary.items()) {
    if (value.is_array()) {
      os << key << ":\n";
      for (const auto& line : value) os << "  " << scalar_text(line) << '\n';
    } else {
      os << key << ": " << scalar_text(value) << '\n';
    }
  }
  if (!r.verdict.empty()) os << "verdict: " << r.verdict << '\n';
  return os.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::table: return to_table(r);
    case Format::csv: return to_csv(r);
    case Format::json: return to_json(r).dump(2) + "\n";
  }
  return {};
}

bool RunConfig::operator==(const RunConfig& o) const {
  return command == o.command && args == o.args && grid.points == o.grid.points &&
         grid.t_min == o.grid.t_min && grid.t_max == o.grid.t_max && grid.seed == o.grid.seed &&
         tol == o.tol && format == o.format && out == o.out;
}

json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"args", c.args},
          {"grid",
           {{"points", c.grid.points},
            {"t_min", c.grid.t_min},
            {"t_max", c.grid.t_max},
            {"seed", c.grid.seed}}},
          {"tol", c.tol},
          {"format", to_string(c.format)},
          {"out", c.out}};
}

RunConfig run_config_from_json(const json& j) {
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.args = j.at("args").get<std::vector<std::string>>();
    const auto& g = j.at("grid");
    c.grid.points = g.at("points").get<int>();
    c.grid.t_min = g.at("t_min").get<double>();
    c.grid.t_max = g.at("t_max").get<double>();
    c.grid.seed = g.at("seed").get<std::uint64_t>();
    c.tol = j.at("tol").get<double>();
    c.format = format_from_string(j.at("format").get<std::string>());
    c.out = j.at("out").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("run config: ") + e.what());
  }
}

}  // namespace meanlab
