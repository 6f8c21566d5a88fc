#pragma once

// Tabular report model and its three renderings (aligned text, JSON, CSV).

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace pf::cli {

using Value = std::variant<std::monostate, double, long long, bool, std::string>;

struct Column {
  std::string name;
  std::string unit;  ///< empty for dimensionless / labels
};

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;
  bool single = false;  ///< a one-record report rather than a list
};

enum class Format { Text, Json, Csv };

/// Numbers carry 9 significant digits in every format.
inline double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  return std::strtod(fmt::format("{:.9g}", x).c_str(), nullptr);
}

inline std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(double x) const { return fmt::format("{:.9g}", x); }
    std::string operator()(long long x) const { return fmt::format("{}", x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

inline std::string column_label(const Column& c) {
  return c.unit.empty() ? c.name : c.name + "[" + c.unit + "]";
}

inline void render_text(const std::vector<Table>& tables, std::ostream& out) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << '\n';
    first = false;
    out << "# " << t.name << '\n';
    if (t.single && t.rows.size() == 1) {
      std::size_t width = 0;
      for (const auto& c : t.columns) width = std::max(width, column_label(c).size());
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << fmt::format("{:<{}}  {}\n", column_label(t.columns[i]), width,
                           format_value(t.rows[0][i]));
      continue;
    }
    std::vector<std::size_t> widths;
    for (const auto& c : t.columns) widths.push_back(column_label(c).size());
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        widths[i] = std::max(widths[i], format_value(row[i]).size());
    auto emit = [&](auto&& cell) {
      std::string line;
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) line += "  ";
        line += fmt::format("{:>{}}", cell(i), widths[i]);
      }
      out << line << '\n';
    };
    emit([&](std::size_t i) { return column_label(t.columns[i]); });
    for (const auto& row : t.rows) emit([&](std::size_t i) { return format_value(row[i]); });
  }
}

inline nlohmann::ordered_json to_json_value(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
      if (!std::isfinite(x)) return nullptr;
      return round_significant(x);
    }
    nlohmann::ordered_json operator()(long long x) const { return x; }
    nlohmann::ordered_json operator()(bool x) const { return x; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

inline nlohmann::ordered_json to_json(const std::vector<Table>& tables) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& t : tables) {
    auto record = [&](const std::vector<Value>& row) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i].name] = to_json_value(row[i]);
      return obj;
    };
    if (t.single && t.rows.size() == 1) {
      doc[t.name] = record(t.rows[0]);
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) arr.push_back(record(row));
      doc[t.name] = std::move(arr);
    }
  }
  return doc;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

/// One block per table (header row with unit annotations, then records),
/// blocks separated by a blank line.
inline void render_csv(const std::vector<Table>& tables, std::ostream& out) {
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << '\n';
    first = false;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? "," : "") << csv_escape(column_label(t.columns[i]));
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const bool empty = std::holds_alternative<std::monostate>(row[i]);
        out << (i ? "," : "") << (empty ? std::string() : csv_escape(format_value(row[i])));
      }
      out << '\n';
    }
  }
}

inline void render(const std::vector<Table>& tables, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text: render_text(tables, out); break;
    case Format::Json: out << to_json(tables).dump(2) << '\n'; break;
    case Format::Csv: render_csv(tables, out); break;
  }
}

}  // namespace pf::cli
