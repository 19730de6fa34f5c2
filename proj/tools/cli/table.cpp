#include "cli/table.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

namespace pnr::cli {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](auto v) -> std::string {
        if constexpr (std::is_same_v<decltype(v), double>) {
          return format_number(v);
        } else {
          return fmt::format("{}", v);
        }
      },
      cell);
}

nlohmann::json json_cell(const Cell& cell) {
  return std::visit(
      [](auto v) -> nlohmann::json {
        if constexpr (std::is_same_v<decltype(v), double>) {
          if (!std::isfinite(v)) return nullptr;
          return round_to_printed(v);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.12g}", value);
}

double round_to_printed(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(table.columns[i]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_cell(row[i]);
    }
    out << "\r\n";
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::json doc;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto& r = rows.emplace_back(nlohmann::json::array());
    for (const auto& cell : row) r.push_back(json_cell(cell));
  }
  out << doc.dump() << '\n';
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::Json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

Table to_table(const SweepTable& sweep) {
  Table t;
  t.columns = sweep.columns;
  t.rows.reserve(sweep.rows.size());
  for (const auto& row : sweep.rows) {
    auto& r = t.rows.emplace_back();
    r.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (sweep.kinds[i] == ColumnKind::Marker) {
        r.emplace_back(static_cast<std::int64_t>(row[i]));
      } else {
        r.emplace_back(row[i]);
      }
    }
  }
  return t;
}

}  // namespace pnr::cli
