#pragma once

// Column-oriented result tables and their CSV/JSON encodings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pnr/sweeps.hpp"

namespace pnr::cli {

using Cell = std::variant<double, std::int64_t, std::uint64_t>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// 12 significant digits; "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double value);

/// The double a reader recovers from format_number(value).
double round_to_printed(double value);

/// RFC-4180 CSV with a single header row.
void write_csv(const Table& table, std::ostream& out);

/// {"columns": [...], "rows": [[...], ...]}. Doubles carry the same value the
/// CSV prints; non-finite doubles become null.
void write_json(const Table& table, std::ostream& out);

void write_table(const Table& table, Format format, std::ostream& out);

Table to_table(const SweepTable& sweep);

}  // namespace pnr::cli
