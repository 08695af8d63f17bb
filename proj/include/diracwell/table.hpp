#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace diracwell {

/// Numeric cells are written in 17-significant-digit scientific notation;
/// booleans as true/false; text verbatim.
using Cell = std::variant<double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column_index(const std::string& name) const;
  double number(std::size_t row, const std::string& column) const;
};

std::string format_number(double value);

/// UTF-8, comma separated, LF line endings, header row first.
void write_csv(const Table& table, std::ostream& os);
std::string to_csv(const Table& table);

}  // namespace diracwell
