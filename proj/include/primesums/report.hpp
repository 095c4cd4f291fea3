#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace primesums {

/// A report cell. monostate renders as NA in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

/// Shortest round-trip-free rendering with 9 significant digits, '.' separator, no locale.
std::string format_real(double v);

/// Column-named rows rendered either as CSV or as a JSON array of objects.
class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  /// Throws InvalidArgument when the row width differs from the header.
  void add_row(std::vector<Cell> row);

  /// Header line plus one line per row, LF endings.
  std::string to_csv() const;
  /// [{"col": value, ...}, ...] with the same field names as the CSV header.
  std::string to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace primesums
