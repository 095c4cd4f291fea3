#include "primesums/report.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "primesums/errors.hpp"

namespace primesums {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw InvalidArgument("report row width does not match the header");
  rows_.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return "NA"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(std::uint64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_real(v); }
  std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
  std::string operator()(std::monostate) const { return "null"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(std::uint64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return std::isfinite(v) ? format_real(v) : "null"; }
  std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
};

}  // namespace

std::string Report::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += csv_field(columns_[i]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += std::visit(CsvCell{}, row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out += r ? ",\n  {" : "\n  {";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out += ", ";
      out += nlohmann::json(columns_[i]).dump();
      out += ": ";
      out += std::visit(JsonCell{}, rows_[r][i]);
    }
    out += '}';
  }
  out += rows_.empty() ? "]\n" : "\n]\n";
  return out;
}

}  // namespace primesums
