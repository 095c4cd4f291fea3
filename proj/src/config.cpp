#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <limits>

#include "primesums/cli.hpp"
#include "primesums/errors.hpp"

namespace primesums {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 7> kCommandNames = {"tmean",    "expsum", "hbverify", "mixedsum",
                                                           "hlreport", "hlscan", "selftest"};

constexpr std::array<std::string_view, 10> kKnownKeys = {
    "command", "sieve_limit",    "grid",    "output_path",    "format",
    "epsilon", "implied_constant", "workers", "primitive_only", "work_cap"};

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string type_name(const json& j) { return j.type_name(); }

i64 as_i64(const json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<u64>() > static_cast<u64>(std::numeric_limits<i64>::max()))
      fail(what + " is out of range");
    return j.get<i64>();
  }
  // 1e6 is a float in JSON; accept it when it is an exact integer.
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15) return static_cast<i64>(v);
    fail(what + " must be an integer");
  }
  fail(what + " must be an integer, got " + type_name(j));
}

u64 as_u64(const json& j, const std::string& what, u64 min_value = 0) {
  const i64 v = as_i64(j, what);
  if (v < 0 || static_cast<u64>(v) < min_value) fail(what + " must be at least " + std::to_string(min_value));
  return static_cast<u64>(v);
}

double as_real(const json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number, got " + type_name(j));
  return j.get<double>();
}

const json& tuple(const json& row, std::size_t index, std::size_t width, const std::string& layout) {
  if (!row.is_array() || row.size() != width)
    fail("grid row " + std::to_string(index) + " must be an array " + layout);
  return row;
}

template <class Row, class Fn>
std::vector<Row> parse_rows(const json& grid, std::size_t width, const std::string& layout, Fn&& fn) {
  if (!grid.is_array()) fail("grid must be an array of " + layout + " rows");
  std::vector<Row> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const json& row = tuple(grid[i], i, width, layout);
    rows.push_back(fn(row, "grid row " + std::to_string(i)));
  }
  return rows;
}

Grid grid_from_json(Command command, const json& g) {
  switch (command) {
    case Command::tmean:
      return parse_rows<TGridPoint>(g, 2, "[x, q]", [](const json& r, const std::string& w) {
        return TGridPoint{as_u64(r[0], w + " x", 1), as_u64(r[1], w + " q", 1)};
      });
    case Command::expsum:
      return parse_rows<SGridPoint>(g, 3, "[a, q, x]", [](const json& r, const std::string& w) {
        return SGridPoint{as_u64(r[0], w + " a"), as_u64(r[1], w + " q", 1), as_u64(r[2], w + " x", 1)};
      });
    case Command::hbverify:
      return parse_rows<HBGridPoint>(g, 4, "[x, u1, r, f_label]", [](const json& r, const std::string& w) {
        if (!r[3].is_string()) fail(w + " f_label must be a string");
        const u64 order = as_u64(r[2], w + " r", 1);
        if (order > 16) fail(w + " r must be at most 16");
        HBGridPoint pt{as_u64(r[0], w + " x", 1), as_u64(r[1], w + " u1", 1), static_cast<unsigned>(order),
                       r[3].get<std::string>()};
        parse_f_label(pt.f_label);
        return pt;
      });
    case Command::mixedsum:
      return parse_rows<MixedGridPoint>(g, 5, "[p, beta, l, h, chi]", [](const json& r, const std::string& w) {
        const u64 beta = as_u64(r[1], w + " beta", 1);
        if (beta > 40) fail(w + " beta is too large");
        const i64 chi = as_i64(r[4], w + " chi");
        if (chi < -1) fail(w + " chi must be -1 or a character index");
        return MixedGridPoint{as_u64(r[0], w + " p", 2), static_cast<unsigned>(beta), as_i64(r[2], w + " l"),
                              as_u64(r[3], w + " h"), chi};
      });
    case Command::hlreport:
      return parse_rows<HLQuery>(g, 4, "[x, p, alpha, l]", [](const json& r, const std::string& w) {
        const u64 alpha = as_u64(r[2], w + " alpha", 1);
        if (alpha > 40) fail(w + " alpha is too large");
        HLQuery q;
        q.x = as_u64(r[0], w + " x", 1);
        q.p = as_u64(r[1], w + " p", 2);
        q.alpha = static_cast<unsigned>(alpha);
        q.l = as_i64(r[3], w + " l");
        return q;
      });
    case Command::hlscan:
      return parse_rows<ScanGridPoint>(g, 2, "[q, l]", [](const json& r, const std::string& w) {
        ScanGridPoint pt{as_u64(r[0], w + " q", 1), as_u64(r[1], w + " l")};
        if (pt.l > pt.q) fail(w + " needs l <= q");
        return pt;
      });
    case Command::selftest:
      if (!g.is_array() || !g.empty()) fail("selftest takes no grid");
      return std::monostate{};
  }
  fail("unhandled command");
}

template <class Row, class Fn>
u64 max_over(const Grid& grid, Fn&& fn) {
  u64 m = 1;
  if (const auto* rows = std::get_if<std::vector<Row>>(&grid))
    for (const Row& r : *rows) m = std::max(m, fn(r));
  return m;
}

u64 parse_decimal(std::string_view s, std::string_view label) {
  u64 v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != end)
    fail("malformed f_label \"" + std::string(label) + "\"");
  return v;
}

}  // namespace

std::string_view to_string(Command c) { return kCommandNames[static_cast<std::size_t>(c)]; }

Command parse_command(std::string_view name) {
  for (std::size_t i = 0; i < kCommandNames.size(); ++i)
    if (kCommandNames[i] == name) return static_cast<Command>(i);
  fail("unknown command \"" + std::string(name) + "\"");
}

FLabel parse_f_label(std::string_view label) {
  FLabel f;
  if (label == "one") return f;
  if (label == "zero") {
    f.kind = FLabel::Kind::zero;
    return f;
  }
  if (label.starts_with("e:")) {
    const auto body = label.substr(2);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) fail("malformed f_label \"" + std::string(label) + "\"");
    f.kind = FLabel::Kind::additive;
    f.a = parse_decimal(body.substr(0, slash), label);
    f.q = parse_decimal(body.substr(slash + 1), label);
    if (f.q == 0) fail("f_label \"" + std::string(label) + "\" has zero denominator");
    return f;
  }
  if (label.starts_with("chi:")) {
    const auto body = label.substr(4);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) fail("malformed f_label \"" + std::string(label) + "\"");
    f.kind = FLabel::Kind::character;
    f.q = parse_decimal(body.substr(0, colon), label);
    f.k = parse_decimal(body.substr(colon + 1), label);
    if (f.q == 0) fail("f_label \"" + std::string(label) + "\" has zero modulus");
    return f;
  }
  if (label.starts_with("rand:")) {
    f.kind = FLabel::Kind::random;
    f.seed = parse_decimal(label.substr(5), label);
    return f;
  }
  fail("unknown f_label \"" + std::string(label) + "\"");
}

Grid parse_grid(Command command, std::string_view json_text) {
  json g;
  try {
    g = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("grid is not valid JSON: ") + e.what());
  }
  return grid_from_json(command, g);
}

RunConfig parse_config(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
    fail("missing command");
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      fail("unknown key \"" + key + "\"");
  }

  RunConfig cfg;
  if (!doc.contains("command")) fail("missing command");
  if (!doc["command"].is_string()) fail("command must be a string");
  cfg.command = parse_command(doc["command"].get<std::string>());

  if (doc.contains("grid")) {
    cfg.grid = grid_from_json(cfg.command, doc["grid"]);
  } else if (cfg.command != Command::selftest) {
    fail("missing grid");
  }
  if (doc.contains("sieve_limit")) cfg.sieve_limit = as_u64(doc["sieve_limit"], "sieve_limit", 1);
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) fail("output_path must be a string");
    cfg.output_path = doc["output_path"].get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc["format"].is_string()) fail("format must be a string");
    const auto f = doc["format"].get<std::string>();
    if (f == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (f == "json") {
      cfg.format = OutputFormat::json;
    } else {
      fail("format must be csv or json, got \"" + f + "\"");
    }
  }
  if (doc.contains("implied_constant")) cfg.implied_constant = as_real(doc["implied_constant"], "implied_constant");
  if (doc.contains("epsilon")) cfg.epsilon = as_real(doc["epsilon"], "epsilon");
  if (doc.contains("workers")) {
    const u64 w = as_u64(doc["workers"], "workers");
    if (w > 4096) fail("workers must be at most 4096");
    cfg.workers = static_cast<unsigned>(w);
  }
  if (doc.contains("primitive_only")) {
    if (!doc["primitive_only"].is_boolean()) fail("primitive_only must be a boolean");
    cfg.primitive_only = doc["primitive_only"].get<bool>();
  }
  if (doc.contains("work_cap")) cfg.work_cap = as_u64(doc["work_cap"], "work_cap", 1);

  if (!(cfg.implied_constant > 0.0) || !std::isfinite(cfg.implied_constant))
    fail("implied_constant must be positive");
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) fail("epsilon must be positive");
  return cfg;
}

u64 RunConfig::required_sieve_limit() const {
  switch (command) {
    case Command::tmean:
      return max_over<TGridPoint>(grid, [](const TGridPoint& r) { return r.x; });
    case Command::expsum:
      return max_over<SGridPoint>(grid, [](const SGridPoint& r) { return r.x; });
    case Command::hbverify:
      return max_over<HBGridPoint>(grid, [](const HBGridPoint& r) { return r.x; });
    case Command::hlreport:
      return max_over<HLQuery>(grid, [](const HLQuery& r) { return r.x; });
    case Command::hlscan:
      return max_over<ScanGridPoint>(grid, [](const ScanGridPoint& r) { return r.q; });
    case Command::mixedsum:
    case Command::selftest:
      return 1;
  }
  return 1;
}

u64 RunConfig::effective_sieve_limit() const {
  if (sieve_limit) return *sieve_limit;
  const u64 need = required_sieve_limit();
  return command == Command::hlscan ? std::max(need, kDefaultScanCap) : need;
}

void RunConfig::validate() const {
  if (command != Command::selftest && std::holds_alternative<std::monostate>(grid)) fail("missing grid");
  const u64 need = required_sieve_limit();
  if (sieve_limit && *sieve_limit < need)
    fail("sieve_limit " + std::to_string(*sieve_limit) + " is below the grid maximum " + std::to_string(need));
  if (effective_sieve_limit() > kMaxSieveLimit)
    fail("sieve limit " + std::to_string(effective_sieve_limit()) + " exceeds the maximum " +
         std::to_string(kMaxSieveLimit));
  if (!(implied_constant > 0.0) || !std::isfinite(implied_constant)) fail("implied_constant must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) fail("epsilon must be positive");
}

}  // namespace primesums
