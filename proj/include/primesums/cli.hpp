#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/chebyshev.hpp"
#include "primesums/expsum.hpp"
#include "primesums/hbident.hpp"
#include "primesums/hlcount.hpp"
#include "primesums/report.hpp"

namespace primesums {

enum class Command { tmean, expsum, hbverify, mixedsum, hlreport, hlscan, selftest };
enum class OutputFormat { csv, json };

std::string_view to_string(Command c);
/// Throws ConfigError for an unknown name.
Command parse_command(std::string_view name);

/// Grid rows per command. The tuple layouts are:
///   tmean     [x, q]
///   expsum    [a, q, x]            a = 0 expands to every a coprime to q
///   hbverify  [x, u1, r, f_label]  f_label: one | zero | e:a/q | chi:q:k | rand:seed
///   mixedsum  [p, beta, l, h, chi] h = 0 expands to 1..p^beta, chi = -1 to every primitive character
///   hlreport  [x, p, alpha, l]
///   hlscan    [q, l]               l = 0 expands to 1..q
struct HBGridPoint {
  u64 x;
  u64 u1;
  unsigned r;
  std::string f_label;
};

struct MixedGridPoint {
  u64 p;
  unsigned beta;
  i64 l;
  u64 h;
  i64 chi;
};

struct ScanGridPoint {
  u64 q;
  u64 l;
};

using Grid = std::variant<std::monostate, std::vector<TGridPoint>, std::vector<SGridPoint>, std::vector<HBGridPoint>,
                          std::vector<MixedGridPoint>, std::vector<HLQuery>, std::vector<ScanGridPoint>>;

/// Parsed hbverify test-function label.
struct FLabel {
  enum class Kind { one, zero, additive, character, random };
  Kind kind = Kind::one;
  u64 a = 0;  ///< additive: numerator
  u64 q = 1;  ///< additive and character: modulus
  u64 k = 0;  ///< character: index in the group
  u64 seed = 0;
};

/// Throws ConfigError on a malformed label.
FLabel parse_f_label(std::string_view label);

/// Samples the labelled function on 1..x. Random labels give |f(n)| <= 1, reproducible per seed.
TestFunction make_test_function(std::string_view label, u64 x);

/// Largest table the CLI will sieve.
inline constexpr u64 kMaxSieveLimit = 10'000'000ULL;
/// Scanner cap used when neither sieve_limit nor anything else fixes one.
inline constexpr u64 kDefaultScanCap = 100'000ULL;

struct RunConfig {
  Command command = Command::selftest;
  std::optional<u64> sieve_limit;
  Grid grid;
  std::string output_path;  ///< empty writes to standard output
  OutputFormat format = OutputFormat::csv;
  double implied_constant = 1.0;
  double epsilon = 0.01;
  unsigned workers = 0;  ///< 0 means available parallelism
  bool primitive_only = false;
  u64 work_cap = kDefaultHBWorkCap;

  /// Smallest table the grid needs (max x, or the scanner cap).
  u64 required_sieve_limit() const;
  /// sieve_limit if set, otherwise required_sieve_limit().
  u64 effective_sieve_limit() const;
  /// Cross-field checks; throws ConfigError.
  void validate() const;
};

/// Strict JSON parse: unknown keys, type mismatches and missing fields throw ConfigError.
RunConfig parse_config(std::string_view text);

/// Parses a grid given as JSON text for the named command.
Grid parse_grid(Command command, std::string_view json_text);

/// Validates, runs the sweep and returns the rows. Throws on any failure.
Report build_report(const RunConfig& config);

/// Column names of the report for each command.
std::vector<std::string> report_columns(Command command);

struct SelfTestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Small invariant checks drawn from every module.
std::vector<SelfTestCheck> run_selftest();

/// Builds the report and writes it to config.output_path (or out when the path is empty).
/// Nothing is written unless the whole run succeeds.
/// Exit codes: 0 success, 1 validation error, 2 work limit exceeded, 3 self-test failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& diagnostics);

}  // namespace primesums
