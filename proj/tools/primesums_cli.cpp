#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "primesums/cli.hpp"
#include "primesums/errors.hpp"

using nlohmann::json;

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for character sums over primes"};
  app.set_version_flag("--version", "primesums 0.1.0");

  std::string command, config_path, out_path, format, grid_text;
  std::optional<std::uint64_t> sieve_limit;
  std::optional<unsigned> workers;
  std::optional<double> constant, epsilon;

  app.add_option("command", command, "tmean | expsum | hbverify | mixedsum | hlreport | hlscan | selftest");
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "Report path (standard output when omitted)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--sieve-limit", sieve_limit, "Sieve limit for the arithmetic tables");
  app.add_option("--workers", workers, "Worker threads (0 = available parallelism)");
  app.add_option("--constant", constant, "Implied constant applied to every bound");
  app.add_option("--epsilon", epsilon, "Exponent epsilon of the x^epsilon bound");
  app.add_option("--grid", grid_text, "Grid as inline JSON, replacing the config grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  // Flags are folded into the config document so one strict parser sees everything.
  json doc = json::object();
  if (!config_path.empty()) {
    const auto text = slurp(config_path);
    if (!text) {
      std::cerr << "error: cannot read config " << config_path << '\n';
      return 1;
    }
    if (text->find_first_not_of(" \t\r\n") != std::string::npos) {
      try {
        doc = json::parse(*text);
      } catch (const json::parse_error& e) {
        std::cerr << "error: config is not valid JSON: " << e.what() << '\n';
        return 1;
      }
      if (!doc.is_object()) {
        std::cerr << "error: config must be a JSON object\n";
        return 1;
      }
    }
  }
  if (!command.empty()) doc["command"] = command;
  if (!out_path.empty()) doc["output_path"] = out_path;
  if (!format.empty()) doc["format"] = format;
  if (sieve_limit) doc["sieve_limit"] = *sieve_limit;
  if (workers) doc["workers"] = *workers;
  if (constant) doc["implied_constant"] = *constant;
  if (epsilon) doc["epsilon"] = *epsilon;
  if (!grid_text.empty()) {
    try {
      doc["grid"] = json::parse(grid_text);
    } catch (const json::parse_error& e) {
      std::cerr << "error: --grid is not valid JSON: " << e.what() << '\n';
      return 1;
    }
  }

  primesums::RunConfig config;
  try {
    config = primesums::parse_config(doc.empty() ? std::string() : doc.dump());
  } catch (const primesums::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return primesums::run(config, std::cout, std::cerr);
}
