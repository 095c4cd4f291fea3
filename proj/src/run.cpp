#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>

#include "primesums/cli.hpp"
#include "primesums/dirichlet.hpp"
#include "primesums/errors.hpp"
#include "primesums/mixedsum.hpp"
#include "primesums/parallel.hpp"

namespace primesums {

namespace {

// 53 random bits per draw; std::uniform_real_distribution is not pinned down across standard libraries.
double unit_interval(u64 bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

Cell real_cell(double v) { return v; }
Cell u64_cell(u64 v) { return v; }
Cell i64_cell(i64 v) { return v; }

void tmean_rows(const RunConfig& cfg, const ArithTable& table, Report& report) {
  const auto& grid = std::get<std::vector<TGridPoint>>(cfg.grid);
  const auto rows = t_ratio_sweep(grid, table, cfg.implied_constant, TMeanOptions{cfg.primitive_only});
  for (const auto& r : rows) {
    std::vector<Cell> cells{u64_cell(r.x), u64_cell(r.q), u64_cell(r.phi_q), real_cell(r.t_mean)};
    for (const double b : r.bounds) cells.push_back(b);
    cells.push_back(r.ratio_theorem1);
    report.add_row(std::move(cells));
  }
}

void expsum_rows(const RunConfig& cfg, const ArithTable& table, Report& report) {
  std::vector<SGridPoint> points;
  for (const auto& pt : std::get<std::vector<SGridPoint>>(cfg.grid)) {
    if (pt.a != 0) {
      points.push_back(pt);
      continue;
    }
    for (u64 a = 1; a <= pt.q; ++a)
      if (std::gcd(a, pt.q) == 1) points.push_back({a, pt.q, pt.x});
  }
  for (const auto& r : s_ratio_sweep(points, table, cfg.implied_constant))
    report.add_row({u64_cell(r.a), u64_cell(r.q), u64_cell(r.x), r.abs_s, r.bound_theorem2, r.ratio, r.discrepancy});
}

void hbverify_rows(const RunConfig& cfg, const ArithTable& table, Report& report) {
  for (const auto& pt : std::get<std::vector<HBGridPoint>>(cfg.grid)) {
    HBConfig hb{pt.x, pt.u1, pt.r, make_test_function(pt.f_label, pt.x)};
    const auto d = hb_decompose(hb, table, cfg.work_cap);
    report.add_row({u64_cell(pt.x), u64_cell(pt.u1), u64_cell(pt.r), pt.f_label, d.lhs.real(), d.lhs.imag(),
                    std::abs(d.residual), d.discrepancy});
  }
}

void mixedsum_rows(const RunConfig& cfg, Report& report) {
  for (const auto& pt : std::get<std::vector<MixedGridPoint>>(cfg.grid)) {
    if (pt.p < 3 || pt.p % 2 == 0 || !is_prime(pt.p)) throw InvalidArgument("mixedsum: p must be an odd prime");
    const u64 P = ipow(pt.p, pt.beta);
    if (P > 1'000'000) throw InvalidArgument("mixedsum: p^beta must be at most 10^6");
    const CharacterGroup group(P);
    std::vector<u64> chis;
    if (pt.chi < 0) {
      chis = group.primitive_indices();
    } else {
      if (static_cast<u64>(pt.chi) >= group.size()) throw InvalidArgument("mixedsum: character index out of range");
      chis.push_back(static_cast<u64>(pt.chi));
    }
    std::vector<u64> hs;
    if (pt.h == 0) {
      hs.resize(P);
      std::iota(hs.begin(), hs.end(), u64{1});
    } else {
      hs.push_back(pt.h);
    }

    for (const u64 ci : chis) {
      const auto chi = group.character(ci);
      // Rows are independent; fill by slot so the output order is fixed.
      std::vector<std::vector<Cell>> rows(hs.size());
      parallel_for(hs.size(), [&](std::size_t i) {
        const auto spec = make_mixed_spec(pt.p, pt.beta, pt.l, hs[i], chi);
        const auto rs = root_set(spec);
        const unsigned t = critical_order(spec);
        std::string roots;
        for (const u64 d : rs.roots) {
          if (!roots.empty()) roots += ';';
          roots += std::to_string(d);
        }
        double worst = 0.0, largest = 0.0;
        const double scale = std::pow(static_cast<double>(pt.p), 0.5 * static_cast<double>(pt.beta + t));
        for (u64 delta = 1; delta <= pt.p; ++delta) {
          const double s = std::abs(delta_sum_oracle(spec, delta));
          largest = std::max(largest, s);
          const double expected = rs.contains(delta) ? scale : 0.0;
          worst = std::max(worst, std::abs(s - expected) / scale);
        }
        Cell predicted, rel_err;
        if (pt.beta >= t + 2) {
          predicted = rs.roots.empty() ? 0.0 : scale;
          rel_err = worst;
        }
        rows[i] = {u64_cell(pt.p), u64_cell(pt.beta), i64_cell(pt.l), u64_cell(hs[i]), u64_cell(ci),
                   std::string(to_string(rs.case_tag)), roots, predicted, largest, rel_err};
      });
      for (auto& r : rows) report.add_row(std::move(r));
    }
  }
}

void hlreport_rows(const RunConfig& cfg, const ArithTable& table, Report& report) {
  for (const auto& q : std::get<std::vector<HLQuery>>(cfg.grid)) {
    const auto r = hl_report(q, table);
    report.add_row({u64_cell(q.x), u64_cell(q.p), u64_cell(q.alpha), i64_cell(q.l), u64_cell(r.rho), r.exact,
                    r.main_exact, r.main_asymptotic, r.remainder,
                    r.ratio ? Cell{*r.ratio} : Cell{std::monostate{}}});
  }
}

void hlscan_rows(const RunConfig& cfg, const ArithTable& table, Report& report) {
  const u64 cap = table.limit();
  for (const auto& pt : std::get<std::vector<ScanGridPoint>>(cfg.grid)) {
    const u64 lo = pt.l == 0 ? 1 : pt.l;
    const u64 hi = pt.l == 0 ? pt.q : pt.l;
    for (u64 l = lo; l <= hi; ++l) {
      const auto found = smallest_hl(pt.q, l, cap, table);
      if (found) {
        report.add_row({u64_cell(pt.q), u64_cell(l), u64_cell(found->value), u64_cell(found->prime), u64_cell(found->m)});
      } else {
        report.add_row({u64_cell(pt.q), u64_cell(l), Cell{}, Cell{}, Cell{}});
      }
    }
  }
}

void selftest_rows(Report& report) {
  for (const auto& c : run_selftest()) report.add_row({c.name, i64_cell(c.passed ? 1 : 0), c.detail});
}

bool selftest_failed(const Report& report) {
  for (const auto& row : report.rows())
    if (std::get<std::int64_t>(row[1]) == 0) return true;
  return false;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw InvalidArgument("cannot open output path " + path);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    os.flush();
    if (!os) {
      os.close();
      std::filesystem::remove(tmp);
      throw InvalidArgument("failed writing output path " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InvalidArgument("cannot move report into place at " + path + ": " + ec.message());
  }
}

}  // namespace

TestFunction make_test_function(std::string_view label, u64 x) {
  const FLabel f = parse_f_label(label);
  switch (f.kind) {
    case FLabel::Kind::one:
      return TestFunction::sample(std::string(label), x, [](u64) { return cplx{1.0, 0.0}; });
    case FLabel::Kind::zero:
      return TestFunction::sample(std::string(label), x, [](u64) { return cplx{}; });
    case FLabel::Kind::additive:
      return TestFunction::sample(std::string(label), x, [&](u64 n) {
        return unit_root(static_cast<i64>(mul_mod(f.a % f.q, n, f.q)), static_cast<i64>(f.q));
      });
    case FLabel::Kind::character: {
      const CharacterGroup group(f.q);
      if (f.k >= group.size()) throw ConfigError("f_label \"" + std::string(label) + "\": character index out of range");
      const auto chi = group.character(f.k);
      return TestFunction::sample(std::string(label), x, [&](u64 n) { return chi.value(n); });
    }
    case FLabel::Kind::random: {
      std::mt19937_64 rng(f.seed);
      // Uniform on the square [-1, 1]^2 scaled into the unit disc.
      return TestFunction::sample(std::string(label), x, [&](u64) {
        const double re = 2.0 * unit_interval(rng()) - 1.0;
        const double im = 2.0 * unit_interval(rng()) - 1.0;
        return cplx{re, im} * (1.0 / std::numbers::sqrt2);
      });
    }
  }
  throw ConfigError("unhandled f_label");
}

std::vector<std::string> report_columns(Command command) {
  switch (command) {
    case Command::tmean:
      return {"x", "q", "phi_q", "t_mean", "bound_erh", "bound_montgomery", "bound_vaughan", "bound_rakhmonov93",
              "bound_theorem1", "ratio_theorem1"};
    case Command::expsum:
      return {"a", "q", "x", "abs_S", "bound_theorem2", "ratio", "discrepancy"};
    case Command::hbverify:
      return {"x", "u1", "r", "f_label", "lhs_re", "lhs_im", "residual_abs", "discrepancy"};
    case Command::mixedsum:
      return {"p", "beta", "l", "h", "chi_id", "case_tag", "roots", "abs_S_predicted", "abs_S_oracle", "rel_err"};
    case Command::hlreport:
      return {"x", "p", "alpha", "l", "rho", "exact", "main_exact", "main_asymptotic", "remainder", "ratio"};
    case Command::hlscan:
      return {"q", "l", "H2", "certificate_prime", "certificate_m"};
    case Command::selftest:
      return {"check", "passed", "detail"};
  }
  return {};
}

Report build_report(const RunConfig& config) {
  config.validate();
  Report report(report_columns(config.command));
  if (config.command == Command::selftest) {
    selftest_rows(report);
    return report;
  }
  if (config.command == Command::mixedsum) {
    mixedsum_rows(config, report);
    return report;
  }
  const ArithTable table(config.effective_sieve_limit());
  switch (config.command) {
    case Command::tmean:
      tmean_rows(config, table, report);
      break;
    case Command::expsum:
      expsum_rows(config, table, report);
      break;
    case Command::hbverify:
      hbverify_rows(config, table, report);
      break;
    case Command::hlreport:
      hlreport_rows(config, table, report);
      break;
    case Command::hlscan:
      hlscan_rows(config, table, report);
      break;
    default:
      break;
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diagnostics) {
  set_worker_count(config.workers);
  try {
    const Report report = build_report(config);
    const std::string text = config.format == OutputFormat::json ? report.to_json() : report.to_csv();
    const bool failed = config.command == Command::selftest && selftest_failed(report);
    if (failed) {
      diagnostics << "selftest: one or more checks failed\n" << text;
      return 3;
    }
    if (config.output_path.empty()) {
      out << text;
      out.flush();
    } else {
      write_atomically(config.output_path, text);
    }
    return 0;
  } catch (const WorkLimitExceeded& e) {
    diagnostics << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    diagnostics << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace primesums
