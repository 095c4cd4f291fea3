// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "primesums/cli.hpp"
#include "primesums/dirichlet.hpp"
#include "primesums/mixedsum.hpp"

using namespace primesums;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string fmt(double v) { return format_real(v); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void time_limit(Verdict& v, double elapsed, double limit) {
  if (elapsed >= limit) v.fail("took " + fmt(elapsed) + " s, limit " + fmt(limit) + " s");
}

Verdict heath_brown() {
  const auto t0 = Clock::now();
  Verdict v;
  const ArithTable table(2000);
  double worst = 0.0;
  int cases = 0;
  for (const u64 x : {50ULL, 500ULL, 2000ULL}) {
    const u64 quarter = static_cast<u64>(std::floor(std::pow(static_cast<double>(x), 0.25) + 1e-12));
    for (const u64 u1 : {u64{1}, quarter, isqrt(x)}) {
      for (unsigned r = 1; r <= 4; ++r) {
        for (u64 seed = 1; seed <= 20; ++seed) {
          const auto f = make_test_function("rand:" + std::to_string(seed), x);
          const auto d = hb_decompose(HBConfig{x, u1, r, f}, table);
          const double rel = d.discrepancy / (1.0 + std::abs(d.lhs));
          worst = std::max(worst, rel);
          ++cases;
          if (!(rel < 1e-6))
            v.fail("x=" + std::to_string(x) + " u1=" + std::to_string(u1) + " r=" + std::to_string(r) +
                   " seed=" + std::to_string(seed) + " rel=" + fmt(rel));
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  time_limit(v, elapsed, 60.0);
  if (v.passed)
    v.detail = std::to_string(cases) + " cases, max rel " + fmt(worst) + ", " + fmt(elapsed) + " s";
  return v;
}

Verdict decomposition() {
  const auto t0 = Clock::now();
  Verdict v;
  const ArithTable table(100'000);
  double worst = 0.0;
  int cases = 0;
  for (u64 q = 1; q <= 100; ++q) {
    std::vector<u64> units;
    for (u64 a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1) units.push_back(a);
    // At least ten residues per modulus, spread over the unit group; all of them when there are fewer.
    std::vector<u64> sample;
    if (units.size() <= 12) {
      sample = units;
    } else {
      for (std::size_t i = 0; i < 12; ++i) sample.push_back(units[i * units.size() / 12]);
    }
    const CharacterGroup group(q);
    for (const u64 x : {1000ULL, 100'000ULL}) {
      const CharacterExpansion exp(group, x, table);
      for (const u64 a : sample) {
        const auto d = exp.decompose(a, table);
        const double rel = d.discrepancy / (1.0 + std::abs(d.direct));
        worst = std::max(worst, rel);
        ++cases;
        if (!(rel < 1e-6))
          v.fail("a/q=" + std::to_string(a) + "/" + std::to_string(q) + " x=" + std::to_string(x) + " rel=" + fmt(rel));
      }
    }
  }
  const double elapsed = seconds_since(t0);
  time_limit(v, elapsed, 120.0);
  if (v.passed) v.detail = std::to_string(cases) + " cases, max rel " + fmt(worst) + ", " + fmt(elapsed) + " s";
  return v;
}

Verdict gauss_sums() {
  Verdict v;
  int primitive = 0;
  double worst = 0.0;
  for (u64 q = 1; q <= 200; ++q) {
    const CharacterGroup group(q);
    for (const u64 i : group.primitive_indices()) {
      const double n = std::norm(gauss_sum(group.character(i)));
      const double rel = std::abs(n - static_cast<double>(q)) / static_cast<double>(q);
      worst = std::max(worst, rel);
      ++primitive;
      if (!(rel <= 1e-9)) v.fail("|tau|^2 mod " + std::to_string(q) + " index " + std::to_string(i) + " = " + fmt(n));
    }
  }
  const double tau4 = std::abs(gauss_sum(CharacterGroup(4).principal()));
  if (!(tau4 <= 1e-12)) v.fail("tau(chi_0 mod 4) = " + fmt(tau4));
  for (u64 p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    const double s = std::sqrt(static_cast<double>(p));
    const cplx want = p % 4 == 1 ? cplx{s, 0.0} : cplx{0.0, s};
    const double rel = std::abs(quadratic_gauss_sum(p) - want) / s;
    if (!(rel <= 1e-9)) v.fail("quadratic Gauss sum mod " + std::to_string(p) + " off by " + fmt(rel));
  }
  if (v.passed)
    v.detail = std::to_string(primitive) + " primitive characters, max rel " + fmt(worst) + ", |tau(chi_0 mod 4)| = " + fmt(tau4);
  return v;
}

// Smallest l >= 1 with -l a quadratic non-residue mod p.
i64 nqr_shift(u64 p) {
  for (i64 l = 1;; ++l) {
    const u64 minus = reduce(-l, p);
    if (minus != 0 && legendre(static_cast<i64>(minus), p) == -1) return l;
  }
}

Verdict modulus_law() {
  const auto t0 = Clock::now();
  Verdict v;
  double worst_root = 0.0, worst_off = 0.0, worst_total = 0.0;
  long sums = 0;
  for (const u64 p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    const i64 l = nqr_shift(p);
    for (const unsigned beta : {2U, 3U, 4U}) {
      const u64 P = ipow(p, beta);
      if (P > 3125) continue;
      const CharacterGroup group(P);
      const auto prim = group.primitive_indices();
      // Eight characters spread over the primitive ones (all of them when there are fewer).
      std::vector<u64> chosen;
      if (prim.size() <= 8) {
        chosen = prim;
      } else {
        for (std::size_t i = 0; i < 8; ++i) chosen.push_back(prim[i * prim.size() / 8]);
      }
      if (chosen.size() < 5 && chosen.size() != prim.size()) v.fail("too few characters mod " + std::to_string(P));
      const double root = std::sqrt(static_cast<double>(P));
      for (const u64 ci : chosen) {
        const auto chi = group.character(ci);
        for (u64 h = 1; h <= P; ++h) {
          const auto spec = make_mixed_spec(p, beta, l, h, chi);
          const auto rs = root_set(spec);
          const bool simple = critical_order(spec) == 0;
          cplx total{};
          for (u64 d = 1; d <= p; ++d) {
            const cplx s = delta_sum_oracle(spec, d);
            total += s;
            ++sums;
            if (!rs.contains(d)) {
              worst_off = std::max(worst_off, std::abs(s));
              if (!(std::abs(s) < 1e-9))
                v.fail("P=" + std::to_string(P) + " h=" + std::to_string(h) + " delta=" + std::to_string(d) +
                       " off the root set has |S| = " + fmt(std::abs(s)));
            } else if (simple) {
              const double rel = std::abs(std::abs(s) - root) / root;
              worst_root = std::max(worst_root, rel);
              if (!(rel <= 1e-8))
                v.fail("P=" + std::to_string(P) + " h=" + std::to_string(h) + " root " + std::to_string(d) +
                       " has |S| = " + fmt(std::abs(s)));
            }
          }
          const double gap = std::abs(total - complete_sum_oracle(spec));
          worst_total = std::max(worst_total, gap);
          if (!(gap <= 1e-10)) v.fail("P=" + std::to_string(P) + " h=" + std::to_string(h) + " partition gap " + fmt(gap));
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  time_limit(v, elapsed, 600.0);
  if (v.passed)
    v.detail = std::to_string(sums) + " restricted sums, max root rel " + fmt(worst_root) + ", max off-root " +
               fmt(worst_off) + ", max partition gap " + fmt(worst_total) + ", " + fmt(elapsed) + " s";
  return v;
}

std::vector<u64> odd_prime_powers(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 3; n <= limit; n += 2) {
    const auto f = factorize(n);
    if (f.size() == 1) out.push_back(n);
  }
  return out;
}

Verdict completion() {
  Verdict v;
  double worst = 0.0;
  int moduli = 0;
  for (const u64 P : odd_prime_powers(343)) {
    const CharacterGroup group(P);
    const u64 n = group.size();
    // Principal, a primitive character and one more; duplicates collapse on small groups.
    std::vector<u64> picks{0, group.primitive_indices().front(), n - 1, n / 2};
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    // The group mod 3 has only two characters; everything available is used there.
    if (picks.size() < std::min<u64>(3, n)) v.fail("fewer than three characters mod " + std::to_string(P));
    for (const u64 ci : picks) {
      for (const i64 l : {1LL, 2LL}) {
        const V2Completion v2(group.character(ci), l);
        for (u64 u = 1; u <= P; ++u) {
          const double diff = v2.evaluate(u).difference;
          worst = std::max(worst, diff);
          if (!(diff < 1e-8))
            v.fail("P=" + std::to_string(P) + " chi=" + std::to_string(ci) + " l=" + std::to_string(l) +
                   " u=" + std::to_string(u) + " diff " + fmt(diff));
        }
      }
    }
    ++moduli;
  }
  int sine = 0;
  for (const u64 P : odd_prime_powers(3125)) {
    const auto s = sine_sum_bound(P);
    ++sine;
    if (!s.holds()) v.fail("sine-sum bound fails at " + std::to_string(P) + ": " + fmt(s.lhs) + " > " + fmt(s.rhs));
  }
  if (v.passed)
    v.detail = std::to_string(moduli) + " moduli, max diff " + fmt(worst) + ", sine bound at " + std::to_string(sine) + " moduli";
  return v;
}

Verdict principal_asymptotic() {
  Verdict v;
  double worst_margin = -1e300;
  int cases = 0;
  for (const u64 x : {100ULL, 10'000ULL, 1'000'000ULL}) {
    const u64 u = isqrt(x);
    for (const u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
      const auto chi0 = CharacterGroup(p).principal();
      for (u64 l = 1; l < p; ++l) {
        unsigned rho = 0;
        for (u64 m = 0; m < p; ++m)
          if (m * m % p == l) ++rho;
        const double main = std::sqrt(static_cast<double>(x)) * (1.0 - static_cast<double>(rho) / static_cast<double>(p));
        const double gap = std::abs(v2_direct(u, chi0, static_cast<i64>(l)).real() - main);
        worst_margin = std::max(worst_margin, gap - (rho + 2.0));
        ++cases;
        if (!(gap <= rho + 2.0))
          v.fail("x=" + std::to_string(x) + " p=" + std::to_string(p) + " l=" + std::to_string(l) + " gap " + fmt(gap));
      }
    }
  }
  if (v.passed) v.detail = std::to_string(cases) + " cases, largest gap minus allowance " + fmt(worst_margin);
  return v;
}

Verdict hardy_littlewood(const ArithTable& table) {
  const auto t0 = Clock::now();
  Verdict v;
  std::ostringstream ratios;
  for (const auto& [p, alpha, l] : {std::tuple{3ULL, 1U, 1LL}, std::tuple{7ULL, 1U, 1LL}, std::tuple{3ULL, 2U, 1LL}}) {
    const HLQuery q{1'000'000, p, alpha, l};
    if (!q.nqr_witness()) v.fail("-l is a residue for modulus " + std::to_string(q.modulus()));
    const auto r = hl_report(q, table);
    const double other = hl_count_by_m(q, table);
    const double rel = std::abs(r.exact - other) / std::max(1.0, r.exact);
    if (!(rel <= 1e-9)) v.fail("enumeration orders differ by " + fmt(rel) + " mod " + std::to_string(q.modulus()));
    if (!r.ratio || !(*r.ratio >= 0.9 && *r.ratio <= 1.1))
      v.fail("ratio mod " + std::to_string(q.modulus()) + " is " + (r.ratio ? fmt(*r.ratio) : std::string("NA")));
    ratios << (ratios.tellp() > 0 ? ", " : "") << q.modulus() << ":" << (r.ratio ? fmt(*r.ratio) : "NA");
  }
  const double elapsed = seconds_since(t0);
  time_limit(v, elapsed, 300.0);
  if (v.passed) v.detail = "ratios " + ratios.str() + ", " + fmt(elapsed) + " s";
  return v;
}

Verdict scanner(const ArithTable& table) {
  Verdict v;
  const u64 cap = 100'000;
  const auto h31 = smallest_hl(3, 1, cap, table);
  if (!h31 || h31->value != 4 || h31->prime != 3 || h31->m != 1) v.fail("H2(3, 1) is not 4 with certificate (3, 1)");
  const auto h11 = smallest_hl(1, 1, cap, table);
  if (!h11 || h11->value != 3) v.fail("H2(1, 1) is not 3");
  int found = 0, missing = 0;
  for (u64 q = 1; q <= 50; ++q) {
    for (u64 l = 1; l <= q; ++l) {
      const auto n = smallest_hl(q, l, cap, table);
      if (!n) {
        ++missing;
        continue;
      }
      ++found;
      const bool ok = is_prime(n->prime) && n->m >= 1 && n->value == n->prime + n->m * n->m && n->value % q == l % q;
      if (!ok) v.fail("certificate for q=" + std::to_string(q) + " l=" + std::to_string(l) + " does not revalidate");
    }
  }
  if (v.passed) v.detail = std::to_string(found) + " certificates revalidated, " + std::to_string(missing) + " classes not found below the cap";
  return v;
}

Verdict ratio_report(const ArithTable& table) {
  Verdict v;
  std::vector<TGridPoint> grid;
  for (const u64 q : {3ULL, 10ULL, 50ULL})
    for (const u64 x : {1000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) grid.push_back({x, q});
  const auto rows = t_ratio_sweep(grid, table, 1.0);
  if (rows.size() != grid.size()) v.fail("expected " + std::to_string(grid.size()) + " rows, got " + std::to_string(rows.size()));
  std::ostringstream emitted;
  for (const auto& r : rows) {
    const double cap = static_cast<double>(r.phi_q) * psi(r.x, table);
    if (!(r.t_mean <= cap * (1.0 + 1e-12)))
      v.fail("t_mean exceeds phi(q) psi(x) at q=" + std::to_string(r.q) + " x=" + std::to_string(r.x));
    if (!std::isfinite(r.ratio_theorem1)) v.fail("missing ratio at q=" + std::to_string(r.q) + " x=" + std::to_string(r.x));
    emitted << "  ratio_theorem1 q=" << r.q << " x=" << r.x << " " << fmt(r.ratio_theorem1) << '\n';
  }
  std::cout << emitted.str();
  if (v.passed) v.detail = std::to_string(rows.size()) + " rows, all ratios emitted";
  return v;
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  Verdict v;
  const fs::path dir = fs::current_path() / "acceptance_runs";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"tmean", R"([[1000,3],[100000,10],[1000000,50]])"},
      {"expsum", R"([[0,7,1000],[3,10,100000]])"},
      {"hbverify", R"([[500,4,3,"rand:11"],[2000,6,2,"e:3/7"],[200,1,4,"chi:9:2"]])"},
      {"mixedsum", R"([[5,2,2,0,-1],[7,2,1,0,1]])"},
      {"hlreport", R"([[1000000,3,1,1],[100000,7,1,1]])"},
      {"hlscan", R"([[3,1],[1,1],[12,0]])"},
      {"selftest", ""},
  };
  const std::string cli = PRIMESUMS_CLI_PATH;
  int files = 0;
  for (const auto& [cmd, grid] : commands) {
    for (const char* format : {"csv", "json"}) {
      std::string bytes[2];
      for (int rep = 0; rep < 2; ++rep) {
        const fs::path out = dir / (cmd + "_" + std::to_string(rep) + "." + format);
        fs::remove(out);
        std::string line = cli + " " + cmd + " --format " + format + " --out " + out.string();
        if (!grid.empty()) line += " --grid '" + grid + "'";
        const int status = std::system(line.c_str());
        if (status != 0) {
          v.fail(cmd + " exited with status " + std::to_string(status));
          continue;
        }
        bytes[rep] = read_bytes(out);
      }
      if (bytes[0].empty() || bytes[0] != bytes[1]) v.fail(cmd + " " + format + " output differs between runs");
      ++files;
    }
  }
  if (v.passed) v.detail = std::to_string(files) + " report pairs byte-identical";
  return v;
}

}  // namespace

int main() {
  std::cout << "building 10^6 table" << std::endl;
  const ArithTable big(1'000'000);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"heath-brown identity grid", heath_brown},
      {"character decomposition of S(a/q, x)", decomposition},
      {"Gauss sum moduli", gauss_sums},
      {"mixed sum modulus law", modulus_law},
      {"V2 completion and sine-sum bound", completion},
      {"principal-character incomplete sum", principal_asymptotic},
      {"Hardy-Littlewood ratio at 10^6", [&] { return hardy_littlewood(big); }},
      {"Hardy-Littlewood scanner", [&] { return scanner(big); }},
      {"bound-ratio report sanity", [&] { return ratio_report(big); }},
      {"determinism of CLI reports", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("threw: ") + e.what());
    }
    if (!v.passed) ++failures;
    std::cout << (v.passed ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
