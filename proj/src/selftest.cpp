#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

#include "primesums/cli.hpp"
#include "primesums/dirichlet.hpp"
#include "primesums/mixedsum.hpp"

namespace primesums {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::string str(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

u64 tuples_with_product(u64 n, unsigned r) {
  if (r == 1) return 1;
  u64 count = 0;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) count += tuples_with_product(n / d, r - 1);
  return count;
}

Outcome arith_checks(const ArithTable& table) {
  Outcome o;
  for (u64 n = 1; n <= 2000 && o.passed; ++n) {
    double lam = 0.0;
    int mu = 0;
    for (u64 d = 1; d <= n; ++d) {
      if (n % d) continue;
      lam += table.mangoldt(d);
      mu += table.moebius(d);
    }
    o.expect(std::abs(lam - std::log(static_cast<double>(n))) < 1e-9, "sum of Lambda over divisors of " + std::to_string(n));
    o.expect(mu == (n == 1 ? 1 : 0), "sum of mu over divisors of " + std::to_string(n));
  }
  for (u64 n = 1; n <= 100; ++n)
    for (unsigned r = 1; r <= 3; ++r)
      o.expect(divisor_power(n, r) == tuples_with_product(n, r), "tau_" + std::to_string(r) + "(" + std::to_string(n) + ")");
  return o;
}

Outcome character_checks() {
  Outcome o;
  for (u64 q = 1; q <= 40 && o.passed; ++q) {
    const CharacterGroup group(q);
    const u64 phi = euler_phi(q);
    o.expect(group.size() == phi, "group size mod " + std::to_string(q));
    for (const auto& chi : group.all()) {
      cplx row{};
      for (u64 n = 0; n < q; ++n) row += chi.value(n);
      const double want = chi.is_principal() ? static_cast<double>(phi) : 0.0;
      o.expect(std::abs(row - want) < 1e-9, "row orthogonality mod " + std::to_string(q));

      // Conductor by definition: smallest d | q with chi(n) = 1 whenever n = 1 (mod d), gcd(n, q) = 1.
      u64 brute = q;
      for (u64 d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool induced = true;
        for (u64 n = 1; n < q + 1 && induced; ++n)
          if (std::gcd(n, q) == 1 && n % d == 1 % d && std::abs(chi.value(n) - 1.0) > 1e-9) induced = false;
        if (induced) {
          brute = d;
          break;
        }
      }
      o.expect(conductor(chi) == brute, "conductor mod " + std::to_string(q) + " index " + std::to_string(chi.index()));
      if (conductor(chi) == q) {
        const double g = std::norm(gauss_sum(chi));
        o.expect(std::abs(g - static_cast<double>(q)) < 1e-9 * static_cast<double>(q),
                 "|tau|^2 mod " + std::to_string(q) + " = " + str(g));
      }
    }
  }
  return o;
}

Outcome chebyshev_checks(const ArithTable& table) {
  Outcome o;
  const u64 x = 1000;
  const double psi_x = psi(x, table);
  o.expect(std::abs(t_mean(x, 1, table) - psi_x) < 1e-9 * psi_x, "t(x; 1) differs from psi(x)");
  for (u64 q = 2; q <= 20; ++q) {
    double removed = 0.0;
    for (const auto& [p, e] : factorize(q))
      for (u64 pk = p; pk <= x; pk *= p) removed += std::log(static_cast<double>(p));
    const auto prof = psi_chi(x, CharacterGroup(q).principal(), table);
    o.expect(std::abs(prof.final.real() - (psi_x - removed)) < 1e-9 * psi_x, "psi(x, chi_0) mod " + std::to_string(q));
    o.expect(t_mean(x, q, table) <= static_cast<double>(euler_phi(q)) * psi_x * (1 + 1e-12), "t_mean bound mod " + std::to_string(q));
  }
  return o;
}

Outcome expsum_checks(const ArithTable& table) {
  Outcome o;
  for (u64 q = 1; q <= 12; ++q) {
    const CharacterGroup group(q);
    const CharacterExpansion exp(group, 500, table);
    for (u64 a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const auto d = exp.decompose(a, table);
      o.expect(d.holds(1e-9), "decomposition at a/q = " + std::to_string(a) + "/" + std::to_string(q));
    }
  }
  return o;
}

Outcome hb_checks(const ArithTable& table) {
  Outcome o;
  const u64 x = 120;
  for (const char* label : {"one", "e:1/3", "chi:5:1", "rand:7"}) {
    const auto f = make_test_function(label, x);
    for (const u64 u1 : {u64{1}, u64{3}, u64{10}}) {
      for (unsigned r = 1; r <= 3; ++r) {
        const auto d = hb_decompose(HBConfig{x, u1, r, f}, table);
        o.expect(d.holds(1e-9), std::string("identity for f = ") + label + ", u1 = " + std::to_string(u1) +
                                    ", r = " + std::to_string(r));
      }
    }
  }
  return o;
}

Outcome mixed_checks() {
  Outcome o;
  const u64 p = 5;
  const unsigned beta = 2;
  const i64 l = 2;  // -2 is a non-residue mod 5
  const u64 P = ipow(p, beta);
  const CharacterGroup group(P);
  for (const u64 ci : group.primitive_indices()) {
    const auto chi = group.character(ci);
    for (u64 h = 1; h <= P; ++h) {
      const auto spec = make_mixed_spec(p, beta, l, h, chi);
      const auto rs = root_set(spec);
      cplx total{};
      for (u64 delta = 1; delta <= p; ++delta) {
        const cplx s = delta_sum_oracle(spec, delta);
        total += s;
        const double want = rs.contains(delta) ? std::sqrt(static_cast<double>(P)) : 0.0;
        o.expect(std::abs(std::abs(s) - want) < 1e-8 * std::sqrt(static_cast<double>(P)),
                 "|S_delta| at h = " + std::to_string(h) + ", delta = " + std::to_string(delta));
      }
      o.expect(std::abs(total - complete_sum_oracle(spec)) < 1e-10 * static_cast<double>(P), "partition of the complete sum");
    }
  }
  const V2Completion v2(group.character(1), l);
  for (u64 u = 1; u <= P; ++u) o.expect(v2.evaluate(u).difference < 1e-8, "completion at u = " + std::to_string(u));
  for (u64 m = 3; m <= 243; m += 2) o.expect(sine_sum_bound(m).holds(), "sine-sum bound at " + std::to_string(m));
  return o;
}

Outcome hl_checks(const ArithTable& table) {
  Outcome o;
  for (const auto& [p, alpha, l] : {std::tuple{3ULL, 1U, 1LL}, std::tuple{3ULL, 2U, 1LL}, std::tuple{7ULL, 1U, 1LL},
                                    std::tuple{5ULL, 1U, 2LL}}) {
    const HLQuery q{10'000, p, alpha, l};
    const double a = hl_count(q, table), b = hl_count_by_m(q, table);
    o.expect(std::abs(a - b) <= 1e-9 * std::max(1.0, a), "two enumeration orders mod " + std::to_string(q.modulus()));
    o.expect(hl_discarded_piece(q, table) == 0.0, "discarded piece mod " + std::to_string(q.modulus()));
  }
  const auto h31 = smallest_hl(3, 1, table.limit(), table);
  o.expect(h31 && h31->value == 4 && h31->prime == 3 && h31->m == 1, "H2(3, 1) = 4 with certificate (3, 1)");
  const auto h11 = smallest_hl(1, 1, table.limit(), table);
  o.expect(h11 && h11->value == 3, "H2(1, 1) = 3");
  return o;
}

}  // namespace

std::vector<SelfTestCheck> run_selftest() {
  const ArithTable table(10'000);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suites = {
      {"arith", [&] { return arith_checks(table); }},
      {"dirichlet", [] { return character_checks(); }},
      {"chebyshev", [&] { return chebyshev_checks(table); }},
      {"expsum", [&] { return expsum_checks(table); }},
      {"hbident", [&] { return hb_checks(table); }},
      {"mixedsum", [] { return mixed_checks(); }},
      {"hlcount", [&] { return hl_checks(table); }},
  };
  std::vector<SelfTestCheck> out;
  for (const auto& [name, fn] : suites) {
    SelfTestCheck c{name, false, ""};
    try {
      const Outcome o = fn();
      c.passed = o.passed;
      c.detail = o.passed ? "ok" : o.detail;
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace primesums
