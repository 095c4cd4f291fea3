#include "primesums/hlcount.hpp"

#include <cmath>
#include <vector>

#include "primesums/chebyshev.hpp"
#include "primesums/dirichlet.hpp"
#include "primesums/errors.hpp"
#include "primesums/mixedsum.hpp"
#include "primesums/numeric.hpp"

namespace primesums {

bool HLQuery::nqr_witness() const { return legendre(-l, p) == -1; }

void HLQuery::validate() const {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw InvalidArgument("HL query: p must be an odd prime");
  if (alpha == 0) throw InvalidArgument("HL query: alpha must be at least 1");
  if (reduce(l, p) == 0) throw InvalidArgument("HL query: gcd(l, p) must be 1");
}

double hl_count(const HLQuery& query, const ArithTable& table) {
  query.validate();
  table.require(query.x);
  const u64 P = query.modulus();
  const u64 M = iroot(query.x, 2);
  // hits[res] = #{1 <= m <= M : m^2 = res (mod P)}
  std::vector<u64> hits(P, 0);
  for (u64 m = 1; m <= M; ++m) ++hits[mul_mod(m, m, P)];

  const auto powers = table.prime_powers();
  const auto logs = table.prime_power_logs();
  CompensatedSum s;
  for (std::size_t i = 0, n = table.prime_power_count(query.x); i < n; ++i) {
    const u64 need = reduce(query.l - static_cast<i64>(powers[i] % P), P);
    if (hits[need] != 0) s += logs[i] * static_cast<double>(hits[need]);
  }
  return s.value();
}

double hl_count_by_m(const HLQuery& query, const ArithTable& table) {
  query.validate();
  table.require(query.x);
  const u64 P = query.modulus();
  const u64 M = iroot(query.x, 2);
  CompensatedSum s;
  for (u64 m = 1; m <= M; ++m) {
    u64 n = reduce(query.l - static_cast<i64>(mul_mod(m, m, P)), P);
    if (n == 0) n = P;
    for (; n <= query.x; n += P) s += table.mangoldt(n);
  }
  return s.value();
}

double hl_discarded_piece(const HLQuery& query, const ArithTable& table) {
  query.validate();
  table.require(query.x);
  const u64 P = query.modulus();
  const u64 M = iroot(query.x, 2);
  CompensatedSum s;
  for (u64 m = 1; m <= M; ++m) {
    if (reduce(static_cast<i64>(mul_mod(m, m, query.p)) - query.l, query.p) != 0) continue;
    u64 n = reduce(query.l - static_cast<i64>(mul_mod(m, m, P)), P);
    if (n == 0) n = P;
    for (; n <= query.x; n += P)
      if (n % query.p != 0) s += table.mangoldt(n);
  }
  return s.value();
}

HLMain hl_main(const HLQuery& query, const ArithTable& table) {
  query.validate();
  table.require(query.x);
  const u64 P = query.modulus();
  const double phi = static_cast<double>(euler_phi(P));
  const auto principal = CharacterGroup(P).principal();
  const double psi0 = psi_chi(query.x, principal, table).final.real();
  const double v2 = v2_direct(iroot(query.x, 2), principal, query.l).real();

  HLMain out;
  out.main_exact = psi0 * v2 / phi;
  const double x = static_cast<double>(query.x);
  const double density = 1.0 - static_cast<double>(rho(query.p, query.l)) / static_cast<double>(query.p);
  out.main_asymptotic = x * std::sqrt(x) * density / phi;
  return out;
}

HLReport hl_report(const HLQuery& query, const ArithTable& table) {
  HLReport r;
  r.query = query;
  r.rho = rho(query.p, query.l);
  r.exact = hl_count(query, table);
  const auto main = hl_main(query, table);
  r.main_exact = main.main_exact;
  r.main_asymptotic = main.main_asymptotic;
  r.remainder = r.exact - r.main_exact;
  if (r.main_asymptotic > 0.0) r.ratio = r.exact / r.main_asymptotic;
  return r;
}

std::optional<HLNumber> smallest_hl(u64 q, u64 l, u64 cap, const ArithTable& table) {
  if (q == 0 || l == 0 || l > q) throw InvalidArgument("smallest_hl: need 1 <= l <= q");
  table.require(cap);
  for (u64 n = l; n <= cap; n += q) {
    for (u64 m = 1; m * m < n; ++m) {
      if (table.is_prime(n - m * m)) return HLNumber{n, n - m * m, m};
    }
  }
  return std::nullopt;
}

double h2_bound(double q, double constant) { return constant * std::pow(q, 1.5) * std::pow(std::log(q), 34); }

}  // namespace primesums
