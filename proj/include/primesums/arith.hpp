#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace primesums {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Sieved von Mangoldt, Moebius and least-prime-factor tables for 1..limit.
///
/// Immutable after construction, so a single table can be shared by any number
/// of readers. Index 0 is unused.
class ArithTable {
 public:
  /// Throws InvalidArgument when limit == 0.
  explicit ArithTable(u64 limit);

  u64 limit() const noexcept { return limit_; }

  double mangoldt(u64 n) const { return mangoldt_[n]; }
  int moebius(u64 n) const { return moebius_[n]; }
  u64 lpf(u64 n) const { return lpf_[n]; }
  bool is_prime(u64 n) const { return n >= 2 && n <= limit_ && lpf_[n] == n; }

  /// Every prime power n <= limit in increasing order, with Lambda(n) alongside.
  std::span<const u64> prime_powers() const noexcept { return prime_powers_; }
  std::span<const double> prime_power_logs() const noexcept { return prime_power_logs_; }

  /// Number of prime powers <= x.
  std::size_t prime_power_count(u64 x) const;

  std::span<const double> mangoldt_values() const noexcept { return mangoldt_; }
  std::span<const std::int8_t> moebius_values() const noexcept { return moebius_; }

  /// Throws TableTooSmall when x exceeds the sieved range.
  void require(u64 x) const;

 private:
  u64 limit_;
  std::vector<double> mangoldt_;
  std::vector<std::int8_t> moebius_;
  std::vector<std::uint32_t> lpf_;
  std::vector<u64> prime_powers_;
  std::vector<double> prime_power_logs_;
};

ArithTable build_table(u64 limit);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

bool is_prime(u64 n);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
/// Nonnegative residue of a mod m.
u64 reduce(i64 a, u64 m);
/// Inverse of a mod m; throws InvalidArgument when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);
/// Legendre symbol (a/p) for an odd prime p.
int legendre(i64 a, u64 p);
/// All s in [0, p) with s^2 = a (mod p), ascending. Exhaustive search.
std::vector<u64> sqrt_mod(i64 a, u64 p);
/// Largest e with p^e | n (n > 0).
unsigned valuation(u64 n, u64 p);
u64 ipow(u64 base, unsigned exp);
/// floor(n^(1/k)).
u64 iroot(u64 n, unsigned k);

/// Number of ordered r-tuples of positive integers with product n.
u64 divisor_power(u64 n, unsigned r);

/// (sum_{n<=x} tau_r(n)^2) / (x (ln x)^(r^2 - 1)).
double tau_growth_ratio(u64 x, unsigned r);

u64 euler_phi(u64 n);

/// Smallest a > 1 generating (Z/p^beta)^*. Throws InvalidArgument unless p is an odd prime.
u64 primitive_root(u64 p, unsigned beta);

/// Multiplicative order of a mod m (gcd(a, m) must be 1).
u64 multiplicative_order(u64 a, u64 m);

/// Count of 1 <= n <= p with n^2 = l (mod p).
unsigned rho(u64 p, i64 l);

}  // namespace primesums
