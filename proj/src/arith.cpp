#include "primesums/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "primesums/errors.hpp"
#include "primesums/numeric.hpp"

namespace primesums {

__extension__ typedef unsigned __int128 u128;

ArithTable::ArithTable(u64 limit) : limit_(limit) {
  if (limit == 0) throw InvalidArgument("build_table: limit must be at least 1");
  if (limit >= std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("build_table: limit exceeds 32-bit sieve range");

  const std::size_t size = static_cast<std::size_t>(limit) + 1;
  mangoldt_.assign(size, 0.0);
  moebius_.assign(size, 0);
  lpf_.assign(size, 0);
  moebius_[1] = 1;
  lpf_[1] = 1;

  // Linear sieve: each composite is crossed out once, by its least prime factor.
  std::vector<std::uint32_t> primes;
  for (u64 n = 2; n <= limit; ++n) {
    if (lpf_[n] == 0) {
      lpf_[n] = static_cast<std::uint32_t>(n);
      moebius_[n] = -1;
      primes.push_back(static_cast<std::uint32_t>(n));
    }
    for (const std::uint32_t p : primes) {
      const u64 m = n * p;
      if (p > lpf_[n] || m > limit) break;
      lpf_[m] = p;
      moebius_[m] = (p == lpf_[n]) ? 0 : static_cast<std::int8_t>(-moebius_[n]);
    }
  }

  for (const std::uint32_t p : primes) {
    const double lp = std::log(static_cast<double>(p));
    for (u64 pk = p; pk <= limit; pk *= p) {
      mangoldt_[pk] = lp;
      if (pk > limit / p) break;
    }
  }
  for (u64 n = 2; n <= limit; ++n) {
    if (mangoldt_[n] != 0.0) {
      prime_powers_.push_back(n);
      prime_power_logs_.push_back(mangoldt_[n]);
    }
  }
}

std::size_t ArithTable::prime_power_count(u64 x) const {
  return static_cast<std::size_t>(std::upper_bound(prime_powers_.begin(), prime_powers_.end(), x) -
                                  prime_powers_.begin());
}

void ArithTable::require(u64 x) const {
  if (x > limit_) throw TableTooSmall(x, limit_);
}

ArithTable build_table(u64 limit) { return ArithTable(limit); }

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 reduce(i64 a, u64 m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = a % mm;
  if (r < 0) r += mm;
  return static_cast<u64>(r);
}

u64 inverse_mod(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw InvalidArgument("inverse_mod: argument not invertible");
  return reduce(old_s, m);
}

int legendre(i64 a, u64 p) {
  const u64 r = reduce(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<u64> sqrt_mod(i64 a, u64 p) {
  const u64 target = reduce(a, p);
  std::vector<u64> roots;
  for (u64 s = 0; s < p; ++s)
    if (mul_mod(s, s, p) == target) roots.push_back(s);
  return roots;
}

unsigned valuation(u64 n, u64 p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

u64 iroot(u64 n, unsigned k) {
  if (k == 1 || n < 2) return n;
  auto r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
  // pow can land one off in either direction.
  auto fits = [&](u64 c) {
    u128 v = 1;
    for (unsigned i = 0; i < k; ++i) {
      v *= c;
      if (v > n) return false;
    }
    return true;
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

namespace {

u64 binomial(u64 n, u64 k) {
  k = std::min(k, n - k);
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<u64>(r);
}

}  // namespace

u64 divisor_power(u64 n, unsigned r) {
  if (n == 0 || r == 0) throw InvalidArgument("divisor_power: need n >= 1 and r >= 1");
  // tau_r is multiplicative with tau_r(p^e) = C(e + r - 1, r - 1).
  u64 result = 1;
  for (const auto& [p, e] : factorize(n)) result *= binomial(e + r - 1, r - 1);
  return result;
}

double tau_growth_ratio(u64 x, unsigned r) {
  if (x < 2) throw InvalidArgument("tau_growth_ratio: need x >= 2");
  if (r == 0) throw InvalidArgument("tau_growth_ratio: need r >= 1");
  // tau_r for all n <= x by repeated Dirichlet convolution with 1.
  std::vector<u64> tau(x + 1, 1);
  tau[0] = 0;
  for (unsigned k = 1; k < r; ++k) {
    std::vector<u64> next(x + 1, 0);
    for (u64 d = 1; d <= x; ++d)
      for (u64 m = d; m <= x; m += d) next[m] += tau[d];
    tau = std::move(next);
  }
  CompensatedSum s;
  for (u64 n = 1; n <= x; ++n) s += static_cast<double>(tau[n]) * static_cast<double>(tau[n]);
  const double lx = std::log(static_cast<double>(x));
  return s.value() / (static_cast<double>(x) * std::pow(lx, static_cast<double>(r * r) - 1.0));
}

u64 euler_phi(u64 n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
  u64 phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (std::gcd(a, m) != 1) throw InvalidArgument("multiplicative_order: gcd(a, m) != 1");
  u64 order = euler_phi(m);
  for (const auto& [f, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / f, m) == 1) {
        order /= f;
      } else {
        break;
      }
    }
  }
  return order;
}

u64 primitive_root(u64 p, unsigned beta) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw InvalidArgument("primitive_root: p must be an odd prime");
  if (beta == 0) throw InvalidArgument("primitive_root: beta must be at least 1");
  const u64 modulus = ipow(p, beta);
  const u64 phi = modulus / p * (p - 1);
  const auto factors = factorize(phi);
  for (u64 a = 2; a < modulus; ++a) {
    if (a % p == 0) continue;
    bool generator = true;
    for (const auto& [f, e] : factors) {
      if (pow_mod(a, phi / f, modulus) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return a;
  }
  throw InvalidArgument("primitive_root: none found");
}

unsigned rho(u64 p, i64 l) {
  if (p == 0) throw InvalidArgument("rho: p must be positive");
  const u64 target = reduce(l, p);
  unsigned count = 0;
  for (u64 n = 1; n <= p; ++n)
    if (mul_mod(n, n, p) == target) ++count;
  return count;
}

}  // namespace primesums
