#include <doctest.h>

#include <cmath>
#include <numeric>

#include "primesums/arith.hpp"
#include "primesums/errors.hpp"

using namespace primesums;

namespace {

u64 ordered_tuples(u64 n, unsigned r) {
  if (r == 1) return 1;
  u64 count = 0;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) count += ordered_tuples(n / d, r - 1);
  return count;
}

}  // namespace

TEST_CASE("table values at small n") {
  const ArithTable t1(1);
  CHECK(t1.mangoldt(1) == 0.0);
  CHECK(t1.moebius(1) == 1);

  const ArithTable t(12);
  CHECK(t.mangoldt(9) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(t.mangoldt(12) == 0.0);
  CHECK(t.moebius(12) == 0);
  CHECK(t.moebius(6) == 1);
  CHECK(t.moebius(7) == -1);
  CHECK(t.lpf(12) == 2);
  CHECK(t.is_prime(11));
  CHECK_FALSE(t.is_prime(9));
  CHECK(t.prime_power_count(12) == 8);  // 2 3 4 5 7 8 9 11
}

TEST_CASE("table errors") {
  CHECK_THROWS_AS(ArithTable(0), InvalidArgument);
  const ArithTable t(100);
  CHECK_NOTHROW(t.require(100));
  CHECK_THROWS_AS(t.require(101), TableTooSmall);
}

TEST_CASE("von Mangoldt and Moebius divisor sums") {
  const ArithTable t(5000);
  for (u64 n = 1; n <= 5000; ++n) {
    double lam = 0.0;
    int mu = 0;
    for (u64 d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      lam += t.mangoldt(d);
      mu += t.moebius(d);
      if (d * d != n) {
        lam += t.mangoldt(n / d);
        mu += t.moebius(n / d);
      }
    }
    REQUIRE(lam == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
    REQUIRE(mu == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("sieve agrees with trial division") {
  const ArithTable t(20000);
  for (u64 n = 1; n <= 20000; ++n) {
    REQUIRE(t.is_prime(n) == is_prime(n));
    const auto f = factorize(n);
    if (n > 1) REQUIRE(t.lpf(n) == f.front().first);
    const bool squarefree = std::all_of(f.begin(), f.end(), [](auto pe) { return pe.second == 1; });
    const int mu = squarefree ? (f.size() % 2 ? -1 : 1) : 0;
    REQUIRE(t.moebius(n) == mu);
  }
}

TEST_CASE("divisor_power") {
  CHECK(divisor_power(1, 1) == 1);
  CHECK(divisor_power(1, 7) == 1);
  CHECK(divisor_power(6, 2) == 4);
  CHECK(divisor_power(4, 3) == 6);
  for (u64 n = 1; n <= 300; ++n)
    for (unsigned r = 1; r <= 4; ++r) REQUIRE(divisor_power(n, r) == ordered_tuples(n, r));
  CHECK_THROWS_AS(divisor_power(0, 2), InvalidArgument);
  CHECK_THROWS_AS(divisor_power(5, 0), InvalidArgument);
}

TEST_CASE("tau growth ratio") {
  CHECK(tau_growth_ratio(2, 1) == doctest::Approx(1.0).epsilon(1e-15));
  const double r100 = tau_growth_ratio(100, 2);
  const double r1000 = tau_growth_ratio(1000, 2);
  CHECK(r100 == doctest::Approx(0.311883820735557).epsilon(1e-12));
  CHECK(r1000 == doctest::Approx(0.22778797122918).epsilon(1e-12));
  CHECK(r1000 < 2 * r100);
  CHECK(r100 < 2 * r1000);
  CHECK_THROWS_AS(tau_growth_ratio(1, 2), InvalidArgument);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(30) == 8);
  for (u64 n = 1; n <= 500; ++n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    REQUIRE(euler_phi(n) == count);
  }
  CHECK_THROWS_AS(euler_phi(0), InvalidArgument);
}

TEST_CASE("primitive_root") {
  CHECK(primitive_root(7, 1) == 3);
  CHECK(primitive_root(3, 2) == 2);
  CHECK(primitive_root(5, 1) == 2);
  for (const u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
    for (unsigned beta = 1; beta <= 3; ++beta) {
      const u64 q = ipow(p, beta);
      const u64 g = primitive_root(p, beta);
      REQUIRE(multiplicative_order(g, q) == euler_phi(q));
      for (u64 a = 2; a < g; ++a)
        if (a % p) REQUIRE(multiplicative_order(a, q) < euler_phi(q));
    }
  }
  CHECK_THROWS_AS(primitive_root(2, 1), InvalidArgument);
  CHECK_THROWS_AS(primitive_root(9, 1), InvalidArgument);
  CHECK_THROWS_AS(primitive_root(7, 0), InvalidArgument);
}

TEST_CASE("rho counts square roots") {
  CHECK(rho(7, 2) == 2);
  CHECK(rho(7, 3) == 0);
  CHECK(rho(5, 5) == 1);
  CHECK(rho(3, 1) == 2);
  CHECK(rho(7, -5) == 2);
  for (const u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (i64 l = 1; l < static_cast<i64>(p); ++l) REQUIRE(rho(p, l) == static_cast<unsigned>(1 + legendre(l, p)));
  }
}

TEST_CASE("modular helpers") {
  CHECK(pow_mod(3, 6, 7) == 1);
  CHECK(pow_mod(5, 0, 1) == 0);
  CHECK(mul_mod(~0ULL, ~0ULL, 1'000'000'007ULL) == 114944269ULL);  // (2^64-1)^2 mod 1e9+7
  CHECK(reduce(-1, 7) == 6);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod(6, 9), InvalidArgument);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(14, 7) == 0);
  CHECK(sqrt_mod(2, 7) == std::vector<u64>{3, 4});
  CHECK(sqrt_mod(3, 7).empty());
  CHECK(valuation(250, 5) == 3);
  CHECK(valuation(0, 5) == 0);
  CHECK(ipow(3, 5) == 243);
  CHECK(iroot(10'000, 4) == 10);
  CHECK(iroot(9'999, 4) == 9);
  CHECK(iroot(81, 4) == 3);
  CHECK(iroot(999'999'999'999ULL, 2) == 999'999);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK_THROWS_AS(multiplicative_order(3, 9), InvalidArgument);
}
