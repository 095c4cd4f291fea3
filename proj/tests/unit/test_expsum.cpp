#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "primesums/errors.hpp"
#include "primesums/expsum.hpp"

using namespace primesums;

namespace {

const ArithTable& table() {
  static const ArithTable t(100'000);
  return t;
}

}  // namespace

TEST_CASE("S(alpha, x) examples") {
  CHECK(std::abs(s_alpha(0.0, 10, table()) - 7.83201418050547) < 1e-12);
  CHECK(std::abs(s_alpha(0.5, 10, table()) - (-3.6731310971458)) < 1e-12);
  for (const double a : {0.1, 0.37, 0.5, 0.999}) {
    REQUIRE(std::abs(s_alpha(a, 5000, table()) - s_alpha(a + 1.0, 5000, table())) < 1e-12 * 5000);
  }
  CHECK(std::abs(s_alpha(0.25, 1, table())) == 0.0);
  CHECK_THROWS_AS(s_alpha(0.25, 100'001, table()), TableTooSmall);
}

TEST_CASE("rational points") {
  CHECK_NOTHROW(RationalPoint{1, 1}.validate());
  CHECK_THROWS_AS((RationalPoint{2, 4}.validate()), InvalidArgument);
  CHECK_THROWS_AS((RationalPoint{0, 4}.validate()), InvalidArgument);
  CHECK_THROWS_AS((RationalPoint{5, 4}.validate()), InvalidArgument);
  CHECK_THROWS_AS((RationalPoint{1, 0}.validate()), InvalidArgument);

  // The exact a n / q phase agrees with the floating path.
  for (const u64 q : {3ULL, 7ULL, 10ULL, 97ULL}) {
    for (u64 a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const cplx exact = s_rational({a, q, 0.0}, 3000, table());
      const cplx floating = s_alpha(static_cast<double>(a) / static_cast<double>(q), 3000, table());
      REQUIRE(std::abs(exact - floating) < 1e-8);
      const cplx shifted = s_rational({a, q, 1e-3}, 3000, table());
      REQUIRE(std::abs(shifted - s_alpha(static_cast<double>(a) / static_cast<double>(q) + 1e-3, 3000, table())) < 1e-8);
    }
  }
}

TEST_CASE("conjugate symmetry and the trivial bound") {
  const double px = psi(50'000, table());
  for (const u64 q : {5ULL, 8ULL, 11ULL, 30ULL}) {
    for (u64 a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const cplx s = s_rational({a, q}, 50'000, table());
      const cplx t = s_rational({q - a, q}, 50'000, table());
      REQUIRE(std::abs(s - std::conj(t)) < 1e-12 * px);
      REQUIRE(std::abs(s) <= px * (1 + 1e-12));
    }
  }
}

TEST_CASE("character decomposition examples") {
  const auto d1 = s_rational_decomposed({1, 1}, 10, CharacterGroup(1), table());
  CHECK(std::abs(d1.correction) == 0.0);
  CHECK(std::abs(d1.via_characters - 7.83201418050547) < 1e-12);
  CHECK(std::abs(d1.direct - d1.via_characters) < 1e-12);

  const auto d3 = s_rational_decomposed({1, 3}, 10, CharacterGroup(3), table());
  CHECK(std::abs(d3.correction - 2.19722457734) < 1e-10);  // Lambda(3) + Lambda(9)
  CHECK(d3.discrepancy < 1e-9);

  const auto d4 = s_rational_decomposed({1, 4}, 20, CharacterGroup(4), table());
  CHECK(d4.discrepancy < 1e-9);

  CHECK_THROWS_AS(s_rational_decomposed({1, 4}, 20, CharacterGroup(5), table()), InvalidArgument);
  CHECK_THROWS_AS(s_rational_decomposed({2, 4}, 20, CharacterGroup(4), table()), InvalidArgument);
}

TEST_CASE("decomposition holds across moduli") {
  for (u64 q = 1; q <= 40; ++q) {
    const CharacterGroup group(q);
    const CharacterExpansion exp(group, 20'000, table());
    for (u64 a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const auto d = exp.decompose(a, table());
      REQUIRE(d.holds(1e-9));
      REQUIRE(std::abs(d.direct - s_rational({a, q}, 20'000, table())) < 1e-9);
    }
    // Gauss sums cached in the expansion match direct summation.
    const auto chars = group.all();
    for (std::size_t i = 0; i < chars.size(); ++i)
      REQUIRE(std::abs(exp.conj_gauss_sums()[i] - gauss_sum(chars[i].conj())) < 1e-12);
  }
}

TEST_CASE("S-bound examples") {
  const double e = std::numbers::e;
  CHECK(s_bound(SBound::theorem2, {e, 1.0}) == doctest::Approx(6.59254402765).epsilon(1e-10));
  CHECK(s_bound(SBound::corollary2, {e, 1.0, 1.0}) == doctest::Approx(e).epsilon(1e-12));
  CHECK(s_bound(SBound::vinogradov5, {4.0, 4.0}) == doctest::Approx(9.1575072413162).epsilon(1e-10));
  CHECK(s_bound(SBound::vinogradov5, {4.0, 4.0}, 0.0) == doctest::Approx(2.0 + std::pow(4.0, 0.8) + 4.0).epsilon(1e-12));
  // At L = 1 every logarithmic factor drops out.
  CHECK(s_bound(SBound::corollary1, {e, 1.0}) == doctest::Approx(6.59254402765).epsilon(1e-10));
  CHECK(s_bound(SBound::rakhmonov10, {e, 1.0}) == doctest::Approx(6.59254402765).epsilon(1e-10));
  CHECK(s_bound(SBound::montgomery6, {e, 1.0}) == doctest::Approx(e + std::pow(e, 5.0 / 7) + std::sqrt(e)).epsilon(1e-12));
  CHECK(s_bound(SBound::vaughan8, {e, 1.0}) ==
        doctest::Approx(e + std::pow(e, 7.0 / 8) + std::pow(e, 0.75) + std::sqrt(e)).epsilon(1e-12));
  for (const auto k : {SBound::montgomery7, SBound::vaughan9, SBound::rakhmonov11, SBound::corollary2}) {
    CHECK(needs_eta(k));
    CHECK(s_bound(k, {e, 1.0, 4.0}) == doctest::Approx(e / 2).epsilon(1e-12));
    CHECK_THROWS_AS(s_bound(k, {e, 1.0}), InvalidArgument);
  }
  // L = 2 distinguishes theorem2 from corollary1.
  const BoundParams p2{e * e, 1.0};
  CHECK(s_bound(SBound::corollary1, p2) - s_bound(SBound::theorem2, p2) ==
        doctest::Approx(e * e * (std::pow(2.0, 33) - std::pow(2.0, 29))).epsilon(1e-12));
  for (const auto k : kAllSBounds) CHECK(parse_s_bound(to_string(k)) == k);
  CHECK_THROWS_AS(parse_s_bound("theorem3"), InvalidArgument);
}

TEST_CASE("S ratio sweep") {
  CHECK(s_ratio_sweep({}, table()).empty());
  const std::vector<SGridPoint> one{{1, 1, 10}};
  const auto rows = s_ratio_sweep(one, table());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].abs_s == doctest::Approx(7.83201418050547).epsilon(1e-12));
  const std::vector<SGridPoint> pair{{1, 5, 10'000}, {2, 5, 10'000}};
  const auto r2 = s_ratio_sweep(pair, table());
  REQUIRE(r2.size() == 2);
  for (const auto& r : r2) {
    CHECK(r.discrepancy < 1e-6 * (1 + r.abs_s));
    CHECK(r.ratio == doctest::Approx(r.abs_s / r.bound_theorem2));
  }
  const std::vector<SGridPoint> bad{{2, 4, 10}};
  CHECK_THROWS_AS(s_ratio_sweep(bad, table()), InvalidArgument);
}
