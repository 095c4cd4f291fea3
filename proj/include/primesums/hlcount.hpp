#pragma once

#include <optional>
#include <utility>

#include "primesums/arith.hpp"

namespace primesums {

/// H_2(x; p^alpha, l): Lambda-weighted pairs n <= x, 1 <= m <= sqrt(x), n + m^2 = l (mod p^alpha).
struct HLQuery {
  u64 x = 1;
  u64 p = 3;
  unsigned alpha = 1;
  i64 l = 1;

  u64 modulus() const { return ipow(p, alpha); }
  /// True iff -l is a quadratic non-residue mod p.
  bool nqr_witness() const;
  /// Throws InvalidArgument unless p is an odd prime, alpha >= 1 and gcd(l, p) = 1.
  void validate() const;
};

struct HLReport {
  HLQuery query;
  unsigned rho = 0;
  double exact = 0.0;
  double main_asymptotic = 0.0;  ///< x^(3/2) (1 - rho/p) / phi(p^alpha)
  double main_exact = 0.0;       ///< psi(x, chi_0) V_2(sqrt x, chi_0) / phi(p^alpha)
  double remainder = 0.0;        ///< exact - main_exact
  std::optional<double> ratio;   ///< exact / main_asymptotic, when main_asymptotic > 0
};

/// Iterates over prime powers n and counts matching m from a residue histogram of m^2.
double hl_count(const HLQuery& query, const ArithTable& table);

/// Independent order: for each m, walks the residue class l - m^2 (mod p^alpha) directly.
double hl_count_by_m(const HLQuery& query, const ArithTable& table);

/// The part of the sum with gcd(n, p) = 1 and m^2 = l (mod p); it is empty by construction.
double hl_discarded_piece(const HLQuery& query, const ArithTable& table);

struct HLMain {
  double main_exact = 0.0;
  double main_asymptotic = 0.0;
};

HLMain hl_main(const HLQuery& query, const ArithTable& table);

HLReport hl_report(const HLQuery& query, const ArithTable& table);

/// Smallest N <= cap with N = l (mod q) and N = prime + m^2, m >= 1, with the witness pair.
struct HLNumber {
  u64 value = 0;
  u64 prime = 0;
  u64 m = 0;
};

std::optional<HLNumber> smallest_hl(u64 q, u64 l, u64 cap, const ArithTable& table);

/// q^(3/2) (ln q)^34 scaled by constant.
double h2_bound(double q, double constant = 1.0);

}  // namespace primesums
