#pragma once

#include <functional>
#include <string>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/dirichlet.hpp"

namespace primesums {

/// Test function sampled on 1..x; values[n] = f(n), values[0] unused.
struct TestFunction {
  std::string label;
  std::vector<cplx> values;

  cplx operator()(u64 n) const { return values[n]; }

  static TestFunction sample(std::string label, u64 x, const std::function<cplx(u64)>& f);
};

/// Parameters of one Heath-Brown decomposition: truncation u1, order r.
struct HBConfig {
  u64 x = 1;
  u64 u1 = 1;
  unsigned r = 1;
  TestFunction f;

  void validate() const;
};

struct HBDecomposition {
  /// k = 1..r groups, each already carrying (-1)^(k-1) C(r, k).
  std::vector<cplx> main_terms;
  /// The (-1)^r lambda-weighted term.
  cplx residual{};
  /// sum_{n<=x} Lambda(n) f(n).
  cplx lhs{};
  double discrepancy = 0.0;
  /// Innermost terms visited by the enumeration.
  u64 visits = 0;

  cplx rhs() const;
  bool holds(double rel_tol = 1e-6) const { return discrepancy <= rel_tol * (1.0 + std::abs(lhs)); }
};

/// Default cap on innermost visits per decomposition.
inline constexpr u64 kDefaultHBWorkCap = 1'000'000'000ULL;

/// sum_{d | n, d <= u1} mu(d).
int lambda_trunc(u64 n, u64 u1, const ArithTable& table);

/// Evaluates both sides of the identity by direct k-fold enumeration.
/// Throws WorkLimitExceeded once more than work_cap innermost terms are visited.
HBDecomposition hb_decompose(const HBConfig& cfg, const ArithTable& table, u64 work_cap = kDefaultHBWorkCap);

/// u1 = floor(y^(1/4)), r = 4, f = chi on 1..y.
HBConfig hb_paper_config(u64 y, const Character& chi);

}  // namespace primesums
