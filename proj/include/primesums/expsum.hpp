#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/chebyshev.hpp"
#include "primesums/dirichlet.hpp"

namespace primesums {

/// alpha = a/q + lambda with gcd(a, q) = 1 and 1 <= a <= q.
struct RationalPoint {
  u64 a = 1;
  u64 q = 1;
  double lambda = 0.0;

  /// Throws InvalidArgument unless the coprimality and range invariants hold.
  void validate() const;
};

/// S(alpha, x) = sum_{n<=x} Lambda(n) e(alpha n).
cplx s_alpha(double alpha, u64 x, const ArithTable& table);

/// S(a/q + lambda, x); the a n / q part of the phase is reduced exactly.
cplx s_rational(const RationalPoint& pt, u64 x, const ArithTable& table);

struct DecompositionDiagnostics {
  cplx direct{};          ///< S(a/q, x) by direct summation
  cplx via_characters{};  ///< (1/phi(q)) sum_chi chi(a) tau(conj chi) psi(x, chi)
  cplx correction{};      ///< sum over n <= x with gcd(n, q) > 1
  double discrepancy = 0.0;

  bool holds(double rel_tol = 1e-6) const { return discrepancy <= rel_tol * (1.0 + std::abs(direct)); }
};

/// Per-(q, x) data shared by every numerator a: psi(x, chi) and tau(conj chi) for each chi.
class CharacterExpansion {
 public:
  CharacterExpansion(const CharacterGroup& group, u64 x, const ArithTable& table);

  u64 modulus() const noexcept { return group_.modulus(); }
  u64 x() const noexcept { return x_; }
  std::span<const cplx> psi_values() const noexcept { return psi_; }
  std::span<const cplx> conj_gauss_sums() const noexcept { return tau_conj_; }

  DecompositionDiagnostics decompose(u64 a, const ArithTable& table) const;

 private:
  CharacterGroup group_;
  u64 x_;
  std::vector<cplx> psi_;
  std::vector<cplx> tau_conj_;
};

/// Throws InvalidArgument when group.modulus() != pt.q.
DecompositionDiagnostics s_rational_decomposed(const RationalPoint& pt, u64 x, const CharacterGroup& group,
                                               const ArithTable& table);

enum class SBound {
  vinogradov5,
  montgomery6,
  montgomery7,
  vaughan8,
  vaughan9,
  rakhmonov10,
  rakhmonov11,
  theorem2,
  corollary1,
  corollary2
};

inline constexpr std::array<SBound, 10> kAllSBounds = {
    SBound::vinogradov5, SBound::montgomery6, SBound::montgomery7, SBound::vaughan8,   SBound::vaughan9,
    SBound::rakhmonov10, SBound::rakhmonov11, SBound::theorem2,    SBound::corollary1, SBound::corollary2};

std::string_view to_string(SBound kind);
SBound parse_s_bound(std::string_view name);
bool needs_eta(SBound kind);

/// Right-hand side of the selected estimate for S(alpha, x). epsilon only enters vinogradov5.
/// Throws InvalidArgument when an eta-dependent kind is called without eta.
double s_bound(SBound kind, const BoundParams& params, double epsilon = 0.01);

struct SRatioRow {
  u64 a = 0;
  u64 q = 0;
  u64 x = 0;
  double abs_s = 0.0;
  double bound_theorem2 = 0.0;
  double ratio = 0.0;
  double discrepancy = 0.0;
};

struct SGridPoint {
  u64 a;
  u64 q;
  u64 x;
};

std::vector<SRatioRow> s_ratio_sweep(std::span<const SGridPoint> points, const ArithTable& table,
                                     double constant = 1.0);

}  // namespace primesums
