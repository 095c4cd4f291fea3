#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/dirichlet.hpp"

namespace primesums {

/// S(chi, g, f, p^beta) with g(m) = l - m^2 and f(m) = h m.
struct MixedSumSpec {
  u64 p;
  unsigned beta;
  i64 l;
  u64 h;
  Character chi;
  PrimePowerIndex index;

  u64 modulus() const { return index.modulus(); }
};

/// Validates gcd(l, p) = 1, 1 <= h <= p^beta and chi mod p^beta, then fills the index.
MixedSumSpec make_mixed_spec(u64 p, unsigned beta, i64 l, u64 h, const Character& chi);

enum class RootCase { h_divisible, qr_two_roots, nqr_empty };

std::string_view to_string(RootCase c);

/// The classes delta mod p (represented in 1..p) that can contribute to the complete sum.
struct RootSet {
  std::vector<u64> roots;
  u64 discriminant = 0;  ///< c^2 + l r^2 h^2 mod p
  RootCase case_tag = RootCase::nqr_empty;

  bool contains(u64 delta) const;
};

/// Direct summation over m = 1..p^beta.
cplx complete_sum_oracle(const MixedSumSpec& spec);

/// Direct summation restricted to m = delta (mod p), 1 <= delta <= p.
cplx delta_sum_oracle(const MixedSumSpec& spec, u64 delta);

/// Root set via the completed-square case analysis.
/// Throws DegenerateDiscriminant when c^2 + l r^2 h^2 = 0 (mod p) with p not dividing h,
/// and InvalidArgument when p divides both r h and c. When p divides r h the congruence is linear and
/// only delta = p can survive; such sets carry the h-divisible tag.
RootSet root_set(const MixedSumSpec& spec);
RootSet root_set(u64 p, i64 l, u64 h, u64 r, u64 c);

/// t = ord_p(r g f' + c g') read off the polynomial coefficients.
unsigned critical_order(const MixedSumSpec& spec);

struct ClosedFormTerm {
  u64 delta = 0;
  unsigned t = 0;
  double modulus_predicted = 0.0;  ///< p^((beta + t) / 2)
  bool even = true;                ///< beta - t even
  std::optional<u64> a_delta;      ///< 2 r (C/g)'(delta) mod p, odd case only
  std::optional<int> a_delta_legendre;
  /// Oracle S_delta divided by the modulus (and by (A/p) G_p / sqrt(p) in the odd case).
  std::optional<cplx> phase;
  /// Distance of p^beta (p-1) arg(phase) / 2 pi from an integer.
  std::optional<double> root_of_unity_defect;
};

/// Throws ClosedFormRangeError when beta < t + 2 and InvalidArgument when delta is not a root.
ClosedFormTerm closed_form(const MixedSumSpec& spec, u64 delta);

/// Incomplete sum V_2(u) = sum_{m<=u} chi(l - m^2) and its value rebuilt from complete sums.
struct V2Result {
  cplx direct{};
  cplx completed{};
  double difference = 0.0;
};

/// Precomputes S(chi, g, f_h, p^beta) for h = 1..p^beta so that V_2(u) can be rebuilt for any u.
class V2Completion {
 public:
  V2Completion(const Character& chi, i64 l);

  u64 modulus() const noexcept { return modulus_; }
  /// S(chi, g, f_h) with f_h(m) = h m.
  cplx complete(u64 h) const { return complete_[h % modulus_]; }
  cplx direct(u64 u) const;
  cplx completed(u64 u) const;
  V2Result evaluate(u64 u) const;

 private:
  Character chi_;
  i64 l_;
  u64 modulus_;
  std::vector<cplx> complete_;  // index h mod p^beta
};

/// Throws InvalidArgument when chi.modulus() != p_beta.
V2Result incomplete_v2(u64 u, const Character& chi, i64 l, u64 p_beta);

/// Direct incomplete sum only.
cplx v2_direct(u64 u, const Character& chi, i64 l);

struct SineSumCheck {
  double lhs = 0.0;  ///< 2 sum_{h=1}^{(P-1)/2} 1 / sin(pi h / P)
  double rhs = 0.0;  ///< P ln P
  bool holds() const { return lhs <= rhs; }
};

/// P must be odd and at least 3.
SineSumCheck sine_sum_bound(u64 modulus);

}  // namespace primesums
