#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/dirichlet.hpp"

namespace primesums {

/// psi(y, chi) scanned over integer y <= x.
struct PsiProfile {
  u64 modulus = 1;
  u64 character_index = 0;
  u64 x = 0;
  double running_max = 0.0;  ///< max_{y<=x} |psi(y, chi)|
  cplx final{};              ///< psi(x, chi)
};

/// psi is a step function in y, so sampling after every prime power is exact.
PsiProfile psi_chi(u64 x, const Character& chi, const ArithTable& table);

struct TMeanOptions {
  /// Sum over primitive characters mod every d | q instead of all characters mod q.
  bool primitive_only = false;
};

/// t(x; q) = sum over characters mod q of max_{y<=x} |psi(y, chi)|.
double t_mean(u64 x, u64 q, const ArithTable& table, TMeanOptions options = {});

/// Inputs of the bound evaluators. L = ln(x q).
struct BoundParams {
  double x = 2.0;
  double q = 1.0;
  std::optional<double> eta;
  double constant = 1.0;

  double L() const;
  void validate() const;
};

enum class TBound { erh, montgomery, vaughan, rakhmonov93, theorem1 };

inline constexpr std::array<TBound, 5> kAllTBounds = {TBound::erh, TBound::montgomery, TBound::vaughan,
                                                      TBound::rakhmonov93, TBound::theorem1};

std::string_view to_string(TBound kind);
/// Throws InvalidArgument for an unknown name.
TBound parse_t_bound(std::string_view name);

/// Right-hand side of the selected estimate for t(x; q), scaled by params.constant.
double t_bound(TBound kind, const BoundParams& params);

struct TRatioRow {
  u64 x = 0;
  u64 q = 0;
  u64 phi_q = 0;
  double t_mean = 0.0;
  std::array<double, 5> bounds{};  ///< in kAllTBounds order
  double ratio_theorem1 = 0.0;
};

struct TGridPoint {
  u64 x;
  u64 q;
};

std::vector<TRatioRow> t_ratio_sweep(std::span<const TGridPoint> grid, const ArithTable& table,
                                     double constant = 1.0, TMeanOptions options = {});

/// psi(x) = sum_{n<=x} Lambda(n).
double psi(u64 x, const ArithTable& table);

}  // namespace primesums
