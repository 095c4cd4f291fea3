#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace primesums {

using cplx = std::complex<double>;

/// Neumaier-compensated accumulator. Partial values stay accurate to a few ulp
/// of the running magnitude regardless of the number of terms.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(cplx v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  CompensatedComplexSum& operator+=(cplx v) noexcept {
    add(v);
    return *this;
  }
  cplx value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// e(num/den) = exp(2 pi i num/den) with exact reduction of the numerator.
inline cplx unit_root(std::int64_t num, std::int64_t den) {
  std::int64_t k = num % den;
  if (k < 0) k += den;
  // Fold into [-den/2, den/2] so the argument handed to sin/cos stays small.
  if (2 * k > den) k -= den;
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

/// e(t) for real t; the integer part is dropped before scaling.
inline cplx expi(double t) {
  double frac = t - std::floor(t);
  if (frac > 0.5) frac -= 1.0;
  const double a = 2.0 * std::numbers::pi * frac;
  return {std::cos(a), std::sin(a)};
}

/// Table of e(k/n), k = 0..n-1, one per order.
class RootsOfUnity {
 public:
  RootsOfUnity() = default;
  explicit RootsOfUnity(std::int64_t order);

  std::int64_t order() const noexcept { return static_cast<std::int64_t>(table_.size()); }
  const cplx& operator[](std::int64_t k) const {
    std::int64_t r = k % order();
    if (r < 0) r += order();
    return table_[static_cast<std::size_t>(r)];
  }

 private:
  std::vector<cplx> table_;
};

inline RootsOfUnity::RootsOfUnity(std::int64_t order) : table_(static_cast<std::size_t>(order)) {
  for (std::int64_t k = 0; k < order; ++k) table_[static_cast<std::size_t>(k)] = unit_root(k, order);
}

/// Deterministic pairwise reduction; the result depends only on the element order.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.empty()) return T{};
  if (xs.size() <= 8) {
    T acc{};
    for (const auto& x : xs) acc += x;
    return acc;
  }
  const auto mid = xs.size() / 2;
  return pairwise_sum(xs.first(mid)) + pairwise_sum(xs.subspan(mid));
}

inline double relative_gap(cplx a, cplx b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

}  // namespace primesums
