#include "primesums/mixedsum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "primesums/errors.hpp"

namespace primesums {

MixedSumSpec make_mixed_spec(u64 p, unsigned beta, i64 l, u64 h, const Character& chi) {
  if (beta == 0) throw InvalidArgument("mixed sum: beta must be at least 1");
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw InvalidArgument("mixed sum: p must be an odd prime");
  const u64 modulus = ipow(p, beta);
  if (chi.modulus() != modulus) throw InvalidArgument("mixed sum: character modulus must be p^beta");
  if (reduce(l, p) == 0) throw InvalidArgument("mixed sum: gcd(l, p) must be 1");
  if (h == 0 || h > modulus) throw InvalidArgument("mixed sum: need 1 <= h <= p^beta");
  return MixedSumSpec{p, beta, l, h, chi, char_index(chi)};
}

std::string_view to_string(RootCase c) {
  switch (c) {
    case RootCase::h_divisible: return "h-divisible";
    case RootCase::qr_two_roots: return "qr-two-roots";
    case RootCase::nqr_empty: return "nqr-empty";
  }
  return "?";
}

bool RootSet::contains(u64 delta) const { return std::find(roots.begin(), roots.end(), delta) != roots.end(); }

namespace {

// chi(l - m^2) e(h m / P), with both phases combined before rounding.
cplx summand(const MixedSumSpec& spec, u64 m, u64 modulus) {
  const i64 arg = spec.l - static_cast<i64>(mul_mod(m, m, modulus));
  const i64 ph = spec.chi.phase(reduce(arg, modulus));
  if (ph < 0) return {};
  const auto den = static_cast<i64>(spec.chi.phase_denominator());
  const auto P = static_cast<i64>(modulus);
  return unit_root(ph * P + static_cast<i64>(mul_mod(spec.h, m, modulus)) * den, den * P);
}

}  // namespace

cplx complete_sum_oracle(const MixedSumSpec& spec) {
  const u64 P = spec.modulus();
  CompensatedComplexSum s;
  for (u64 m = 1; m <= P; ++m) s += summand(spec, m, P);
  return s.value();
}

cplx delta_sum_oracle(const MixedSumSpec& spec, u64 delta) {
  if (delta == 0 || delta > spec.p) throw InvalidArgument("delta_sum_oracle: need 1 <= delta <= p");
  const u64 P = spec.modulus();
  CompensatedComplexSum s;
  for (u64 m = delta; m <= P; m += spec.p) s += summand(spec, m, P);
  return s.value();
}

RootSet root_set(u64 p, i64 l, u64 h, u64 r, u64 c) {
  RootSet out;
  const u64 lr = reduce(l, p);
  const u64 hr = h % p, rr = r % p, cr = c % p;
  out.discriminant = (mul_mod(cr, cr, p) + mul_mod(lr, mul_mod(mul_mod(rr, rr, p), mul_mod(hr, hr, p), p), p)) % p;

  auto g_nonzero = [&](u64 delta) { return mul_mod(delta % p, delta % p, p) != lr; };

  if (hr == 0 || rr == 0) {
    if (cr == 0) throw InvalidArgument("root_set: p divides both r h and c, the congruence degenerates");
    // 2 c delta = 0 (mod p) leaves only delta = p.
    out.case_tag = RootCase::h_divisible;
    if (g_nonzero(p)) out.roots.push_back(p);
    return out;
  }
  if (out.discriminant == 0) throw DegenerateDiscriminant("root_set: c^2 + l r^2 h^2 = 0 (mod p)");
  if (legendre(static_cast<i64>(out.discriminant), p) < 0) {
    out.case_tag = RootCase::nqr_empty;
    return out;
  }
  out.case_tag = RootCase::qr_two_roots;
  // (r h delta + c)^2 = c^2 + l r^2 h^2
  const u64 rh_inv = inverse_mod(mul_mod(rr, hr, p), p);
  for (const u64 s : sqrt_mod(static_cast<i64>(out.discriminant), p)) {
    u64 delta = mul_mod((s + p - cr) % p, rh_inv, p);
    if (delta == 0) delta = p;
    if (g_nonzero(delta)) out.roots.push_back(delta);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

RootSet root_set(const MixedSumSpec& spec) {
  return root_set(spec.p, spec.l, spec.h, spec.index.r, spec.index.c);
}

namespace {

// Coefficients (constant first) of r g f' + c g' = r h l - 2 c m - r h m^2.
std::array<i64, 3> critical_polynomial(const MixedSumSpec& spec) {
  const auto r = static_cast<i64>(spec.index.r);
  const auto c = static_cast<i64>(spec.index.c);
  const auto h = static_cast<i64>(spec.h);
  return {r * h * spec.l, -2 * c, -r * h};
}

unsigned ord_p(i64 v, u64 p) { return valuation(static_cast<u64>(v < 0 ? -v : v), p); }

}  // namespace

unsigned critical_order(const MixedSumSpec& spec) {
  unsigned t = ~0U;
  for (const i64 coef : critical_polynomial(spec))
    if (coef != 0) t = std::min(t, ord_p(coef, spec.p));
  return t;
}

ClosedFormTerm closed_form(const MixedSumSpec& spec, u64 delta) {
  ClosedFormTerm out;
  out.delta = delta;
  out.t = critical_order(spec);
  if (spec.beta < out.t + 2) throw ClosedFormRangeError("closed_form: needs beta >= t + 2");
  if (!root_set(spec).contains(delta)) throw InvalidArgument("closed_form: delta is not in the root set");

  const u64 p = spec.p;
  const double pd = static_cast<double>(p);
  out.modulus_predicted = std::pow(pd, 0.5 * static_cast<double>(spec.beta + out.t));
  out.even = (spec.beta - out.t) % 2 == 0;

  const cplx oracle = delta_sum_oracle(spec, delta);
  cplx unit;
  if (out.even) {
    unit = oracle / out.modulus_predicted;
  } else {
    // C = p^-t (r g f' + c g'); at a root C(delta) = 0, so (C/g)' = C'/g there.
    auto coef = critical_polynomial(spec);
    const u64 scale = ipow(p, out.t);
    for (auto& k : coef) k /= static_cast<i64>(scale);
    const u64 d = delta % p;
    const u64 c_val = (reduce(coef[0], p) + mul_mod(reduce(coef[1], p), d, p) + mul_mod(reduce(coef[2], p), mul_mod(d, d, p), p)) % p;
    const u64 c_der = (reduce(coef[1], p) + mul_mod(2 * reduce(coef[2], p) % p, d, p)) % p;
    const u64 g_val = reduce(spec.l - static_cast<i64>(mul_mod(d, d, p)), p);
    const u64 g_der = reduce(-2 * static_cast<i64>(d), p);
    // (C' g - C g') / g^2
    const u64 num = (mul_mod(c_der, g_val, p) + p - mul_mod(c_val, g_der, p)) % p;
    const u64 quotient = mul_mod(num, inverse_mod(mul_mod(g_val, g_val, p), p), p);
    out.a_delta = mul_mod(2 * (spec.index.r % p) % p, quotient, p);
    out.a_delta_legendre = legendre(static_cast<i64>(*out.a_delta), p);
    const double scale_odd = std::pow(pd, 0.5 * static_cast<double>(spec.beta + out.t - 1));
    if (*out.a_delta_legendre != 0) unit = oracle / (static_cast<double>(*out.a_delta_legendre) * quadratic_gauss_sum(p) * scale_odd);
    else unit = {};
  }
  out.phase = unit;
  if (std::abs(unit) > 0.5) {
    const double order = static_cast<double>(spec.modulus()) * static_cast<double>(p - 1);
    const double turns = std::arg(unit) / (2.0 * std::numbers::pi) * order;
    out.root_of_unity_defect = std::fabs(turns - std::round(turns));
  }
  return out;
}

V2Completion::V2Completion(const Character& chi, i64 l) : chi_(chi), l_(l), modulus_(chi.modulus()) {
  const u64 P = modulus_;
  const auto den = static_cast<i64>(chi.phase_denominator());
  complete_.assign(P, cplx{});
  std::vector<i64> phase(P + 1, -1);
  for (u64 m = 1; m <= P; ++m) phase[m] = chi.phase(reduce(l - static_cast<i64>(mul_mod(m, m, P)), P));
  for (u64 h = 0; h < P; ++h) {
    CompensatedComplexSum s;
    for (u64 m = 1; m <= P; ++m) {
      if (phase[m] < 0) continue;
      s += unit_root(phase[m] * static_cast<i64>(P) + static_cast<i64>(mul_mod(h, m, P)) * den,
                     den * static_cast<i64>(P));
    }
    complete_[h] = s.value();
  }
}

cplx V2Completion::direct(u64 u) const { return v2_direct(u, chi_, l_); }

cplx V2Completion::completed(u64 u) const {
  const u64 P = modulus_;
  const auto Pd = static_cast<double>(P);
  CompensatedComplexSum s;
  s += complete_[0] * (static_cast<double>(u) / Pd);
  for (u64 h = 1; h < P; ++h) {
    // sum_{m=1}^{u} e(-h m / P) = e(-h (u + 1) / 2P) sin(pi h u / P) / sin(pi h / P)
    const u64 k = mul_mod(h, u, 2 * P);
    const double ratio = std::sin(std::numbers::pi * static_cast<double>(k) / Pd) /
                         std::sin(std::numbers::pi * static_cast<double>(h) / Pd);
    const cplx twist = unit_root(-static_cast<i64>(mul_mod(h, u + 1, 2 * P)), static_cast<i64>(2 * P));
    s += (ratio / Pd) * twist * complete_[h];
  }
  return s.value();
}

V2Result V2Completion::evaluate(u64 u) const {
  V2Result r;
  r.direct = direct(u);
  r.completed = completed(u);
  r.difference = std::abs(r.direct - r.completed);
  return r;
}

cplx v2_direct(u64 u, const Character& chi, i64 l) {
  const u64 q = chi.modulus();
  CompensatedComplexSum s;
  for (u64 m = 1; m <= u; ++m) s += chi(l - static_cast<i64>(mul_mod(m, m, q)));
  return s.value();
}

V2Result incomplete_v2(u64 u, const Character& chi, i64 l, u64 p_beta) {
  if (chi.modulus() != p_beta) throw InvalidArgument("incomplete_v2: character modulus differs from p^beta");
  if (u == 0) return {};
  return V2Completion(chi, l).evaluate(u);
}

SineSumCheck sine_sum_bound(u64 modulus) {
  if (modulus < 3 || modulus % 2 == 0) throw InvalidArgument("sine_sum_bound: modulus must be odd and at least 3");
  const auto P = static_cast<double>(modulus);
  CompensatedSum s;
  for (u64 h = 1; h <= (modulus - 1) / 2; ++h) s += 1.0 / std::sin(std::numbers::pi * static_cast<double>(h) / P);
  return {2.0 * s.value(), P * std::log(P)};
}

}  // namespace primesums
