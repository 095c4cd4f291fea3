#include "primesums/expsum.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "primesums/errors.hpp"
#include "primesums/parallel.hpp"

namespace primesums {

void RationalPoint::validate() const {
  if (q == 0 || a == 0 || a > q) throw InvalidArgument("rational point needs 1 <= a <= q");
  if (std::gcd(a, q) != 1) throw InvalidArgument("rational point needs gcd(a, q) = 1");
}

cplx s_alpha(double alpha, u64 x, const ArithTable& table) {
  table.require(x);
  const double frac = alpha - std::floor(alpha);
  const auto powers = table.prime_powers();
  const auto logs = table.prime_power_logs();
  CompensatedComplexSum s;
  for (std::size_t i = 0, n = table.prime_power_count(x); i < n; ++i) {
    const double t = std::fmod(frac * static_cast<double>(powers[i]), 1.0);
    s += logs[i] * expi(t);
  }
  return s.value();
}

cplx s_rational(const RationalPoint& pt, u64 x, const ArithTable& table) {
  pt.validate();
  table.require(x);
  const auto powers = table.prime_powers();
  const auto logs = table.prime_power_logs();
  const RootsOfUnity roots(static_cast<i64>(pt.q));
  CompensatedComplexSum s;
  for (std::size_t i = 0, n = table.prime_power_count(x); i < n; ++i) {
    cplx term = roots[static_cast<i64>(mul_mod(pt.a, powers[i], pt.q))];
    if (pt.lambda != 0.0) term *= expi(std::fmod(pt.lambda * static_cast<double>(powers[i]), 1.0));
    s += logs[i] * term;
  }
  return s.value();
}

CharacterExpansion::CharacterExpansion(const CharacterGroup& group, u64 x, const ArithTable& table)
    : group_(group), x_(x), psi_(group.size()), tau_conj_(group.size()) {
  table.require(x);
  parallel_for(group.size(), [&](std::size_t i) {
    const auto chi = group_.character(i);
    psi_[i] = psi_chi(x_, chi, table).final;
    tau_conj_[i] = gauss_sum(chi.conj());
  });
}

DecompositionDiagnostics CharacterExpansion::decompose(u64 a, const ArithTable& table) const {
  const u64 q = group_.modulus();
  const RationalPoint pt{a, q, 0.0};
  pt.validate();

  DecompositionDiagnostics d;
  d.direct = s_rational(pt, x_, table);

  // chi(a) only depends on the discrete log of a, so read phases instead of
  // building every value table again.
  const auto loga = group_.log(a);
  const auto factors = group_.factors();
  const RootsOfUnity roots(static_cast<i64>(group_.exponent()));
  CompensatedComplexSum via;
  for (u64 i = 0; i < group_.size(); ++i) {
    const auto exps = group_.exponents_of(i);
    u64 num = 0;
    for (std::size_t k = 0; k < exps.size(); ++k)
      num = (num + exps[k] * (group_.exponent() / factors[k].order) % group_.exponent() * loga[k]) %
            group_.exponent();
    via += roots[static_cast<i64>(num)] * tau_conj_[i] * psi_[i];
  }
  d.via_characters = via.value() / static_cast<double>(group_.size());

  const auto powers = table.prime_powers();
  const auto logs = table.prime_power_logs();
  const RootsOfUnity qroots(static_cast<i64>(q));
  CompensatedComplexSum corr;
  for (std::size_t i = 0, n = table.prime_power_count(x_); i < n; ++i) {
    if (std::gcd(powers[i], q) == 1) continue;
    corr += logs[i] * qroots[static_cast<i64>(mul_mod(a, powers[i], q))];
  }
  d.correction = corr.value();
  d.discrepancy = std::abs(d.direct - (d.via_characters + d.correction));
  return d;
}

DecompositionDiagnostics s_rational_decomposed(const RationalPoint& pt, u64 x, const CharacterGroup& group,
                                               const ArithTable& table) {
  if (group.modulus() != pt.q) throw InvalidArgument("s_rational_decomposed: group modulus differs from q");
  pt.validate();
  return CharacterExpansion(group, x, table).decompose(pt.a, table);
}

std::string_view to_string(SBound kind) {
  switch (kind) {
    case SBound::vinogradov5: return "vinogradov5";
    case SBound::montgomery6: return "montgomery6";
    case SBound::montgomery7: return "montgomery7";
    case SBound::vaughan8: return "vaughan8";
    case SBound::vaughan9: return "vaughan9";
    case SBound::rakhmonov10: return "rakhmonov10";
    case SBound::rakhmonov11: return "rakhmonov11";
    case SBound::theorem2: return "theorem2";
    case SBound::corollary1: return "corollary1";
    case SBound::corollary2: return "corollary2";
  }
  return "?";
}

SBound parse_s_bound(std::string_view name) {
  for (const SBound k : kAllSBounds)
    if (to_string(k) == name) return k;
  throw InvalidArgument("unknown S-bound kind: " + std::string(name));
}

bool needs_eta(SBound kind) {
  return kind == SBound::montgomery7 || kind == SBound::vaughan9 || kind == SBound::rakhmonov11 ||
         kind == SBound::corollary2;
}

double s_bound(SBound kind, const BoundParams& params, double epsilon) {
  params.validate();
  if (needs_eta(kind) && !params.eta)
    throw InvalidArgument("s_bound: kind " + std::string(to_string(kind)) + " requires eta");
  const double x = params.x, q = params.q, L = params.L();
  const double eta_term = params.eta ? x / std::sqrt(*params.eta) : 0.0;
  const double lead = x / std::sqrt(q);
  const double tail = std::sqrt(x) * std::sqrt(q);
  double value = 0.0;
  switch (kind) {
    case SBound::vinogradov5:
      value = (lead + std::pow(x, 0.8) + tail) * std::pow(x, epsilon);
      break;
    case SBound::montgomery6:
      value = (lead + std::pow(x, 5.0 / 7.0) * std::pow(q, 3.0 / 14.0) + tail) * std::pow(L, 17);
      break;
    case SBound::montgomery7:
      value = eta_term * std::pow(L, 17);
      break;
    case SBound::vaughan8:
      value = (lead + std::pow(x, 7.0 / 8.0) * std::pow(q, -1.0 / 8.0) + std::pow(x, 0.75) * std::pow(q, 1.0 / 8.0) +
               tail) *
              std::pow(L, 4);
      break;
    case SBound::vaughan9:
      value = eta_term * std::pow(L, 4);
      break;
    case SBound::rakhmonov10:
      value = (lead + std::pow(x, 0.8) + tail) * std::pow(L, 35);
      break;
    case SBound::rakhmonov11:
      value = eta_term * std::pow(L, 35);
      break;
    case SBound::theorem2:
      value = lead * std::pow(L, 29) + std::pow(x, 0.8) * std::pow(L, 32) + tail * std::pow(L, 33);
      break;
    case SBound::corollary1:
      value = lead * std::pow(L, 33) + std::pow(x, 0.8) * std::pow(L, 32) + tail * std::pow(L, 33);
      break;
    case SBound::corollary2:
      value = eta_term * std::pow(L, 33);
      break;
  }
  return params.constant * value;
}

std::vector<SRatioRow> s_ratio_sweep(std::span<const SGridPoint> points, const ArithTable& table, double constant) {
  for (const auto& pt : points) {
    table.require(pt.x);
    RationalPoint{pt.a, pt.q, 0.0}.validate();
  }
  std::map<std::pair<u64, u64>, CharacterExpansion> expansions;
  std::map<u64, CharacterGroup> groups;
  std::vector<SRatioRow> rows;
  rows.reserve(points.size());
  for (const auto& pt : points) {
    auto git = groups.try_emplace(pt.q, pt.q).first;
    auto eit = expansions.find({pt.q, pt.x});
    if (eit == expansions.end()) eit = expansions.emplace(std::pair{pt.q, pt.x}, CharacterExpansion(git->second, pt.x, table)).first;
    const auto diag = eit->second.decompose(pt.a, table);
    SRatioRow row;
    row.a = pt.a;
    row.q = pt.q;
    row.x = pt.x;
    row.abs_s = std::abs(diag.direct);
    row.bound_theorem2 =
        s_bound(SBound::theorem2, BoundParams{static_cast<double>(pt.x), static_cast<double>(pt.q), std::nullopt, constant});
    row.ratio = row.abs_s / row.bound_theorem2;
    row.discrepancy = diag.discrepancy;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace primesums
