#include "primesums/chebyshev.hpp"

#include <cmath>
#include <string>

#include "primesums/errors.hpp"
#include "primesums/parallel.hpp"

namespace primesums {

PsiProfile psi_chi(u64 x, const Character& chi, const ArithTable& table) {
  table.require(x);
  PsiProfile out;
  out.modulus = chi.modulus();
  out.character_index = chi.index();
  out.x = x;

  const auto powers = table.prime_powers();
  const auto logs = table.prime_power_logs();
  const std::size_t count = table.prime_power_count(x);
  CompensatedComplexSum sum;
  for (std::size_t i = 0; i < count; ++i) {
    const cplx v = chi.value(powers[i]);
    if (v == cplx{}) continue;
    sum += logs[i] * v;
    out.running_max = std::max(out.running_max, std::abs(sum.value()));
  }
  out.final = sum.value();
  return out;
}

double psi(u64 x, const ArithTable& table) {
  table.require(x);
  const auto logs = table.prime_power_logs();
  CompensatedSum s;
  for (std::size_t i = 0, n = table.prime_power_count(x); i < n; ++i) s += logs[i];
  return s.value();
}

namespace {

struct CharacterRef {
  u64 modulus;
  u64 index;
};

std::vector<CharacterRef> characters_for(u64 q, const TMeanOptions& options) {
  std::vector<CharacterRef> refs;
  if (!options.primitive_only) {
    const u64 phi = euler_phi(q);
    for (u64 i = 0; i < phi; ++i) refs.push_back({q, i});
    return refs;
  }
  for (u64 d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    CharacterGroup group(d);
    for (const u64 i : group.primitive_indices()) refs.push_back({d, i});
  }
  return refs;
}

}  // namespace

double t_mean(u64 x, u64 q, const ArithTable& table, TMeanOptions options) {
  if (q == 0) throw InvalidArgument("t_mean: q must be at least 1");
  table.require(x);
  const auto refs = characters_for(q, options);
  std::vector<double> maxima(refs.size(), 0.0);
  // Groups are rebuilt per modulus; with primitive_only there are several moduli.
  std::vector<std::optional<CharacterGroup>> groups(q + 1);
  for (const auto& ref : refs)
    if (!groups[ref.modulus]) groups[ref.modulus].emplace(ref.modulus);
  parallel_for(refs.size(), [&](std::size_t i) {
    const auto chi = groups[refs[i].modulus]->character(refs[i].index);
    maxima[i] = psi_chi(x, chi, table).running_max;
  });
  return pairwise_sum<double>(maxima);
}

double BoundParams::L() const { return std::log(x * q); }

void BoundParams::validate() const {
  if (!(x > 0.0) || !(q > 0.0)) throw InvalidArgument("bound parameters need x > 0 and q > 0");
  if (!(L() > 0.0)) throw InvalidArgument("bound parameters need ln(xq) > 0");
  if (eta && !(*eta >= 1.0)) throw InvalidArgument("bound parameters need eta >= 1");
}

std::string_view to_string(TBound kind) {
  switch (kind) {
    case TBound::erh: return "erh";
    case TBound::montgomery: return "montgomery";
    case TBound::vaughan: return "vaughan";
    case TBound::rakhmonov93: return "rakhmonov93";
    case TBound::theorem1: return "theorem1";
  }
  return "?";
}

TBound parse_t_bound(std::string_view name) {
  for (const TBound k : kAllTBounds)
    if (to_string(k) == name) return k;
  throw InvalidArgument("unknown t-bound kind: " + std::string(name));
}

double t_bound(TBound kind, const BoundParams& params) {
  params.validate();
  const double x = params.x, q = params.q, L = params.L();
  double value = 0.0;
  switch (kind) {
    case TBound::erh:
      value = x + std::sqrt(x) * q * L * L;
      break;
    case TBound::montgomery:
      value = (x + std::pow(x, 5.0 / 7.0) * std::pow(q, 5.0 / 7.0) + std::sqrt(x) * q) * std::pow(L, 17);
      break;
    case TBound::vaughan:
      value = x * std::pow(L, 3) + std::pow(x, 0.75) * std::pow(q, 5.0 / 8.0) * std::pow(L, 23.0 / 8.0) +
              std::sqrt(x) * q * std::pow(L, 3.5);
      break;
    case TBound::rakhmonov93:
      value = (x + std::pow(x, 0.8) * std::sqrt(q) + std::sqrt(x) * q) * std::pow(L, 34);
      break;
    case TBound::theorem1:
      value = x * std::pow(L, 28) + std::pow(x, 0.8) * std::sqrt(q) * std::pow(L, 31) +
              std::sqrt(x) * q * std::pow(L, 32);
      break;
  }
  return params.constant * value;
}

std::vector<TRatioRow> t_ratio_sweep(std::span<const TGridPoint> grid, const ArithTable& table, double constant,
                                     TMeanOptions options) {
  for (const auto& pt : grid) table.require(pt.x);
  std::vector<TRatioRow> rows;
  rows.reserve(grid.size());
  for (const auto& pt : grid) {
    TRatioRow row;
    row.x = pt.x;
    row.q = pt.q;
    row.phi_q = euler_phi(pt.q);
    row.t_mean = t_mean(pt.x, pt.q, table, options);
    BoundParams params{static_cast<double>(pt.x), static_cast<double>(pt.q), std::nullopt, constant};
    for (std::size_t k = 0; k < kAllTBounds.size(); ++k) row.bounds[k] = t_bound(kAllTBounds[k], params);
    row.ratio_theorem1 = row.t_mean / row.bounds[4];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace primesums
