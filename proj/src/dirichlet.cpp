#include "primesums/dirichlet.hpp"

#include <numeric>

#include "primesums/errors.hpp"

namespace primesums {

namespace detail {

struct GroupData {
  u64 q = 1;
  u64 phi = 1;
  u64 exponent = 1;
  std::vector<CyclicFactor> factors;
  // dlog[n * factors.size() + i] is the log of n along factor i, or -1 for non-units.
  std::vector<std::int32_t> dlog;
  RootsOfUnity roots;
};

}  // namespace detail

namespace {

u64 crt_lift(u64 residue, u64 m, u64 q) {
  // x = residue (mod m), x = 1 (mod q/m)
  const u64 other = q / m;
  if (other == 1) return residue % q;
  const u64 a = mul_mod(mul_mod(residue, other, q), inverse_mod(other % m, m), q);
  const u64 b = mul_mod(m, inverse_mod(m % other, other), q);
  return (a + b) % q;
}

std::shared_ptr<const detail::GroupData> make_group(u64 q) {
  if (q == 0) throw InvalidArgument("character_group: modulus must be at least 1");
  auto g = std::make_shared<detail::GroupData>();
  g->q = q;
  g->phi = euler_phi(q);

  struct Component {
    u64 modulus;
    std::size_t first_factor;
    std::vector<std::vector<std::int32_t>> logs;  // residue -> log vector (empty if not unit)
  };
  std::vector<Component> components;

  for (const auto& [p, k] : factorize(q)) {
    const u64 m = ipow(p, k);
    Component comp{m, g->factors.size(), std::vector<std::vector<std::int32_t>>(m)};
    if (p == 2) {
      if (k == 1) {
        comp.logs[1] = {};
      } else if (k == 2) {
        g->factors.push_back({2, m, 3, crt_lift(3, m, q), 2});
        comp.logs[1] = {0};
        comp.logs[3] = {1};
      } else {
        const u64 half = m / 4;
        g->factors.push_back({2, m, m - 1, crt_lift(m - 1, m, q), 2});
        g->factors.push_back({2, m, 5, crt_lift(5, m, q), half});
        u64 five_power = 1;
        for (u64 b = 0; b < half; ++b) {
          comp.logs[five_power] = {0, static_cast<std::int32_t>(b)};
          comp.logs[m - five_power] = {1, static_cast<std::int32_t>(b)};
          five_power = five_power * 5 % m;
        }
      }
    } else {
      const u64 root = primitive_root(p, k);
      const u64 order = m / p * (p - 1);
      g->factors.push_back({p, m, root, crt_lift(root, m, q), order});
      u64 x = 1;
      for (u64 j = 0; j < order; ++j) {
        comp.logs[x] = {static_cast<std::int32_t>(j)};
        x = mul_mod(x, root, m);
      }
    }
    components.push_back(std::move(comp));
  }

  for (const auto& f : g->factors) g->exponent = std::lcm(g->exponent, f.order);
  g->roots = RootsOfUnity(static_cast<i64>(g->exponent));

  const std::size_t nf = g->factors.size();
  g->dlog.assign(static_cast<std::size_t>(q) * std::max<std::size_t>(nf, 1), -1);
  for (u64 n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    for (const auto& comp : components) {
      const auto& lv = comp.logs[n % comp.modulus];
      for (std::size_t j = 0; j < lv.size(); ++j) g->dlog[n * nf + comp.first_factor + j] = lv[j];
    }
    if (nf == 0) g->dlog[n] = 0;
  }
  return g;
}

u64 factor_scale(const detail::GroupData& g, std::size_t i) { return g.exponent / g.factors[i].order; }

}  // namespace

CharacterGroup::CharacterGroup(u64 q) : data_(make_group(q)) {}

u64 CharacterGroup::modulus() const noexcept { return data_->q; }
u64 CharacterGroup::size() const noexcept { return data_->phi; }
u64 CharacterGroup::exponent() const noexcept { return data_->exponent; }
std::span<const CyclicFactor> CharacterGroup::factors() const noexcept { return data_->factors; }

std::vector<u64> CharacterGroup::exponents_of(u64 index) const {
  if (index >= data_->phi) throw InvalidArgument("character index out of range");
  std::vector<u64> e(data_->factors.size());
  for (std::size_t i = e.size(); i-- > 0;) {
    e[i] = index % data_->factors[i].order;
    index /= data_->factors[i].order;
  }
  return e;
}

u64 CharacterGroup::index_of(std::span<const u64> exponents) const {
  if (exponents.size() != data_->factors.size()) throw InvalidArgument("exponent vector has wrong length");
  u64 index = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) index = index * data_->factors[i].order + exponents[i] % data_->factors[i].order;
  return index;
}

std::vector<u64> CharacterGroup::log(u64 n) const {
  const auto& g = *data_;
  n %= g.q;
  const std::size_t nf = g.factors.size();
  if (std::gcd(n, g.q) != 1) return {};
  std::vector<u64> out(nf);
  for (std::size_t i = 0; i < nf; ++i) out[i] = static_cast<u64>(g.dlog[n * nf + i]);
  return out;
}

Character CharacterGroup::from_exponents(std::span<const u64> exponents) const {
  return character(index_of(exponents));
}

Character CharacterGroup::character(u64 index) const {
  const auto& g = *data_;
  Character chi;
  chi.group_ = data_;
  chi.modulus_ = g.q;
  chi.index_ = index;
  chi.denominator_ = g.exponent;
  chi.exponents_ = exponents_of(index);
  chi.phase_.assign(g.q, -1);
  chi.values_.assign(g.q, cplx{0.0, 0.0});

  const std::size_t nf = g.factors.size();
  std::vector<u64> weight(nf);
  for (std::size_t i = 0; i < nf; ++i) weight[i] = chi.exponents_[i] * factor_scale(g, i) % g.exponent;

  for (u64 n = 0; n < g.q; ++n) {
    if (g.dlog[n * std::max<std::size_t>(nf, 1)] < 0) continue;
    u64 num = 0;
    for (std::size_t i = 0; i < nf; ++i) num = (num + weight[i] * static_cast<u64>(g.dlog[n * nf + i])) % g.exponent;
    chi.phase_[n] = static_cast<i64>(num);
    chi.values_[n] = g.roots[static_cast<i64>(num)];
  }
  return chi;
}

Character CharacterGroup::principal() const { return character(0); }

std::vector<Character> CharacterGroup::all() const {
  std::vector<Character> out;
  out.reserve(data_->phi);
  for (u64 i = 0; i < data_->phi; ++i) out.push_back(character(i));
  return out;
}

std::vector<u64> CharacterGroup::primitive_indices() const {
  std::vector<u64> out;
  for (u64 i = 0; i < data_->phi; ++i)
    if (is_primitive(character(i))) out.push_back(i);
  return out;
}

u64 Character::order() const {
  const auto& g = *group_;
  u64 common = g.exponent;
  for (std::size_t i = 0; i < exponents_.size(); ++i) common = std::gcd(common, exponents_[i] * factor_scale(g, i));
  return g.exponent / common;
}

bool Character::is_principal() const {
  for (const u64 e : exponents_)
    if (e != 0) return false;
  return true;
}

CharacterGroup Character::group() const {
  return CharacterGroup(group_);
}

Character Character::conj() const {
  std::vector<u64> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const u64 ord = group_->factors[i].order;
    e[i] = (ord - exponents_[i] % ord) % ord;
  }
  return group().from_exponents(e);
}

Character Character::operator*(const Character& other) const {
  if (other.modulus_ != modulus_)
    throw InvalidArgument("character product needs a common modulus");
  std::vector<u64> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (exponents_[i] + other.exponents_[i]) % group_->factors[i].order;
  return group().from_exponents(e);
}

u64 conductor(const Character& chi) {
  const auto factors = chi.group().factors();
  const auto exps = chi.exponents();
  u64 d = 1;
  std::size_t i = 0;
  for (const auto& [p, k] : factorize(chi.modulus())) {
    if (p == 2) {
      if (k == 1) continue;
      if (k == 2) {
        if (exps[i] != 0) d *= 4;
        i += 1;
        continue;
      }
      const u64 sign = exps[i];
      const u64 half = factors[i + 1].order;
      const u64 five_order = half / std::gcd(exps[i + 1], half);
      if (five_order > 1) {
        d *= ipow(2, 2 + valuation(five_order, 2));
      } else if (sign != 0) {
        d *= 4;
      }
      i += 2;
      continue;
    }
    const u64 ord = factors[i].order;
    const u64 local_order = ord / std::gcd(exps[i], ord);
    if (local_order > 1) d *= ipow(p, 1 + valuation(local_order, p));
    i += 1;
  }
  return d;
}

bool is_primitive(const Character& chi) { return conductor(chi) == chi.modulus(); }

Character primitive_inducing(const Character& chi) {
  const u64 q = chi.modulus();
  const u64 d = conductor(chi);
  CharacterGroup target(d);
  std::vector<u64> exps;
  for (const auto& f : target.factors()) {
    u64 n = f.lifted;
    while (std::gcd(n, q) != 1) n += d;
    const i64 ph = chi.phase(n);
    // chi(n) = e(ph / L_q) must equal e(e_i / order_i).
    const u64 num = static_cast<u64>(ph) * f.order;
    if (num % chi.phase_denominator() != 0) throw InvalidArgument("primitive_inducing: inconsistent phase");
    exps.push_back(num / chi.phase_denominator() % f.order);
  }
  return target.from_exponents(exps);
}

cplx gauss_sum(const Character& chi) {
  const u64 q = chi.modulus();
  const i64 den = static_cast<i64>(chi.phase_denominator());
  CompensatedComplexSum s;
  for (u64 h = 1; h <= q; ++h) {
    const i64 ph = chi.phase(h);
    if (ph < 0) continue;
    // chi(h) e(h/q) = e((ph q + h den) / (den q))
    s += unit_root(ph * static_cast<i64>(q) + static_cast<i64>(h % q) * den, den * static_cast<i64>(q));
  }
  return s.value();
}

cplx quadratic_gauss_sum(u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw InvalidArgument("quadratic_gauss_sum: p must be an odd prime");
  CompensatedComplexSum s;
  for (u64 m = 1; m <= p; ++m) s += unit_root(static_cast<i64>(mul_mod(m, m, p)), static_cast<i64>(p));
  return s.value();
}

std::optional<std::pair<u64, unsigned>> odd_prime_power(u64 q) {
  const auto f = factorize(q);
  if (f.size() != 1 || f[0].first == 2) return std::nullopt;
  return f[0];
}

PrimePowerIndex char_index(const Character& chi) {
  const auto pp = odd_prime_power(chi.modulus());
  if (!pp) throw InvalidArgument("char_index: modulus must be an odd prime power");
  PrimePowerIndex idx;
  idx.p = pp->first;
  idx.beta = pp->second;
  idx.a = primitive_root(idx.p, idx.beta);
  const u64 p2 = idx.p * idx.p;
  idx.r = (pow_mod(idx.a, idx.p - 1, p2) + p2 - 1) % p2 / idx.p % idx.p;
  const u64 phi = idx.phi();
  const auto ph = static_cast<u64>(chi.phase(idx.a));
  const u64 c = mul_mod(ph, phi / chi.phase_denominator(), phi);
  idx.c = (c == 0) ? phi : c;
  return idx;
}

}  // namespace primesums
