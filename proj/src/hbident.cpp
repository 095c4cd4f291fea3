#include "primesums/hbident.hpp"

#include <cmath>
#include <string>

#include "primesums/errors.hpp"

namespace primesums {

TestFunction TestFunction::sample(std::string label, u64 x, const std::function<cplx(u64)>& f) {
  TestFunction tf{std::move(label), std::vector<cplx>(x + 1)};
  for (u64 n = 1; n <= x; ++n) tf.values[n] = f(n);
  return tf;
}

void HBConfig::validate() const {
  if (x == 0) throw InvalidArgument("hb_decompose: x must be at least 1");
  if (u1 == 0 || u1 > x) throw InvalidArgument("hb_decompose: need 1 <= u1 <= x");
  if (r == 0) throw InvalidArgument("hb_decompose: r must be at least 1");
  if (f.values.size() < x + 1) throw InvalidArgument("hb_decompose: test function not sampled up to x");
}

cplx HBDecomposition::rhs() const {
  CompensatedComplexSum s;
  for (const cplx& t : main_terms) s += t;
  s += residual;
  return s.value();
}

int lambda_trunc(u64 n, u64 u1, const ArithTable& table) {
  if (n == 0) throw InvalidArgument("lambda_trunc: n must be positive");
  table.require(std::min(n, u1));
  int s = 0;
  for (u64 d = 1; d <= std::min(n, u1); ++d)
    if (n % d == 0) s += table.moebius(d);
  return s;
}

namespace {

class Enumerator {
 public:
  Enumerator(const HBConfig& cfg, const ArithTable& table, u64 cap) : cfg_(cfg), table_(table), cap_(cap) {}

  // sum over m_1..m_k <= u1 and n_1..n_k >= 1 with product <= x of
  // mu(m_1)...mu(m_k) ln(n_1) f(m_1 n_1 ... m_k n_k)
  cplx main_group(unsigned k) {
    k_ = k;
    acc_ = {};
    walk_m(0, 1, 1);
    return acc_.value();
  }

  // sum over n_1..n_r > u1 and m with n_1...n_r m <= x of
  // lambda(n_1)...lambda(n_r) Lambda(m) f(n_1...n_r m)
  cplx residual_sum() {
    lambda_.assign(cfg_.x + 1, 0);
    for (u64 d = 1; d <= cfg_.u1; ++d) {
      const int mu = table_.moebius(d);
      if (mu == 0) continue;
      for (u64 m = d; m <= cfg_.x; m += d) lambda_[m] += mu;
    }
    acc_ = {};
    walk_residual(0, 1, 1);
    return acc_.value();
  }

  u64 visits() const noexcept { return visits_; }

 private:
  void tick(u64 n) {
    visits_ += n;
    if (visits_ > cap_) throw WorkLimitExceeded("hb_decompose: work cap of " + std::to_string(cap_) + " visits exceeded");
  }

  void walk_m(unsigned depth, u64 prod, i64 weight) {
    if (depth == k_) {
      walk_n(0, prod, weight, 0.0);
      return;
    }
    for (u64 m = 1; m <= cfg_.u1 && prod * m <= cfg_.x; ++m) {
      const int mu = table_.moebius(m);
      if (mu != 0) walk_m(depth + 1, prod * m, weight * mu);
    }
  }

  void walk_n(unsigned depth, u64 prod, i64 weight, double log_n1) {
    const u64 bound = cfg_.x / prod;
    if (depth + 1 == k_) {
      tick(bound);
      const auto w = static_cast<double>(weight);
      // ln n_1 vanishes at n_1 = 1.
      for (u64 n = (depth == 0 ? 2 : 1); n <= bound; ++n) {
        const double ln1 = (depth == 0) ? std::log(static_cast<double>(n)) : log_n1;
        acc_ += (w * ln1) * cfg_.f(prod * n);
      }
      return;
    }
    for (u64 n = (depth == 0 ? 2 : 1); n <= bound; ++n) {
      const double ln1 = (depth == 0) ? std::log(static_cast<double>(n)) : log_n1;
      walk_n(depth + 1, prod * n, weight, ln1);
    }
  }

  void walk_residual(unsigned depth, u64 prod, i64 weight) {
    if (depth == cfg_.r) {
      const u64 bound = cfg_.x / prod;
      tick(bound);
      for (u64 m = 2; m <= bound; ++m) {
        const double lm = table_.mangoldt(m);
        if (lm != 0.0) acc_ += (static_cast<double>(weight) * lm) * cfg_.f(prod * m);
      }
      return;
    }
    for (u64 n = cfg_.u1 + 1; prod * n <= cfg_.x; ++n) {
      const int l = lambda_[n];
      if (l != 0) walk_residual(depth + 1, prod * n, weight * l);
    }
  }

  const HBConfig& cfg_;
  const ArithTable& table_;
  u64 cap_;
  unsigned k_ = 0;
  u64 visits_ = 0;
  std::vector<int> lambda_;
  CompensatedComplexSum acc_;
};

u64 binomial(unsigned n, unsigned k) {
  u64 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HBDecomposition hb_decompose(const HBConfig& cfg, const ArithTable& table, u64 work_cap) {
  cfg.validate();
  table.require(cfg.x);

  HBDecomposition out;
  CompensatedComplexSum lhs;
  const auto powers = table.prime_powers();
  const auto logs = table.prime_power_logs();
  for (std::size_t i = 0, n = table.prime_power_count(cfg.x); i < n; ++i) lhs += logs[i] * cfg.f(powers[i]);
  out.lhs = lhs.value();

  Enumerator en(cfg, table, work_cap);
  for (unsigned k = 1; k <= cfg.r; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    out.main_terms.push_back(sign * static_cast<double>(binomial(cfg.r, k)) * en.main_group(k));
  }
  const double rsign = (cfg.r % 2 == 0) ? 1.0 : -1.0;
  out.residual = rsign * en.residual_sum();
  out.visits = en.visits();
  out.discrepancy = std::abs(out.lhs - out.rhs());
  return out;
}

HBConfig hb_paper_config(u64 y, const Character& chi) {
  if (y < 16) throw InvalidArgument("hb_paper_config: y must be at least 16");
  HBConfig cfg;
  cfg.x = y;
  cfg.u1 = iroot(y, 4);
  cfg.r = 4;
  cfg.f = TestFunction::sample("chi:" + std::to_string(chi.modulus()) + ":" + std::to_string(chi.index()), y,
                               [&](u64 n) { return chi.value(n); });
  return cfg;
}

}  // namespace primesums
