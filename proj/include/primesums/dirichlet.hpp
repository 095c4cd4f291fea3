#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "primesums/arith.hpp"
#include "primesums/numeric.hpp"

namespace primesums {

/// One cyclic factor of (Z/q)^*: a generator of the prime-power component it lives in.
struct CyclicFactor {
  u64 prime;
  u64 prime_power;  ///< modulus of the CRT component, p^k
  u64 generator;    ///< generator residue mod prime_power
  u64 lifted;       ///< generator lifted to mod q (1 on the other components)
  u64 order;
};

namespace detail {
struct GroupData;
}

class Character;

/// The full group of Dirichlet characters mod q.
///
/// Characters are addressed by their exponent vector over the unit-group basis
/// (powers of 2 use the {-1, 5} pair, odd prime powers their smallest primitive
/// root). Index order is lexicographic in the exponent vector with the first
/// factor most significant, so the principal character is index 0.
class CharacterGroup {
 public:
  /// Throws InvalidArgument when q == 0.
  explicit CharacterGroup(u64 q);

  u64 modulus() const noexcept;
  /// phi(q), the number of characters.
  u64 size() const noexcept;
  /// Exponent of the group; every character value is an exponent-th root of unity.
  u64 exponent() const noexcept;
  std::span<const CyclicFactor> factors() const noexcept;

  Character character(u64 index) const;
  Character principal() const;
  Character from_exponents(std::span<const u64> exponents) const;
  u64 index_of(std::span<const u64> exponents) const;
  std::vector<u64> exponents_of(u64 index) const;

  /// Discrete logarithms of n over the basis; empty when gcd(n, q) > 1.
  std::vector<u64> log(u64 n) const;

  /// Builds every character (phi(q) value tables of length q each).
  std::vector<Character> all() const;
  /// Indices of the primitive characters.
  std::vector<u64> primitive_indices() const;

 private:
  friend class Character;
  explicit CharacterGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::GroupData> data_;
};

/// A Dirichlet character with its cached value table chi(n), n = 0..q-1.
class Character {
 public:
  u64 modulus() const noexcept { return modulus_; }
  u64 index() const noexcept { return index_; }
  std::span<const u64> exponents() const noexcept { return exponents_; }

  cplx operator()(i64 n) const { return values_[reduce(n, modulus_)]; }
  cplx value(u64 n) const { return values_[n % modulus_]; }
  std::span<const cplx> values() const noexcept { return values_; }

  /// chi(n) = e(phase(n) / phase_denominator()); -1 when gcd(n, q) > 1.
  i64 phase(u64 n) const { return phase_[n % modulus_]; }
  u64 phase_denominator() const noexcept { return denominator_; }

  /// Smallest k >= 1 with chi^k principal.
  u64 order() const;
  bool is_principal() const;
  bool is_real() const { return order() <= 2; }

  Character conj() const;
  Character operator*(const Character& other) const;

  CharacterGroup group() const;

 private:
  friend class CharacterGroup;
  Character() = default;

  std::shared_ptr<const detail::GroupData> group_;
  u64 modulus_ = 1;
  u64 index_ = 0;
  u64 denominator_ = 1;
  std::vector<u64> exponents_;
  std::vector<i64> phase_;
  std::vector<cplx> values_;
};

/// Smallest d | q such that chi is induced by a character mod d.
u64 conductor(const Character& chi);
bool is_primitive(const Character& chi);

/// The character mod conductor(chi) inducing chi.
Character primitive_inducing(const Character& chi);

/// tau(chi) = sum_{h=1}^{q} chi(h) e(h/q), by direct summation.
cplx gauss_sum(const Character& chi);

/// sum_{m=1}^{p} e(m^2/p), by direct summation.
cplx quadratic_gauss_sum(u64 p);

/// Index parameters of a character mod an odd prime power p^beta.
///
/// a is the smallest primitive root, a^(p-1) = 1 + r p with r reduced mod p, and
/// chi(a^k) = e(c k / phi(p^beta)) with 0 < c <= phi(p^beta).
struct PrimePowerIndex {
  u64 p = 0;
  unsigned beta = 0;
  u64 a = 0;
  u64 c = 0;
  u64 r = 0;

  u64 modulus() const { return ipow(p, beta); }
  u64 phi() const { return modulus() / p * (p - 1); }
};

/// Throws InvalidArgument unless chi's modulus is an odd prime power.
PrimePowerIndex char_index(const Character& chi);

/// Splits an odd prime power q = p^beta; nullopt otherwise.
std::optional<std::pair<u64, unsigned>> odd_prime_power(u64 q);

}  // namespace primesums
