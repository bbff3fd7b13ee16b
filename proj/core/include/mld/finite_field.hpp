#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mld/integer.hpp"

namespace mld {

__extension__ using Wide = unsigned __int128;

/// Arithmetic in F_p for a prime p < 2^62.
class PrimeField {
 public:
  /// Throws InputError unless p is a prime in [2, 2^62).
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws std::domain_error for 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Integer& a) const;

  std::uint64_t random(std::mt19937_64& rng) const;
  std::uint64_t random_nonzero(std::mt19937_64& rng) const;

 private:
  std::uint64_t p_;
};

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
using UniPoly = std::vector<std::uint64_t>;

/// Distinct roots in F_p, sorted ascending. The zero polynomial is rejected.
std::vector<std::uint64_t> roots(const PrimeField& f, UniPoly poly, std::mt19937_64& rng);

}  // namespace mld
