#pragma once

// Test-only generators and brute-force helpers. Nothing here touches the descent kernels.

#include <cstdint>
#include <random>

#include "normgcd/bigint.hpp"

namespace normgcd::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'0001ULL);
  return engine;
}

/// Uniform in [lo, hi].
inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline BigInt big_uniform(std::uint64_t lo, std::uint64_t hi) { return from_u64(uniform(lo, hi)); }

inline BigInt odd_in(std::uint64_t lo, std::uint64_t hi) {
  for (;;) {
    const std::uint64_t x = uniform(lo, hi);
    if (x & 1U) return from_u64(x);
  }
}

inline BigInt gmp_gcd(const BigInt& a, const BigInt& b) { return gcd(a, b); }

/// Odd a in [3, max_a] and b in [1, max_b] with gcd(a, b) = 1.
inline std::pair<BigInt, BigInt> coprime_odd_pair(std::uint64_t max_a, std::uint64_t max_b) {
  for (;;) {
    BigInt a = odd_in(3, max_a);
    BigInt b = big_uniform(1, max_b);
    if (gmp_gcd(a, b) == 1) return {a, b};
  }
}

}  // namespace normgcd::testing
