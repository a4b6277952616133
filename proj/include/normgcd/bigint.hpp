#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace normgcd {

/// Arbitrary-precision signed integer used throughout the library.
using BigInt = mpz_class;

/// Parses a signed integer written in decimal or in 0x-prefixed hexadecimal.
/// A single leading '-' is accepted. Throws std::invalid_argument on anything else.
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& x);

inline bool is_even(const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
inline bool is_odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
inline bool is_zero(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) == 0; }
inline int sign(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

/// Number of trailing zero bits; x must be nonzero.
inline std::uint64_t trailing_zeros(const BigInt& x) { return mpz_scan1(x.get_mpz_t(), 0); }

/// x mod m in [0, |m|-1]; m must be nonzero.
BigInt floor_mod(const BigInt& x, const BigInt& m);

/// Exact division; the caller guarantees d | x.
BigInt div_exact(const BigInt& x, const BigInt& d);

bool fits_u64(const BigInt& x);
std::uint64_t to_u64(const BigInt& x);
BigInt from_u64(std::uint64_t x);
BigInt from_i128(__int128 x);

/// Uniform value in [2^(bits-1), 2^bits) drawn from raw 64-bit engine output, so the
/// sequence depends only on the engine state (no distribution objects involved).
BigInt random_with_bits(std::mt19937_64& rng, unsigned bits);

/// Uniform value in [0, 2^bits).
BigInt random_below_pow2(std::mt19937_64& rng, unsigned bits);

}  // namespace normgcd
