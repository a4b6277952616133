#pragma once

// Reference gcd algorithms the normalization solver is measured against: the
// classical Euclid loop, the binary (subtract-and-halve) loop, and the mixed variant
// that performs a single Euclidean division before switching to the binary loop.
//
// The binary loop only ever halves the larger operand, so both operands are made odd
// once the common power of two is removed.
//
// All of them take nonnegative inputs with gcd(x, 0) = x. The iteration counters
// count main-loop steps: mod steps for Euclid, subtract-halve steps for binary, and
// one plus the binary steps for mixed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "normgcd/bigint.hpp"

namespace normgcd {

enum class GcdAlgorithmId { euclid, binary, mixed, wwl2 };

inline constexpr std::array<GcdAlgorithmId, 4> kAllAlgorithms = {
    GcdAlgorithmId::euclid, GcdAlgorithmId::binary, GcdAlgorithmId::mixed, GcdAlgorithmId::wwl2};

std::string_view name_of(GcdAlgorithmId id);
std::optional<GcdAlgorithmId> parse_algorithm(std::string_view name);

BigInt euclid_gcd(const BigInt& a, const BigInt& b);
BigInt euclid_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations);
BigInt binary_gcd(const BigInt& a, const BigInt& b);
BigInt binary_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations);
BigInt mixed_euclid_gcd(const BigInt& a, const BigInt& b);
BigInt mixed_euclid_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations);

std::uint64_t euclid_gcd_u64(std::uint64_t a, std::uint64_t b, std::size_t& iterations);
std::uint64_t binary_gcd_u64(std::uint64_t a, std::uint64_t b, std::size_t& iterations);
std::uint64_t mixed_euclid_gcd_u64(std::uint64_t a, std::uint64_t b, std::size_t& iterations);

/// Dispatches to the named algorithm; wwl2 runs the full extended solver and reports its g.
BigInt gcd_with(GcdAlgorithmId id, const BigInt& a, const BigInt& b, std::size_t& iterations);
std::uint64_t gcd_with_u64(GcdAlgorithmId id, std::uint64_t a, std::uint64_t b, std::size_t& iterations);

}  // namespace normgcd
