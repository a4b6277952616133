#include "normgcd/baselines.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "normgcd/extgcd.hpp"

namespace normgcd {
namespace {

std::uint64_t tz(std::uint64_t x) { return static_cast<std::uint64_t>(std::countr_zero(x)); }
std::uint64_t tz(const BigInt& x) { return trailing_zeros(x); }

void require_nonnegative(const BigInt& a, const BigInt& b) {
  if (sign(a) < 0 || sign(b) < 0) throw std::invalid_argument("gcd baselines take nonnegative operands");
}

template <class Nat>
Nat euclid_kernel(Nat r1, Nat r2, std::size_t& iterations) {
  using std::swap;
  iterations = 0;
  while (r1 > 0) {
    r2 %= r1;
    swap(r1, r2);
    ++iterations;
  }
  return r2;
}

// Subtract-and-halve loop on r1 <= r2, both odd (or r1 = 0). Only r2 is ever halved.
template <class Nat>
Nat binary_loop(Nat r1, Nat r2, std::size_t& iterations) {
  using std::swap;
  while (r1 > 0) {
    r2 -= r1;
    if (r2 != 0) r2 >>= tz(r2);
    if (r2 < r1) swap(r1, r2);
    ++iterations;
  }
  return r2;
}

template <class Nat>
std::uint64_t strip_common_twos(Nat& a, Nat& b) {
  const std::uint64_t common = std::min(tz(a), tz(b));
  a >>= common;
  b >>= common;
  return common;
}

// Once the common power of two is gone the gcd is odd, so the leftover twos of either
// operand can be dropped. Without this an even smaller operand makes every r2 - r1 odd
// and the loop degrades to one subtraction per unit of quotient.
template <class Nat>
void make_odd_and_order(Nat& r1, Nat& r2) {
  using std::swap;
  if (r1 != 0) r1 >>= tz(r1);
  if (r2 != 0) r2 >>= tz(r2);
  if (r2 < r1) swap(r1, r2);
}

template <class Nat>
Nat binary_kernel(Nat a, Nat b, std::size_t& iterations) {
  iterations = 0;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t common = strip_common_twos(a, b);
  make_odd_and_order(a, b);
  Nat g = binary_loop(std::move(a), std::move(b), iterations);
  g <<= common;
  return g;
}

template <class Nat>
Nat mixed_kernel(Nat a, Nat b, std::size_t& iterations) {
  using std::swap;
  iterations = 0;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t common = strip_common_twos(a, b);
  if (b < a) swap(a, b);
  // Single Euclidean division: (r1, r2) <- (r2 mod r1, r1).
  b %= a;
  swap(a, b);
  iterations = 1;
  // The binary stage's own common-power stripping is a no-op here (the gcd is already
  // odd), so 2^common is applied exactly once. r1 = 0 falls straight through the loop.
  make_odd_and_order(a, b);
  Nat g = binary_loop(std::move(a), std::move(b), iterations);
  g <<= common;
  return g;
}

}  // namespace

std::string_view name_of(GcdAlgorithmId id) {
  switch (id) {
    case GcdAlgorithmId::euclid: return "euclid";
    case GcdAlgorithmId::binary: return "binary";
    case GcdAlgorithmId::mixed: return "mixed";
    case GcdAlgorithmId::wwl2: return "wwl2";
  }
  throw std::invalid_argument("unknown gcd algorithm id");
}

std::optional<GcdAlgorithmId> parse_algorithm(std::string_view name) {
  for (GcdAlgorithmId id : kAllAlgorithms) {
    if (name_of(id) == name) return id;
  }
  return std::nullopt;
}

BigInt euclid_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations) {
  require_nonnegative(a, b);
  return euclid_kernel<BigInt>(a, b, iterations);
}

BigInt binary_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations) {
  require_nonnegative(a, b);
  return binary_kernel<BigInt>(a, b, iterations);
}

BigInt mixed_euclid_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations) {
  require_nonnegative(a, b);
  return mixed_kernel<BigInt>(a, b, iterations);
}

BigInt euclid_gcd(const BigInt& a, const BigInt& b) {
  std::size_t iterations = 0;
  return euclid_gcd(a, b, iterations);
}

BigInt binary_gcd(const BigInt& a, const BigInt& b) {
  std::size_t iterations = 0;
  return binary_gcd(a, b, iterations);
}

BigInt mixed_euclid_gcd(const BigInt& a, const BigInt& b) {
  std::size_t iterations = 0;
  return mixed_euclid_gcd(a, b, iterations);
}

std::uint64_t euclid_gcd_u64(std::uint64_t a, std::uint64_t b, std::size_t& iterations) {
  return euclid_kernel(a, b, iterations);
}

std::uint64_t binary_gcd_u64(std::uint64_t a, std::uint64_t b, std::size_t& iterations) {
  return binary_kernel(a, b, iterations);
}

std::uint64_t mixed_euclid_gcd_u64(std::uint64_t a, std::uint64_t b, std::size_t& iterations) {
  return mixed_kernel(a, b, iterations);
}

BigInt gcd_with(GcdAlgorithmId id, const BigInt& a, const BigInt& b, std::size_t& iterations) {
  switch (id) {
    case GcdAlgorithmId::euclid: return euclid_gcd(a, b, iterations);
    case GcdAlgorithmId::binary: return binary_gcd(a, b, iterations);
    case GcdAlgorithmId::mixed: return mixed_euclid_gcd(a, b, iterations);
    case GcdAlgorithmId::wwl2: {
      require_nonnegative(a, b);
      return ext_gcd(a, b, iterations).g;
    }
  }
  throw std::invalid_argument("unknown gcd algorithm id");
}

std::uint64_t gcd_with_u64(GcdAlgorithmId id, std::uint64_t a, std::uint64_t b, std::size_t& iterations) {
  switch (id) {
    case GcdAlgorithmId::euclid: return euclid_gcd_u64(a, b, iterations);
    case GcdAlgorithmId::binary: return binary_gcd_u64(a, b, iterations);
    case GcdAlgorithmId::mixed: return mixed_euclid_gcd_u64(a, b, iterations);
    case GcdAlgorithmId::wwl2: {
      const Bezout64 r = ext_gcd_u64(a, b);
      iterations = r.iterations;
      return r.g;
    }
  }
  throw std::invalid_argument("unknown gcd algorithm id");
}

}  // namespace normgcd
