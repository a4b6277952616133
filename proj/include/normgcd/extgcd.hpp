#pragma once

// Extended gcd by normalization.
//
// For a >= 1 the equation u*a + v*b = c (solvable when gcd(a, b) | c) has exactly one
// solution per residue class of v modulo a/gcd(a, b); the solution with v in [0, a-1]
// is the "normal" one and its v is the normalizer of c. The solvers below keep two
// normal solutions and shrink their right-hand sides with subtract-and-halve steps
// until one of them reaches gcd(a, b).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "normgcd/bigint.hpp"

namespace normgcd {

/// u*a + v*b = g with g = gcd(a, b) >= 0.
struct BezoutTriple {
  BigInt u;
  BigInt v;
  BigInt g;

  friend bool operator==(const BezoutTriple&, const BezoutTriple&) = default;
};

struct BezoutPair {
  BigInt u;
  BigInt v;

  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

/// (u, v, c) with u*a + v*b = c and 0 <= v <= a-1, for a fixed odd a and b.
struct NormalState {
  BigInt u;
  BigInt v;
  BigInt c;

  friend bool operator==(const NormalState&, const NormalState&) = default;
};

/// Normalizer v and co-normalizer t of some right-hand side c, both in [0, a-1].
struct Normalizer {
  BigInt v;
  BigInt t;

  friend bool operator==(const Normalizer&, const Normalizer&) = default;
};

/// Right-hand side and its normalizer after stripping factors of two.
struct HalvedNormalizer {
  BigInt c;
  BigInt v;

  friend bool operator==(const HalvedNormalizer&, const HalvedNormalizer&) = default;
};

/// Thrown when gcd(a, b) does not divide the requested right-hand side.
class NotRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ordered (c1, c2) pairs seen by a descent, after initialization and after each
/// loop iteration.
struct DescentTrace {
  std::vector<std::pair<BigInt, BigInt>> states;
  std::size_t iterations = 0;
};

/// Moves (u, v) along the solution family {(u + k*b, v - k*a)} so that v lands in [0, a-1].
NormalState normalize_solution(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v);

/// Divides c by two as often as possible, updating the normalizer v alongside.
/// c = 0 is returned unchanged.
HalvedNormalizer div1(const BigInt& a, const BigInt& c, const BigInt& v);

/// Three-variable variant of div1 that also carries the u-coordinate.
NormalState div2(const BigInt& a, const BigInt& b, NormalState state);

/// The unique (u, v) with u*a + v*b = 1 and v in [0, a-1]. Requires a odd, a >= 1,
/// b >= 1 and gcd(a, b) = 1.
BezoutPair wwl1(const BigInt& a, const BigInt& b);
BezoutPair wwl1(const BigInt& a, const BigInt& b, DescentTrace& trace);

/// (u, v, gcd(a, b)) with v in [0, a-1]. Requires a odd, a >= 1, b >= 1.
BezoutTriple wwl2(const BigInt& a, const BigInt& b);
BezoutTriple wwl2(const BigInt& a, const BigInt& b, DescentTrace& trace);

/// Total extended gcd over signed inputs: strips the common power of two, moves an odd
/// operand to the front and runs wwl2. ext_gcd(0, 0) = (0, 0, 0).
BezoutTriple ext_gcd(const BigInt& a, const BigInt& b);
BezoutTriple ext_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations);

/// Normalizer of c as the linear map c -> (c/g) * v_g mod a, with co-normalizer (-v_c) mod a.
/// Throws NotRepresentable when gcd(a, b) does not divide c.
Normalizer normalizer_of(const BigInt& a, const BigInt& b, const BigInt& c);

/// The representative of t's solution family with the smallest nonnegative v.
BezoutTriple canonical_min_v(const BigInt& a, const BigInt& b, const BezoutTriple& t);

/// 64-bit fast path of ext_gcd for nonnegative inputs. Coefficients are 128-bit since
/// |u| may reach b.
struct Bezout64 {
  __int128 u = 0;
  __int128 v = 0;
  std::uint64_t g = 0;
  std::size_t iterations = 0;
};

Bezout64 ext_gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace normgcd
