#pragma once

// Width-generic descent kernels shared by the arbitrary-precision solver and the
// 64-bit fast path. `Nat` carries the nonnegative quantities (c, v, a, b) and `Int`
// the signed u-coordinate: (BigInt, BigInt) or (std::uint64_t, __int128).
//
// Loop values stay within v in [0, a-1], c in [0, a] and u in [-2b, 1], so the
// 64-bit instantiation cannot overflow its 128-bit u.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "normgcd/bigint.hpp"

namespace normgcd::detail {

inline bool even(std::uint64_t x) { return (x & 1U) == 0; }
inline bool even(const BigInt& x) { return is_even(x); }

inline __int128 widen(std::uint64_t x) { return static_cast<__int128>(x); }
inline const BigInt& widen(const BigInt& x) { return x; }

/// (a + 1) / 2 for odd a. For odd v, (v + a) / 2 = (v >> 1) + (a + 1) / 2, which never
/// forms v + a.
template <class Nat>
Nat half_ceil(const Nat& a) {
  Nat h = a >> 1;
  h += 1;
  return h;
}

/// Strips factors of two from c while keeping v the normalizer of c.
template <class Nat>
void strip_twos_normalizer(const Nat& half_a, Nat& c, Nat& v) {
  if (c == 0) return;
  while (even(c)) {
    c >>= 1;
    const bool odd_v = !even(v);
    v >>= 1;
    if (odd_v) v += half_a;
  }
}

/// Same as strip_twos_normalizer but carries the u-coordinate along.
template <class Nat, class Int>
void strip_twos_state(const Nat& half_a, const Int& b, Int& u, Nat& v, Nat& c) {
  if (c == 0) return;
  while (even(c)) {
    c >>= 1;
    const bool odd_v = !even(v);
    v >>= 1;
    if (odd_v) {
      v += half_a;
      u -= b;
    }
    u >>= 1;
  }
}

template <class Nat, class Int>
struct DescentResult {
  Int u;
  Nat v;
  Nat c;
  std::size_t iterations = 0;
};

struct IgnoreStates {
  template <class Nat>
  void operator()(const Nat&, const Nat&) const {}
};

/// Two normal states (u_i, v_i, c_i) descend by subtract-and-halve until c_1 = 0.
/// Requires a odd, a >= 3, b >= 1. `observe(c1, c2)` sees the ordered pair after
/// initialization and after every iteration.
template <class Nat, class Int, class Observer = IgnoreStates>
DescentResult<Nat, Int> general_descent(const Nat& a, const Nat& b, Observer&& observe = {}) {
  using std::swap;
  const auto& b_wide = widen(b);
  const Nat half_a = half_ceil(a);

  Nat q = b / a;
  Nat c1 = b - q * a;
  Nat c2 = a - c1;
  Nat v1 = 1;
  Nat v2 = a - 1;
  Int u1 = widen(q);
  u1 = -u1;
  Int u2 = 1;
  u2 -= u1;
  u2 -= b_wide;

  strip_twos_state(half_a, b_wide, u1, v1, c1);
  strip_twos_state(half_a, b_wide, u2, v2, c2);
  if (c2 < c1) {
    swap(c1, c2);
    swap(v1, v2);
    swap(u1, u2);
  }
  observe(c1, c2);

  std::size_t iterations = 0;
  while (c1 > 0) {
    c2 -= c1;
    if (v2 < v1) {
      // Exact result lies in [0, a-1], so wrap-around in a fixed-width Nat cancels.
      v2 += a;
      v2 -= v1;
      u2 -= u1;
      u2 -= b_wide;
    } else {
      v2 -= v1;
      u2 -= u1;
    }
    strip_twos_state(half_a, b_wide, u2, v2, c2);
    if (c2 < c1) {
      swap(c1, c2);
      swap(v1, v2);
      swap(u1, u2);
    }
    ++iterations;
    observe(c1, c2);
  }
  return {std::move(u2), std::move(v2), std::move(c2), iterations};
}

}  // namespace normgcd::detail
