#include "normgcd/extgcd.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "normgcd/detail/descent.hpp"

namespace normgcd {
namespace {

void require_odd_positive(const BigInt& a, const char* where) {
  if (sign(a) <= 0 || is_even(a)) {
    throw std::invalid_argument(std::string(where) + ": first operand must be odd and positive, got " +
                                to_string(a));
  }
}

void require_positive(const BigInt& x, const char* where) {
  if (sign(x) <= 0) {
    throw std::invalid_argument(std::string(where) + ": operand must be positive, got " + to_string(x));
  }
}

void require_normalizer_range(const BigInt& a, const BigInt& v, const char* where) {
  if (sign(v) < 0 || v >= a) {
    throw std::invalid_argument(std::string(where) + ": normalizer " + to_string(v) + " outside [0, a-1]");
  }
}

struct TraceRecorder {
  DescentTrace* trace;
  void operator()(const BigInt& c1, const BigInt& c2) const {
    if (trace != nullptr) trace->states.emplace_back(c1, c2);
  }
};

// Preconditions already checked.
BezoutTriple run_wwl2(const BigInt& a, const BigInt& b, std::size_t& iterations, DescentTrace* trace) {
  if (a == 1) {
    iterations = 0;
    if (trace != nullptr) trace->iterations = 0;
    return {1, 0, 1};
  }
  auto result = detail::general_descent<BigInt, BigInt>(a, b, TraceRecorder{trace});
  iterations = result.iterations;
  if (trace != nullptr) trace->iterations = result.iterations;
  return {std::move(result.u), std::move(result.v), std::move(result.c)};
}

BezoutPair run_wwl1(const BigInt& a, const BigInt& b, DescentTrace* trace) {
  require_odd_positive(a, "wwl1");
  require_positive(b, "wwl1");
  if (a == 1) {
    if (trace != nullptr) trace->iterations = 0;
    return {1, 0};
  }

  BigInt q;
  BigInt r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());

  BigInt c1 = r;
  BigInt c2 = a - c1;
  BigInt v1 = 1;
  BigInt v2 = a - 1;
  const BigInt half_a = detail::half_ceil(a);
  detail::strip_twos_normalizer(half_a, c1, v1);
  detail::strip_twos_normalizer(half_a, c2, v2);
  if (c2 < c1) {
    swap(c1, c2);
    swap(v1, v2);
  }
  TraceRecorder record{trace};
  record(c1, c2);

  std::size_t iterations = 0;
  while (c1 > 1) {
    c2 -= c1;
    if (v2 < v1) {
      v2 += a;
    }
    v2 -= v1;
    detail::strip_twos_normalizer(half_a, c2, v2);
    if (c2 < c1) {
      swap(c1, c2);
      swap(v1, v2);
    }
    ++iterations;
    record(c1, c2);
  }
  if (trace != nullptr) trace->iterations = iterations;
  if (c1 != 1) {
    throw std::invalid_argument("wwl1: operands " + to_string(a) + " and " + to_string(b) + " are not coprime");
  }

  // b = a*q + r, so (1 - v*b)/a = -v*q + (1 - v*r)/a with the smaller division.
  BigInt u = div_exact(1 - v1 * r, a);
  u -= v1 * q;
  return {std::move(u), std::move(v1)};
}

}  // namespace

NormalState normalize_solution(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v) {
  require_positive(a, "normalize_solution");
  BigInt c = u * a + v * b;
  BigInt v_normal = floor_mod(v, a);
  BigInt shift = div_exact(v - v_normal, a);
  BigInt u_normal = u + shift * b;
  return {std::move(u_normal), std::move(v_normal), std::move(c)};
}

HalvedNormalizer div1(const BigInt& a, const BigInt& c, const BigInt& v) {
  require_odd_positive(a, "div1");
  if (sign(c) < 0) throw std::invalid_argument("div1: c must be nonnegative");
  require_normalizer_range(a, v, "div1");
  HalvedNormalizer out{c, v};
  detail::strip_twos_normalizer(detail::half_ceil(a), out.c, out.v);
  return out;
}

NormalState div2(const BigInt& a, const BigInt& b, NormalState state) {
  require_odd_positive(a, "div2");
  if (sign(state.c) < 0) throw std::invalid_argument("div2: c must be nonnegative");
  require_normalizer_range(a, state.v, "div2");
  detail::strip_twos_state(detail::half_ceil(a), b, state.u, state.v, state.c);
  return state;
}

BezoutPair wwl1(const BigInt& a, const BigInt& b) { return run_wwl1(a, b, nullptr); }

BezoutPair wwl1(const BigInt& a, const BigInt& b, DescentTrace& trace) {
  trace = {};
  return run_wwl1(a, b, &trace);
}

BezoutTriple wwl2(const BigInt& a, const BigInt& b) {
  require_odd_positive(a, "wwl2");
  require_positive(b, "wwl2");
  std::size_t iterations = 0;
  return run_wwl2(a, b, iterations, nullptr);
}

BezoutTriple wwl2(const BigInt& a, const BigInt& b, DescentTrace& trace) {
  require_odd_positive(a, "wwl2");
  require_positive(b, "wwl2");
  trace = {};
  std::size_t iterations = 0;
  return run_wwl2(a, b, iterations, &trace);
}

BezoutTriple ext_gcd(const BigInt& a, const BigInt& b, std::size_t& iterations) {
  iterations = 0;
  if (is_zero(a) && is_zero(b)) return {0, 0, 0};
  if (is_zero(a)) return {0, sign(b), abs(b)};
  if (is_zero(b)) return {sign(a), 0, abs(a)};

  BigInt x = abs(a);
  BigInt y = abs(b);
  const auto common = std::min(trailing_zeros(x), trailing_zeros(y));
  x >>= common;
  y >>= common;

  BezoutTriple t;
  if (is_odd(x)) {
    t = run_wwl2(x, y, iterations, nullptr);
  } else {
    BezoutTriple swapped = run_wwl2(y, x, iterations, nullptr);
    t = {std::move(swapped.v), std::move(swapped.u), std::move(swapped.g)};
  }
  t.g <<= common;
  if (sign(a) < 0) t.u = -t.u;
  if (sign(b) < 0) t.v = -t.v;
  return t;
}

BezoutTriple ext_gcd(const BigInt& a, const BigInt& b) {
  std::size_t iterations = 0;
  return ext_gcd(a, b, iterations);
}

Normalizer normalizer_of(const BigInt& a, const BigInt& b, const BigInt& c) {
  require_positive(a, "normalizer_of");
  require_positive(b, "normalizer_of");
  const BezoutTriple base = ext_gcd(a, b);
  if (!mpz_divisible_p(c.get_mpz_t(), base.g.get_mpz_t())) {
    throw NotRepresentable("gcd(" + to_string(a) + ", " + to_string(b) + ") = " + to_string(base.g) +
                           " does not divide " + to_string(c));
  }
  BigInt v = floor_mod(div_exact(c, base.g) * base.v, a);
  BigInt t = floor_mod(-v, a);
  return {std::move(v), std::move(t)};
}

BezoutTriple canonical_min_v(const BigInt& a, const BigInt& b, const BezoutTriple& t) {
  require_positive(a, "canonical_min_v");
  if (is_zero(t.g)) throw std::invalid_argument("canonical_min_v: gcd must be nonzero");
  if (t.u * a + t.v * b != t.g) throw std::invalid_argument("canonical_min_v: triple does not satisfy u*a + v*b = g");
  const BigInt period = div_exact(a, t.g);
  BigInt v = floor_mod(t.v, period);
  BigInt u = div_exact(t.g - v * b, a);
  return {std::move(u), std::move(v), t.g};
}

Bezout64 ext_gcd_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) return {};
  if (a == 0) return {0, 1, b, 0};
  if (b == 0) return {1, 0, a, 0};

  const int common = std::min(std::countr_zero(a), std::countr_zero(b));
  a >>= common;
  b >>= common;

  const bool swapped = (a & 1U) == 0;
  if (swapped) std::swap(a, b);

  Bezout64 out;
  if (a == 1) {
    out = {1, 0, 1, 0};
  } else {
    const auto r = detail::general_descent<std::uint64_t, __int128>(a, b);
    out = {r.u, static_cast<__int128>(r.v), r.c, r.iterations};
  }
  if (swapped) std::swap(out.u, out.v);
  out.g <<= common;
  return out;
}

}  // namespace normgcd
