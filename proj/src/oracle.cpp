#include "normgcd/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace normgcd::oracle {

std::optional<BigInt> brute_normalizer(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (sign(a) <= 0) throw std::invalid_argument("brute_normalizer: a must be positive");
  // residue tracks (c - v*b) mod a as v walks 0, 1, ..., a-1
  BigInt residue = floor_mod(c, a);
  const BigInt step = floor_mod(b, a);
  for (BigInt v = 0; v < a; ++v) {
    if (is_zero(residue)) return v;
    residue -= step;
    if (sign(residue) < 0) residue += a;
  }
  return std::nullopt;
}

BezoutTriple reference_ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = abs(a);
  BigInt r = abs(b);
  BigInt old_s = 1;
  BigInt s = 0;
  BigInt old_t = 0;
  BigInt t = 1;
  while (!is_zero(r)) {
    const BigInt q = old_r / r;
    BigInt next = old_r - q * r;
    old_r = r;
    r = next;
    next = old_s - q * s;
    old_s = s;
    s = next;
    next = old_t - q * t;
    old_t = t;
    t = next;
  }
  if (is_zero(old_r)) return {0, 0, 0};
  if (sign(a) < 0) old_s = -old_s;
  if (sign(b) < 0) old_t = -old_t;
  return {old_s, old_t, old_r};
}

bool expects_normal_v(const BigInt& a, const BigInt& b) {
  if (sign(a) <= 0 || sign(b) <= 0) return false;
  return trailing_zeros(a) <= trailing_zeros(b);
}

VerificationReport exhaustive_verify(unsigned limit) {
  if (limit == 0) throw std::invalid_argument("exhaustive_verify: limit must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  auto fail = [&](const BigInt& a, const BigInt& b, const BigInt& c, std::string expected, std::string actual,
                  std::string check) {
    report.failures.push_back({a, b, c, std::move(expected), std::move(actual), std::move(check)});
  };

  for (unsigned ai = 1; ai <= limit; ++ai) {
    const BigInt a = ai;
    for (unsigned bi = 1; bi <= limit; ++bi) {
      const BigInt b = bi;
      ++report.cases_checked;
      const BezoutTriple got = ext_gcd(a, b);
      const BezoutTriple ref = reference_ext_gcd(a, b);
      const BigInt lhs = got.u * a + got.v * b;
      if (lhs != got.g) fail(a, b, got.g, to_string(got.g), to_string(lhs), "identity");
      if (got.g != ref.g) fail(a, b, 0, to_string(ref.g), to_string(got.g), "gcd");
      if (expects_normal_v(a, b) && (sign(got.v) < 0 || got.v >= a)) {
        fail(a, b, got.g, "v in [0, a-1]", to_string(got.v), "range");
      }
      if (is_odd(a) && ref.g == 1) {
        const std::optional<BigInt> expected = brute_normalizer(a, b, 1);
        if (!expected || *expected != got.v) {
          fail(a, b, 1, expected ? to_string(*expected) : "none", to_string(got.v), "normalizer");
        }
      }
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::string summarize(const VerificationReport& report, std::size_t max_failures_listed) {
  std::ostringstream out;
  out << "cases " << report.cases_checked << " failures " << report.failures.size() << " elapsed_ms "
      << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count() << ' '
      << (report.passed() ? "PASS" : "FAIL") << '\n';
  const std::size_t shown = std::min(max_failures_listed, report.failures.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const Failure& f = report.failures[i];
    out << "  " << f.check << ": a=" << f.a << " b=" << f.b << " c=" << f.c << " expected=" << f.expected
        << " actual=" << f.actual << '\n';
  }
  return out.str();
}

}  // namespace normgcd::oracle
