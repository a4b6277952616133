#pragma once

// Independent reference implementations used to cross-check the normalization solver.
// Nothing here calls into the descent kernels; the exhaustive check compares their
// results against ext_gcd.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normgcd/bigint.hpp"
#include "normgcd/extgcd.hpp"

namespace normgcd::oracle {

/// Smallest v in [0, a-1] with a | (c - v*b), by exhaustive scan; nullopt when none exists.
std::optional<BigInt> brute_normalizer(const BigInt& a, const BigInt& b, const BigInt& c);

/// Classical extended Euclid on |a|, |b|; returns some valid triple with g >= 0.
BezoutTriple reference_ext_gcd(const BigInt& a, const BigInt& b);

struct Failure {
  BigInt a;
  BigInt b;
  BigInt c;
  std::string expected;
  std::string actual;
  std::string check;
};

struct VerificationReport {
  std::size_t cases_checked = 0;
  std::vector<Failure> failures;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Whether ext_gcd(a, b) is expected to return v in [0, a-1]: a, b >= 1 and a still
/// odd after removing the power of two common to both operands.
bool expects_normal_v(const BigInt& a, const BigInt& b);

/// Checks every 1 <= a, b <= limit: the Bezout identity, g against reference_ext_gcd,
/// the v range, and for coprime pairs with odd a the exact v from brute_normalizer(a, b, 1).
VerificationReport exhaustive_verify(unsigned limit = 300);

std::string summarize(const VerificationReport& report, std::size_t max_failures_listed = 10);

}  // namespace normgcd::oracle
