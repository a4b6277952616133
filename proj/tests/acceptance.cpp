// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "normgcd/baselines.hpp"
#include "normgcd/bench.hpp"
#include "normgcd/bigint.hpp"
#include "normgcd/cli.hpp"
#include "normgcd/extgcd.hpp"
#include "normgcd/oracle.hpp"

using namespace normgcd;

namespace {

std::mt19937_64 engine(0xacce'9700ULL);

std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine);
}

BigInt big_below(const BigInt& bound) {
  // uniform in [0, bound) by rejection on the bit length of bound
  const auto bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    BigInt x = random_below_pow2(engine, bits);
    if (x < bound) return x;
  }
}

BigInt odd_at_least_3(unsigned bits) {
  for (;;) {
    BigInt a = random_with_bits(engine, bits);
    mpz_setbit(a.get_mpz_t(), 0);
    if (a >= 3) return a;
  }
}

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string triple_text(const BigInt& a, const BigInt& b, const BezoutTriple& t) {
  return "(" + to_string(a) + ", " + to_string(b) + ") -> " + to_string(t.u) + " " + to_string(t.v) + " " +
         to_string(t.g);
}

Outcome exhaustive_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  const oracle::VerificationReport report = oracle::exhaustive_verify(300);
  const double elapsed = seconds_since(start);
  o.checked = report.cases_checked;
  if (report.cases_checked != 90000) o.fail("expected 90000 cases, got " + std::to_string(report.cases_checked));
  if (!report.passed()) o.fail(oracle::summarize(report, 3));
  if (elapsed >= 10.0) o.fail("took " + std::to_string(elapsed) + " s");
  o.detail = o.ok ? "90000 pairs in " + std::to_string(elapsed) + " s" : o.detail;
  return o;
}

Outcome coprime_uniqueness() {
  Outcome o;
  for (long a = 1; a <= 300; a += 2) {
    for (long b = 1; b <= 300; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++o.checked;
      const BezoutPair p = wwl1(a, b);
      const auto brute = oracle::brute_normalizer(a, b, 1);
      if (!brute || p.v != *brute || p.u * a + p.v * b != 1) {
        o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " wwl1 v=" + to_string(p.v));
      }
    }
  }
  return o;
}

Outcome normalizer_algebra() {
  Outcome o;
  constexpr int kInstances = 1000;
  auto random_multiple = [](const BigInt& g, const BigInt& range) {
    BigInt k = big_below(range);
    if (uniform(0, 1)) k = -k;
    return BigInt(k * g);
  };

  for (int i = 0; i < kInstances; ++i) {
    const BigInt a = odd_at_least_3(static_cast<unsigned>(uniform(2, 128)));
    const BigInt b = random_with_bits(engine, static_cast<unsigned>(uniform(1, 128)));
    const BigInt g = gcd(a, b);
    const BigInt c = random_multiple(g, a * b);
    const BigInt c2 = random_multiple(g, a * b);
    const BigInt k = random_multiple(1, a);
    const BigInt vc = normalizer_of(a, b, c).v;
    const BigInt vc2 = normalizer_of(a, b, c2).v;
    const std::string where = " at a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);

    o.checked += 4;
    if (floor_mod(normalizer_of(a, b, c + c2).v - vc - vc2, a) != 0) o.fail("additivity" + where);
    if (floor_mod(normalizer_of(a, b, k * c).v - k * vc, a) != 0) o.fail("multiplicativity" + where);
    if (floor_mod(normalizer_of(a, b, c - c2).v - (vc - vc2), a) != 0) o.fail("subtraction" + where);

    const BigInt even_c = 2 * c;
    const BigInt v_even = normalizer_of(a, b, even_c).v;
    const BigInt halved = is_even(v_even) ? BigInt(v_even / 2) : BigInt((v_even + a) / 2);
    if (normalizer_of(a, b, c).v != halved) o.fail("halving" + where);
  }

  int initial = 0;
  while (initial < kInstances) {
    const BigInt a = odd_at_least_3(static_cast<unsigned>(uniform(2, 128)));
    const BigInt b = random_with_bits(engine, static_cast<unsigned>(uniform(1, 128)));
    if (gcd(a, b) != 1 || floor_mod(b, a) == 0) continue;
    ++initial;
    ++o.checked;
    if (normalizer_of(a, b, floor_mod(b, a)).v != 1) o.fail("initial value of b mod a at a=" + to_string(a));
    if (normalizer_of(a, b, floor_mod(-b, a)).v != a - 1) o.fail("initial value of -b mod a at a=" + to_string(a));
  }
  return o;
}

Outcome u_bounds() {
  Outcome o;
  while (o.checked < 1000) {
    const BigInt a = from_u64(uniform(2, std::uint64_t{1} << 40));
    const BigInt b = from_u64(uniform(2, std::uint64_t{1} << 40));
    if (gcd(a, b) != 1) continue;
    ++o.checked;
    const BigInt c = big_below(a * b);
    const BigInt v = normalizer_of(a, b, c).v;
    const BigInt u = div_exact(c - v * b, a);
    if (u < -b + 1 || u > b - 1) o.fail("u_c out of range at a=" + to_string(a) + " b=" + to_string(b));
    const BigInt v1 = normalizer_of(a, b, 1).v;
    const BigInt u1 = div_exact(1 - v1 * b, a);
    if (u1 < -b + 1 || u1 > -1) o.fail("u_1 out of range at a=" + to_string(a) + " b=" + to_string(b));
  }
  return o;
}

Outcome termination_metric() {
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const BigInt a = odd_at_least_3(static_cast<unsigned>(uniform(2, 256)));
    const BigInt b = random_with_bits(engine, static_cast<unsigned>(uniform(1, 256)));
    DescentTrace trace;
    const BezoutTriple t = wwl2(a, b, trace);
    ++o.checked;
    const BigInt g = gcd(a, b);
    if (t.g != g || trace.states.empty()) o.fail("bad run at a=" + to_string(a) + " b=" + to_string(b));
    BigInt previous_sum = -1;
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      const auto& [c1, c2] = trace.states[k];
      const BigInt sum = c1 + c2;
      if (k > 0 && sum >= previous_sum) o.fail("c1 + c2 not decreasing at a=" + to_string(a) + " b=" + to_string(b));
      if (gcd(c1, c2) != g) o.fail("gcd(c1, c2) changed at a=" + to_string(a) + " b=" + to_string(b));
      previous_sum = sum;
    }
  }
  return o;
}

Outcome baseline_agreement() {
  Outcome o;
  auto compare = [&](const BigInt& a, const BigInt& b) {
    ++o.checked;
    const BigInt expected = gcd(a, b);
    for (const GcdAlgorithmId id : kAllAlgorithms) {
      std::size_t iterations = 0;
      if (gcd_with(id, a, b, iterations) != expected) {
        o.fail(std::string(name_of(id)) + " disagrees at a=" + to_string(a) + " b=" + to_string(b));
      }
      if (fits_u64(a) && fits_u64(b) &&
          gcd_with_u64(id, to_u64(a), to_u64(b), iterations) != to_u64(expected)) {
        o.fail(std::string(name_of(id)) + " (64-bit) disagrees at a=" + to_string(a) + " b=" + to_string(b));
      }
    }
  };
  for (int i = 0; i < 10000; ++i) compare(random_with_bits(engine, 64), random_with_bits(engine, 64));
  for (int i = 0; i < 100; ++i) compare(random_with_bits(engine, 1024), random_with_bits(engine, 1024));
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome benchmark_reproduction() {
  Outcome o;
  const std::vector<unsigned> sizes = {16, 32, 64, 256, 1024};
  const auto dir = std::filesystem::temp_directory_path() / ("normgcd_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto start = Clock::now();

  bench::CorpusSpec spec;
  if (!(bench::generate_corpus(spec) == bench::generate_corpus(spec))) o.fail("corpus not deterministic");
  bench::CorpusSpec other = spec;
  other.seed = spec.seed + 1;
  if (bench::generate_corpus(spec) == bench::generate_corpus(other)) o.fail("seed has no effect on the corpus");

  std::vector<bench::BenchCell> csv_cells;
  for (const char* format : {"csv", "json"}) {
    const auto path = dir / (std::string("report.") + format);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"bench", "--format", format, "--out", path.string()}, out, err);
    if (code != cli::kExitOk) {
      o.fail(std::string(format) + " run exited " + std::to_string(code) + ": " + err.str());
      continue;
    }
    for (const unsigned bits : sizes) {
      if (out.str().find("wwl2/mixed mean-time ratio at " + std::to_string(bits) + " bits: ") == std::string::npos) {
        o.fail("no ratio line for " + std::to_string(bits) + " bits");
      }
    }

    const std::string text = read_file(path);
    std::vector<bench::BenchCell> cells;
    try {
      if (std::string(format) == "csv") {
        if (text.rfind(std::string(bench::kCsvHeader) + "\n", 0) != 0) o.fail("csv header mismatch");
        cells = bench::parse_report_csv(text);
        csv_cells = cells;
      } else {
        const bench::BenchReport report = bench::parse_report_json(text);
        if (report.seed != spec.seed) o.fail("json seed mismatch");
        if (report.environment.empty()) o.fail("json environment missing");
        cells = report.cells;
      }
    } catch (const std::exception& e) {
      o.fail(std::string(format) + " report does not parse: " + e.what());
      continue;
    }

    std::set<std::pair<std::string, unsigned>> seen;
    for (const auto& cell : cells) {
      ++o.checked;
      seen.emplace(std::string(name_of(cell.algorithm)), cell.bit_size);
      if (cell.pairs != spec.pairs_for(cell.bit_size)) o.fail("wrong pair count in a " + std::string(format) + " cell");
      if (cell.repetitions == 0 || cell.total_ns == 0 || cell.mean_ns == 0 || cell.median_ns == 0 ||
          cell.mean_iterations <= 0.0) {
        o.fail("empty measurement in a " + std::string(format) + " cell");
      }
    }
    if (cells.size() != 20 || seen.size() != 20) o.fail(std::string(format) + " report does not have 20 cells");
    for (const unsigned bits : sizes) {
      for (const GcdAlgorithmId id : kAllAlgorithms) {
        if (!seen.count({std::string(name_of(id)), bits})) o.fail(std::string(format) + " report misses a cell");
      }
    }
  }
  std::filesystem::remove_all(dir);

  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.ok) o.detail = "20 cells in csv and json, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome edge_cases() {
  Outcome o;
  auto check = [&](const BigInt& a, const BigInt& b) {
    ++o.checked;
    const BezoutTriple t = ext_gcd(a, b);
    const BigInt g = gcd(a, b);
    if (t.g != g || t.u * a + t.v * b != t.g) o.fail("invalid triple " + triple_text(a, b, t));
    if (oracle::expects_normal_v(a, b) && (t.v < 0 || t.v >= a)) o.fail("v out of range " + triple_text(a, b, t));
    if (fits_u64(abs(a)) && fits_u64(abs(b)) && sign(a) >= 0 && sign(b) >= 0) {
      const Bezout64 f = ext_gcd_u64(to_u64(a), to_u64(b));
      if (f.g != to_u64(g) || from_i128(f.u) * a + from_i128(f.v) * b != g) {
        o.fail("invalid 64-bit triple at (" + to_string(a) + ", " + to_string(b) + ")");
      }
    }
  };

  check(0, 0);
  for (long x : {1L, 2L, 7L, 12L, -9L}) {
    check(0, x);
    check(x, 0);
  }
  for (long a : {-5L, 5L, -12L, 12L}) {
    for (long b : {-7L, 7L, -18L, 18L}) check(a, b);
  }
  for (long b : {1L, 2L, 9L, 1000L}) check(1, b);
  check(1, BigInt(1) << 200);
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{3, 6}, {7, 49}, {5, 5}, {9, 900}, {6, 24}, {4, 4}}) {
    check(a, b);
  }
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{4, 6}, {12, 18}, {64, 96}, {6, 4}, {1024, 48}}) {
    check(a, b);
  }
  check(BigInt(3) << 100, BigInt(9) << 90);

  for (long a : {1L, 3L, 5L, 301L}) {
    for (long v = 0; v < a; v += (a > 10 ? 37 : 1)) {
      o.checked += 2;
      const HalvedNormalizer h = div1(a, 0, v);
      if (h.c != 0 || h.v != v) o.fail("div1 changed a zero c at a=" + std::to_string(a));
      const NormalState s = div2(a, 7, NormalState{BigInt(-v * 7) / a, v, 0});
      if (s.c != 0 || s.v != v) o.fail("div2 changed a zero c at a=" + std::to_string(a));
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"exhaustive oracle equivalence for 1 <= a, b <= 300", exhaustive_equivalence},
      {"wwl1 normalizer is the unique coprime normalizer, odd a <= 300", coprime_uniqueness},
      {"normalizer algebra: additive, multiplicative, subtraction, halving, initial values", normalizer_algebra},
      {"normal u_c bounds for coprime a, b", u_bounds},
      {"wwl2 descent: c1 + c2 strictly decreasing, gcd(c1, c2) constant", termination_metric},
      {"euclid, binary, mixed and wwl2 agree on 64-bit and 1024-bit pairs", baseline_agreement},
      {"bench report for 16..1024 bits in csv and json", benchmark_reproduction},
      {"edge cases return valid triples; div1/div2 stop on c = 0", edge_cases},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name << " (" << o.checked
              << " checks)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
