#pragma once

// Seeded workloads and a single-threaded timing harness comparing the gcd algorithms.
//
// Operands of at most 64 bits run through the fixed-width kernels, wider ones through
// the arbitrary-precision kernels; every algorithm in a cell sees the same path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "normgcd/baselines.hpp"
#include "normgcd/bigint.hpp"

namespace normgcd::bench {

enum class ParityMix { any, odd_odd, odd_even };

std::string_view name_of(ParityMix mix);
std::optional<ParityMix> parse_parity_mix(std::string_view name);

inline constexpr unsigned kFixedWidthBits = 64;

struct CorpusSpec {
  std::vector<unsigned> bit_sizes = {16, 32, 64, 256, 1024};
  std::size_t pairs_per_size = 10000;
  /// Pair count used for sizes above kFixedWidthBits.
  std::size_t wide_pairs_per_size = 500;
  std::uint64_t seed = 1;
  ParityMix parity_mix = ParityMix::any;

  std::size_t pairs_for(unsigned bits) const {
    return bits > kFixedWidthBits ? wide_pairs_per_size : pairs_per_size;
  }
};

struct OperandPair {
  BigInt a;
  BigInt b;

  friend bool operator==(const OperandPair&, const OperandPair&) = default;
};

struct CorpusBlock {
  unsigned bits = 0;
  std::vector<OperandPair> pairs;

  friend bool operator==(const CorpusBlock&, const CorpusBlock&) = default;
};

struct Corpus {
  std::uint64_t seed = 0;
  ParityMix parity_mix = ParityMix::any;
  std::vector<CorpusBlock> blocks;

  bool empty() const;
  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Deterministic in the corpus spec: pairs are uniform in [2^(k-1), 2^k) for each size k, with
/// the low bits forced to the requested parity. Rejects sizes below 2 bits.
Corpus generate_corpus(const CorpusSpec& spec);

struct BenchCell {
  GcdAlgorithmId algorithm = GcdAlgorithmId::euclid;
  unsigned bit_size = 0;
  std::size_t pairs = 0;
  std::size_t repetitions = 0;
  std::uint64_t total_ns = 0;
  std::uint64_t mean_ns = 0;
  std::uint64_t median_ns = 0;
  double mean_iterations = 0.0;

  friend bool operator==(const BenchCell&, const BenchCell&) = default;
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::string environment;
  std::vector<BenchCell> cells;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Raised when two algorithms return different gcds for the same pair.
class AgreementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cross-checks every pair across all algorithms, then times each (algorithm, size) cell
/// after a discarded warm-up pass. Cells are ordered by size, then by the given algorithm order.
BenchReport run_benchmark(const Corpus& corpus, std::span<const GcdAlgorithmId> algorithms,
                          std::size_t repetitions);

/// mean_ns(numerator) / mean_ns(denominator) at the given size, if both cells exist.
std::optional<double> mean_time_ratio(const BenchReport& report, GcdAlgorithmId numerator,
                                      GcdAlgorithmId denominator, unsigned bit_size);

std::string environment_note();

enum class ReportFormat { csv, json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "algorithm,bit_size,pairs,repetitions,total_ns,mean_ns,median_ns,mean_iterations";

std::string emit_report(const BenchReport& report, ReportFormat format);

/// Inverse of emit_report for CSV; seed and environment are not part of the CSV schema.
std::vector<BenchCell> parse_report_csv(std::string_view text);
BenchReport parse_report_json(std::string_view text);

}  // namespace normgcd::bench
