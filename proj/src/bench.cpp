#include "normgcd/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"

namespace normgcd::bench {
namespace {

using Clock = std::chrono::steady_clock;

volatile std::uint64_t g_sink = 0;

std::uint64_t low_word(const BigInt& x) { return mpz_getlimbn(x.get_mpz_t(), 0); }

struct Sample {
  std::uint64_t total_ns = 0;
  std::uint64_t mean_ns = 0;
  std::uint64_t median_ns = 0;
  double mean_iterations = 0.0;
};

// `call(i, iterations)` runs one gcd on pair i and returns a word of its result.
template <class Call>
Sample measure(std::size_t count, std::size_t repetitions, Call&& call) {
  std::uint64_t sink = 0;
  std::size_t iterations = 0;
  for (std::size_t i = 0; i < count; ++i) sink += call(i, iterations);

  std::vector<std::uint64_t> per_call(count);
  Sample s;
  double iteration_sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto t0 = Clock::now();
    for (std::size_t r = 0; r < repetitions; ++r) sink += call(i, iterations);
    const auto t1 = Clock::now();
    const auto ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    s.total_ns += ns;
    per_call[i] = ns / repetitions;
    iteration_sum += static_cast<double>(iterations);
  }
  g_sink = g_sink + sink;

  const std::uint64_t calls = count * repetitions;
  s.mean_ns = (s.total_ns + calls / 2) / calls;
  const std::size_t mid = count / 2;
  std::nth_element(per_call.begin(), per_call.begin() + static_cast<std::ptrdiff_t>(mid), per_call.end());
  s.median_ns = per_call[mid];
  if (count % 2 == 0) {
    const std::uint64_t lower = *std::max_element(per_call.begin(), per_call.begin() + static_cast<std::ptrdiff_t>(mid));
    s.median_ns = (lower + s.median_ns) / 2;
  }
  s.mean_iterations = iteration_sum / static_cast<double>(count);
  return s;
}

[[noreturn]] void report_disagreement(unsigned bits, const OperandPair& pair, GcdAlgorithmId ref_algo,
                                      const std::string& ref_value, GcdAlgorithmId algo, const std::string& value) {
  std::ostringstream msg;
  msg << "gcd disagreement at " << bits << " bits for a=" << pair.a << " b=" << pair.b << ": " << name_of(ref_algo)
      << " returned " << ref_value << ", " << name_of(algo) << " returned " << value;
  throw AgreementError(msg.str());
}

void bench_fixed_width(const CorpusBlock& block, std::span<const GcdAlgorithmId> algorithms, std::size_t repetitions,
                       std::vector<BenchCell>& cells) {
  std::vector<std::uint64_t> as;
  std::vector<std::uint64_t> bs;
  as.reserve(block.pairs.size());
  bs.reserve(block.pairs.size());
  for (const auto& p : block.pairs) {
    as.push_back(to_u64(p.a));
    bs.push_back(to_u64(p.b));
  }

  std::size_t iterations = 0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::uint64_t ref = gcd_with_u64(algorithms.front(), as[i], bs[i], iterations);
    for (GcdAlgorithmId id : algorithms.subspan(1)) {
      const std::uint64_t got = gcd_with_u64(id, as[i], bs[i], iterations);
      if (got != ref) {
        report_disagreement(block.bits, block.pairs[i], algorithms.front(), std::to_string(ref), id,
                            std::to_string(got));
      }
    }
  }

  for (GcdAlgorithmId id : algorithms) {
    const Sample s = measure(as.size(), repetitions, [&](std::size_t i, std::size_t& its) {
      return gcd_with_u64(id, as[i], bs[i], its);
    });
    cells.push_back({id, block.bits, as.size(), repetitions, s.total_ns, s.mean_ns, s.median_ns, s.mean_iterations});
  }
}

void bench_wide(const CorpusBlock& block, std::span<const GcdAlgorithmId> algorithms, std::size_t repetitions,
                std::vector<BenchCell>& cells) {
  std::size_t iterations = 0;
  for (const auto& p : block.pairs) {
    const BigInt ref = gcd_with(algorithms.front(), p.a, p.b, iterations);
    for (GcdAlgorithmId id : algorithms.subspan(1)) {
      const BigInt got = gcd_with(id, p.a, p.b, iterations);
      if (got != ref) report_disagreement(block.bits, p, algorithms.front(), to_string(ref), id, to_string(got));
    }
  }

  for (GcdAlgorithmId id : algorithms) {
    const Sample s = measure(block.pairs.size(), repetitions, [&](std::size_t i, std::size_t& its) {
      return low_word(gcd_with(id, block.pairs[i].a, block.pairs[i].b, its));
    });
    cells.push_back(
        {id, block.bits, block.pairs.size(), repetitions, s.total_ns, s.mean_ns, s.median_ns, s.mean_iterations});
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_number(std::string_view field) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("malformed report field: '" + std::string(field) + "'");
  }
  return value;
}

GcdAlgorithmId parse_algorithm_field(std::string_view field) {
  const auto id = parse_algorithm(field);
  if (!id) throw std::invalid_argument("unknown algorithm in report: '" + std::string(field) + "'");
  return *id;
}

}  // namespace

std::string_view name_of(ParityMix mix) {
  switch (mix) {
    case ParityMix::any: return "any";
    case ParityMix::odd_odd: return "odd-odd";
    case ParityMix::odd_even: return "odd-even";
  }
  throw std::invalid_argument("unknown parity mix");
}

std::optional<ParityMix> parse_parity_mix(std::string_view name) {
  for (ParityMix mix : {ParityMix::any, ParityMix::odd_odd, ParityMix::odd_even}) {
    if (name_of(mix) == name) return mix;
  }
  return std::nullopt;
}

bool Corpus::empty() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const CorpusBlock& b) { return b.pairs.empty(); });
}

Corpus generate_corpus(const CorpusSpec& spec) {
  if (spec.bit_sizes.empty()) throw std::invalid_argument("corpus needs at least one bit size");
  for (unsigned bits : spec.bit_sizes) {
    if (bits < 2) throw std::invalid_argument("bit size must be at least 2, got " + std::to_string(bits));
    if (spec.pairs_for(bits) == 0) throw std::invalid_argument("pairs per size must be at least 1");
  }

  std::mt19937_64 rng(spec.seed);
  Corpus corpus{spec.seed, spec.parity_mix, {}};
  for (unsigned bits : spec.bit_sizes) {
    CorpusBlock block{bits, {}};
    const std::size_t count = spec.pairs_for(bits);
    block.pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      BigInt a = random_with_bits(rng, bits);
      BigInt b = random_with_bits(rng, bits);
      // Forcing bit 0 maps exactly two draws onto each admissible value, so the
      // result stays uniform over the filtered range.
      switch (spec.parity_mix) {
        case ParityMix::any: break;
        case ParityMix::odd_odd:
          mpz_setbit(a.get_mpz_t(), 0);
          mpz_setbit(b.get_mpz_t(), 0);
          break;
        case ParityMix::odd_even:
          mpz_setbit(a.get_mpz_t(), 0);
          mpz_clrbit(b.get_mpz_t(), 0);
          break;
      }
      block.pairs.push_back({std::move(a), std::move(b)});
    }
    corpus.blocks.push_back(std::move(block));
  }
  return corpus;
}

BenchReport run_benchmark(const Corpus& corpus, std::span<const GcdAlgorithmId> algorithms,
                          std::size_t repetitions) {
  if (corpus.empty()) throw std::invalid_argument("benchmark corpus is empty");
  if (repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms requested");

  BenchReport report{corpus.seed, environment_note(), {}};
  for (const CorpusBlock& block : corpus.blocks) {
    if (block.pairs.empty()) continue;
    if (block.bits <= kFixedWidthBits) {
      bench_fixed_width(block, algorithms, repetitions, report.cells);
    } else {
      bench_wide(block, algorithms, repetitions, report.cells);
    }
  }
  return report;
}

std::optional<double> mean_time_ratio(const BenchReport& report, GcdAlgorithmId numerator,
                                      GcdAlgorithmId denominator, unsigned bit_size) {
  auto find = [&](GcdAlgorithmId id) -> const BenchCell* {
    for (const auto& cell : report.cells) {
      if (cell.algorithm == id && cell.bit_size == bit_size) return &cell;
    }
    return nullptr;
  };
  const BenchCell* num = find(numerator);
  const BenchCell* den = find(denominator);
  if (num == nullptr || den == nullptr || den->total_ns == 0) return std::nullopt;
  // Ratio of totals equals the ratio of unrounded means when both cells share the corpus.
  const double num_mean = static_cast<double>(num->total_ns) / static_cast<double>(num->pairs * num->repetitions);
  const double den_mean = static_cast<double>(den->total_ns) / static_cast<double>(den->pairs * den->repetitions);
  return num_mean / den_mean;
}

std::string environment_note() {
  std::ostringstream note;
#if defined(__clang__)
  note << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  note << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
  note << "unknown compiler";
#endif
#ifdef NDEBUG
  note << ", optimized";
#else
  note << ", debug";
#endif
  note << ", gmp " << gmp_version << ", single-threaded steady_clock, <= " << kFixedWidthBits
       << "-bit operands on fixed-width kernels";
  return note.str();
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  return std::nullopt;
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& c : report.cells) {
      out += name_of(c.algorithm);
      out += ',' + std::to_string(c.bit_size) + ',' + std::to_string(c.pairs) + ',' + std::to_string(c.repetitions) +
             ',' + std::to_string(c.total_ns) + ',' + std::to_string(c.mean_ns) + ',' + std::to_string(c.median_ns) +
             ',' + format_double(c.mean_iterations) + '\n';
    }
    return out;
  }

  nlohmann::ordered_json doc;
  doc["seed"] = report.seed;
  doc["environment"] = report.environment;
  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : report.cells) {
    nlohmann::ordered_json cell;
    cell["algorithm"] = std::string(name_of(c.algorithm));
    cell["bit_size"] = c.bit_size;
    cell["pairs"] = c.pairs;
    cell["repetitions"] = c.repetitions;
    cell["total_ns"] = c.total_ns;
    cell["mean_ns"] = c.mean_ns;
    cell["median_ns"] = c.median_ns;
    cell["mean_iterations"] = c.mean_iterations;
    doc["cells"].push_back(std::move(cell));
  }
  return doc.dump(2) + '\n';
}

std::vector<BenchCell> parse_report_csv(std::string_view text) {
  std::vector<BenchCell> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("CSV report header mismatch");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
      fields.push_back(rest.substr(0, pos));
    }
    fields.push_back(rest);
    if (fields.size() != 8) throw std::invalid_argument("CSV report row has " + std::to_string(fields.size()) + " fields");
    cells.push_back({parse_algorithm_field(fields[0]), parse_number<unsigned>(fields[1]),
                     parse_number<std::size_t>(fields[2]), parse_number<std::size_t>(fields[3]),
                     parse_number<std::uint64_t>(fields[4]), parse_number<std::uint64_t>(fields[5]),
                     parse_number<std::uint64_t>(fields[6]), parse_number<double>(fields[7])});
  }
  return cells;
}

BenchReport parse_report_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  BenchReport report;
  report.seed = doc.at("seed").get<std::uint64_t>();
  report.environment = doc.at("environment").get<std::string>();
  for (const auto& c : doc.at("cells")) {
    report.cells.push_back({parse_algorithm_field(c.at("algorithm").get<std::string>()),
                            c.at("bit_size").get<unsigned>(), c.at("pairs").get<std::size_t>(),
                            c.at("repetitions").get<std::size_t>(), c.at("total_ns").get<std::uint64_t>(),
                            c.at("mean_ns").get<std::uint64_t>(), c.at("median_ns").get<std::uint64_t>(),
                            c.at("mean_iterations").get<double>()});
  }
  return report;
}

}  // namespace normgcd::bench
