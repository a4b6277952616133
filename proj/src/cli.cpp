#include "normgcd/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "normgcd/baselines.hpp"
#include "normgcd/bench.hpp"
#include "normgcd/extgcd.hpp"
#include "normgcd/oracle.hpp"

namespace normgcd::cli {
namespace {

// Input problems the user can fix by changing the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt integer_arg(const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<unsigned> parse_bit_list(const std::string& text) {
  std::vector<unsigned> bits;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw UsageError("malformed bit size list: '" + text + "'");
    }
    bits.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (bits.empty()) throw UsageError("empty bit size list");
  return bits;
}

struct Options {
  std::string a;
  std::string b;
  std::string c;
  bool canonical = false;
  bool conormalizer = false;
  std::string algo = "wwl2";
  unsigned max = 300;
  std::string bits = "16,32,64,256,1024";
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out_path;
  std::size_t reps = 5;
};

int cmd_extgcd(const Options& o, std::ostream& out) {
  const BigInt a = integer_arg(o.a);
  const BigInt b = integer_arg(o.b);
  BezoutTriple t = ext_gcd(a, b);
  if (o.canonical) t = canonical_min_v(a, b, t);
  out << t.u << ' ' << t.v << ' ' << t.g;
  if (o.conormalizer) {
    if (sign(a) <= 0) throw std::invalid_argument("co-normalizer needs a positive first operand");
    out << ' ' << floor_mod(-t.v, a);
  }
  out << '\n';
  return kExitOk;
}

int cmd_gcd(const Options& o, std::ostream& out) {
  const auto id = parse_algorithm(o.algo);
  if (!id) throw UsageError("unknown algorithm '" + o.algo + "' (expected euclid, binary, mixed or wwl2)");
  std::size_t iterations = 0;
  out << gcd_with(*id, abs(integer_arg(o.a)), abs(integer_arg(o.b)), iterations) << '\n';
  return kExitOk;
}

int cmd_normalizer(const Options& o, std::ostream& out) {
  out << normalizer_of(integer_arg(o.a), integer_arg(o.b), integer_arg(o.c)).v << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max == 0) throw UsageError("--max must be at least 1");
  const oracle::VerificationReport report = oracle::exhaustive_verify(o.max);
  out << oracle::summarize(report);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto format = bench::parse_report_format(o.format);
  if (!format) throw UsageError("unknown report format '" + o.format + "' (expected csv or json)");
  if (o.reps == 0) throw UsageError("--reps must be at least 1");

  bench::CorpusSpec spec;
  spec.bit_sizes = parse_bit_list(o.bits);
  if (o.count != 0) {
    spec.pairs_per_size = o.count;
    spec.wide_pairs_per_size = o.count;
  }
  spec.seed = o.seed;

  const std::string path = o.out_path.empty() ? "bench_report." + o.format : o.out_path;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write report to '" + path + "'");

  bench::Corpus corpus;
  try {
    corpus = bench::generate_corpus(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bench::BenchReport report = bench::run_benchmark(corpus, kAllAlgorithms, o.reps);

  file << bench::emit_report(report, *format);
  file.close();
  if (!file) throw UsageError("failed writing report to '" + path + "'");

  out << path << '\n';
  for (unsigned bits : spec.bit_sizes) {
    if (const auto ratio = bench::mean_time_ratio(report, GcdAlgorithmId::wwl2, GcdAlgorithmId::mixed, bits)) {
      out << "wwl2/mixed mean-time ratio at " << bits << " bits: " << std::fixed << std::setprecision(3) << *ratio
          << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended gcd by normalization: solver, verification and benchmarks", "normgcd"};
  app.require_subcommand(1);
  Options o;

  auto* extgcd = app.add_subcommand("extgcd", "Print u v g with u*a + v*b = g = gcd(a, b)");
  extgcd->add_option("a", o.a)->required();
  extgcd->add_option("b", o.b)->required();
  extgcd->add_flag("--canonical", o.canonical, "Return the solution with the smallest nonnegative v");
  extgcd->add_flag("--conormalizer", o.conormalizer, "Append the co-normalizer of g");

  auto* gcd = app.add_subcommand("gcd", "Print gcd(a, b) computed by the chosen algorithm");
  gcd->add_option("a", o.a)->required();
  gcd->add_option("b", o.b)->required();
  gcd->add_option("--algo", o.algo, "euclid, binary, mixed or wwl2")->capture_default_str();

  auto* normalizer = app.add_subcommand("normalizer", "Print the normalizer of u*a + v*b = c");
  normalizer->add_option("a", o.a)->required();
  normalizer->add_option("b", o.b)->required();
  normalizer->add_option("c", o.c)->required();

  auto* verify = app.add_subcommand("verify", "Check ext_gcd exhaustively against reference oracles");
  verify->add_option("--max", o.max, "Check all 1 <= a, b <= max")->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Time all gcd algorithms on a seeded corpus");
  bench_cmd->add_option("--bits", o.bits, "Comma-separated operand sizes in bits")->capture_default_str();
  bench_cmd->add_option("--count", o.count, "Pairs per size (default 10000, or 500 above 64 bits)");
  bench_cmd->add_option("--seed", o.seed, "Corpus seed")->capture_default_str();
  bench_cmd->add_option("--format", o.format, "csv or json")->capture_default_str();
  bench_cmd->add_option("--out", o.out_path, "Report path (default bench_report.<format>)");
  bench_cmd->add_option("--reps", o.reps, "Timed calls per pair")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*extgcd) return cmd_extgcd(o, out);
    if (*gcd) return cmd_gcd(o, out);
    if (*normalizer) return cmd_normalizer(o, out);
    if (*verify) return cmd_verify(o, out);
    return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotRepresentable& e) {
    err << "not representable: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const bench::AgreementError& e) {
    err << "agreement failure: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace normgcd::cli
