#include "cyclemod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cyclemod/bench.hpp"
#include "cyclemod/ecs.hpp"
#include "cyclemod/errors.hpp"
#include "cyclemod/hybrid.hpp"
#include "cyclemod/plot.hpp"
#include "cyclemod/report.hpp"
#include "cyclemod/seedgen.hpp"

namespace cyclemod::cli {

namespace {

constexpr std::uint64_t kMaxPlotSpan = 100000;
constexpr std::uint64_t kDefaultSpan = 100000;
constexpr std::uint64_t kDefaultBenchSpan = 100;

// Usage problems detected after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for output failures; mapped to exit code 1.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };
enum class SourceKind { test, os };
enum class MaskMethod { xor_mask, kdf };

struct RunConfig {
  unsigned p = 0;
  std::uint64_t k_start = 1;
  std::optional<std::uint64_t> k_end;
  unsigned buckets = kDefaultBuckets;
  std::optional<double> threshold;
  InversionVariant variant = InversionVariant::ct;
  std::string output_path;
  Format format = Format::csv;

  std::uint64_t s = 0;

  std::uint64_t k = 1;
  std::string r_hex;
  std::optional<SourceKind> source;
  std::uint64_t seed = 0;
  std::optional<unsigned> r_width;
  MaskMethod method = MaskMethod::xor_mask;

  unsigned reps = 100;
};

std::uint64_t resolve_k_end(const RunConfig& cfg, std::uint64_t default_span) {
  if (cfg.k_end) return *cfg.k_end;
  const Modulus m = Modulus::make(cfg.p);
  const u128 span = std::min<u128>(m.phi(), default_span);
  return cfg.k_start + static_cast<std::uint64_t>(span) - 1;
}

double resolve_threshold(const RunConfig& cfg) {
  if (cfg.threshold) return *cfg.threshold;
  const char* env = std::getenv(kThresholdEnv);
  if (env == nullptr || *env == '\0') return kDefaultThreshold;
  const std::string text(env);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value >= 0.0 && value <= 1.0)) {
    throw UsageError(std::string(kThresholdEnv) + " must be a number in [0, 1], got '" + text + "'");
  }
  return value;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + cfg.output_path + "' for writing");
  file << text;
  file.close();
  if (!file) throw OutputError("failed writing '" + cfg.output_path + "'");
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const auto seq = generate_sequence(cfg.p, cfg.k_start, resolve_k_end(cfg, kDefaultSpan), cfg.variant);
  emit(cfg, cfg.format == Format::json ? sequence_json(seq) : sequence_csv(seq), out);
  return kExitOk;
}

int cmd_ecs(const RunConfig& cfg, std::ostream& out) {
  const double threshold = resolve_threshold(cfg);
  const auto seq = generate_sequence(cfg.p, cfg.k_start, resolve_k_end(cfg, kDefaultSpan), cfg.variant);
  const auto report = score(seq, cfg.buckets);
  const bool admitted = admit(report, threshold);
  emit(cfg, ecs_json(report, admitted, threshold), out);
  return admitted ? kExitOk : kExitRejected;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const auto w = decompose_identity(cfg.p, cfg.s);
  emit(cfg, witness_json(w, verify_identity(w)), out);
  return kExitOk;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t k_end = resolve_k_end(cfg, kDefaultSpan);
  if (k_end >= cfg.k_start && k_end - cfg.k_start > kMaxPlotSpan) {
    throw UsageError("plot range is limited to k_end - k_start <= " + std::to_string(kMaxPlotSpan));
  }
  const auto seq = generate_sequence(cfg.p, cfg.k_start, k_end, cfg.variant);
  emit(cfg, render_residue_map(seq), out);
  return kExitOk;
}

EntropyToken resolve_token(const RunConfig& cfg, const Modulus& m) {
  const unsigned width = cfg.r_width.value_or(m.bit_width());
  if (!cfg.r_hex.empty()) {
    try {
      return EntropyToken{BitString::from_hex(cfg.r_hex, width), "hex"};
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--r-hex: ") + e.what());
    }
  }
  if (cfg.source == SourceKind::os) return OsEntropySource(width).next();
  return DeterministicTestSource(cfg.seed, width).next();
}

int cmd_mask(const RunConfig& cfg, std::ostream& out) {
  const Modulus m = Modulus::make(cfg.p);
  const Residue d = compute_d(cfg.k, m, cfg.variant);
  const EntropyToken r = resolve_token(cfg, m);
  const HybridSeed seed = cfg.method == MaskMethod::kdf ? mask_conditioned(d, r, identity_conditioner, cfg.k)
                                                        : mask_xor(d, r, cfg.k);
  emit(cfg, seed.h.to_hex() + "\n", out);
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t k_end = resolve_k_end(cfg, kDefaultBenchSpan);
  emit(cfg, comparison_json(compare_report(cfg.p, cfg.k_start, k_end, cfg.reps)), out);
  return kExitOk;
}

const std::map<std::string, InversionVariant> kVariants{{"ct", InversionVariant::ct},
                                                        {"euclid", InversionVariant::euclid}};

void add_common(CLI::App* sub, RunConfig& cfg, bool with_range) {
  sub->add_option("--p", cfg.p, "Exponent p of the modulus 3^p")
      ->required()
      ->check(CLI::Range(1u, kMaxExponent));
  if (with_range) {
    sub->add_option("--k-start", cfg.k_start, "First index k (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--k-end", cfg.k_end, "Last index k (default: one period, capped)")
        ->check(CLI::PositiveNumber);
  }
  sub->add_option("--variant", cfg.variant, "Inversion route: ct or euclid")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  sub->add_option("-o,--output", cfg.output_path, "Write to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic modular-inversion seed residues over Z/3^pZ", "cyclemod"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "Emit the d_k sequence as CSV or JSON");
  add_common(gen, cfg, true);
  gen->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}},
                                          CLI::ignore_case));

  auto* ecs = app.add_subcommand("ecs", "Score a d_k sequence; exit 3 when below the threshold");
  add_common(ecs, cfg, true);
  ecs->add_option("--buckets", cfg.buckets, "Bucket count for the bias index")->check(CLI::Range(2u, kMaxBuckets));
  ecs->add_option("--threshold", cfg.threshold, "Admission threshold (default 0.90 or $CYCLEMOD_THRESHOLD)")
      ->check(CLI::Range(0.0, 1.0));

  auto* decompose = app.add_subcommand("decompose", "Decompose 3^p(s+1) - 1 = 2^(k-1)(2*3^p*n + d)");
  decompose->add_option("--p", cfg.p, "Exponent p")->required()->check(CLI::Range(1u, kMaxExponent));
  decompose->add_option("--s", cfg.s, "Multiplier s >= 0")->required();
  decompose->add_option("-o,--output", cfg.output_path, "Write to this file instead of stdout");

  auto* plot = app.add_subcommand("plot", "Render the residue map as SVG");
  add_common(plot, cfg, true);

  auto* mask = app.add_subcommand("mask", "Mask d_k with an entropy token and print the hex seed");
  add_common(mask, cfg, false);
  mask->add_option("--k", cfg.k, "Index k")->required()->check(CLI::PositiveNumber);
  auto* r_hex = mask->add_option("--r-hex", cfg.r_hex, "Explicit entropy token in hex");
  auto* source = mask->add_option("--source", cfg.source, "Entropy source: test or os")
                     ->transform(CLI::CheckedTransformer(
                         std::map<std::string, SourceKind>{{"test", SourceKind::test}, {"os", SourceKind::os}},
                         CLI::ignore_case));
  r_hex->excludes(source);
  mask->add_option("--seed", cfg.seed, "Seed for --source test");
  mask->add_option("--r-width", cfg.r_width, "Token width in bits (default: bit width of 3^p)")
      ->check(CLI::Range(1u, 4096u));
  mask->add_option("--method", cfg.method, "xor or kdf (identity conditioner over d || r)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, MaskMethod>{{"xor", MaskMethod::xor_mask}, {"kdf", MaskMethod::kdf}},
          CLI::ignore_case));

  auto* bench = app.add_subcommand("bench", "Compare timing uniformity of the inversion routes");
  add_common(bench, cfg, true);
  bench->add_option("--reps", cfg.reps, "Repetitions per k (>= 30)")->check(CLI::Range(kMinTimingReps, 1000000u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mask->parsed() && cfg.r_hex.empty() && !cfg.source) {
      throw UsageError("mask needs --r-hex or --source");
    }
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (ecs->parsed()) return cmd_ecs(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (plot->parsed()) return cmd_plot(cfg, out);
    if (mask->parsed()) return cmd_mask(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WidthMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace cyclemod::cli
