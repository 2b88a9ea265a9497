#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/reduce.hpp"

namespace dtwist {

enum class InputKind { kPoints, kLowerDistance };
enum class Algorithm { kStandard, kTwist, kDoubleTwist };

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParse = 2,
  kExitInvariant = 3,
  kExitOutOfMemory = 4,
  kExitCapExceeded = 5,
};

struct SyntheticSphere {
  std::size_t count = 0;
  std::size_t ambient_dim = 0;
};

// Parses "sphere:N:D". Throws ParseError.
SyntheticSphere parse_synthetic(const std::string& spec);

struct RunConfig {
  std::string input;
  InputKind kind = InputKind::kPoints;
  std::optional<SyntheticSphere> synthetic;
  std::uint64_t seed = 0;
  double threshold = std::numeric_limits<double>::infinity();
  int max_dim = 2;
  Algorithm algorithm = Algorithm::kDoubleTwist;
  std::string output = "-";
  std::string dump;  // compute: reduced matrix dump path
  std::string csv;   // bench
  bool representatives = false;
  bool drop_zero_persistence = false;
  bool skip_naive = false;
  int repeat = 1;                   // bench: best of this many runs
  std::size_t verify_cap = 50000;   // verify: simplex limit
  std::function<void(ReducedMatrix&)> tamper;  // verify test hook
};

/// Point count (or distance matrix size) and the filtration built from cfg.
struct LoadedInput {
  std::size_t data_size = 0;
  Filtration filtration;
};
LoadedInput load_filtration(const RunConfig& cfg);

// Each command writes data to cfg.output ("-" = out), diagnostics to err,
// and returns an ExitCode.
int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct BenchMetrics {
  std::size_t data_size = 0;
  double max_distance = 0;
  std::size_t simplices = 0;
  std::size_t input_nonzeros = 0;
  std::size_t pruned_nonzeros = 0;
  std::optional<double> naive_seconds;
  double coboundary_seconds = 0;
  double pruned_seconds = 0;
  std::size_t saved = 0;
  // sum over saved simplices of (dim + 1), recomputed from the pairs
  std::size_t expected_pruned_nonzeros = 0;
  bool accounting_ok() const { return expected_pruned_nonzeros == pruned_nonzeros; }
};

/// Times the naive twist reduction of the full boundary (unless skipped)
/// and both double-twist passes. Only the reduction calls are timed; with
/// repeat > 1 each timing is the minimum over the runs.
BenchMetrics run_bench(const Filtration& f, std::size_t data_size, double threshold,
                       bool skip_naive, int repeat = 1);

std::string bench_csv_header();
std::string bench_csv_row(const BenchMetrics& m);
std::string bench_table(const BenchMetrics& m);

/// Full command-line entry point (subcommands compute, verify, bench).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dtwist
