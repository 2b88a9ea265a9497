#include "dtwist/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <new>
#include <sstream>

#include "dtwist/double_twist.hpp"
#include "dtwist/io.hpp"
#include "dtwist/persistence.hpp"
#include "dtwist/rips.hpp"
#include "dtwist/verify.hpp"

namespace dtwist {

SyntheticSphere parse_synthetic(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3 || parts[0] != "sphere")
    throw ParseError("synthetic input must look like sphere:N:D, got '" + spec + "'");
  try {
    std::size_t used = 0;
    const long long count = std::stoll(parts[1], &used);
    if (used != parts[1].size() || count < 1) throw std::invalid_argument("count");
    const long long dim = std::stoll(parts[2], &used);
    if (used != parts[2].size() || dim < 2) throw std::invalid_argument("dim");
    return SyntheticSphere{static_cast<std::size_t>(count), static_cast<std::size_t>(dim)};
  } catch (const std::exception&) {
    throw ParseError("synthetic input needs N >= 1 and D >= 2, got '" + spec + "'");
  }
}

LoadedInput load_filtration(const RunConfig& cfg) {
  if (!(cfg.threshold >= 0.0)) throw InvariantError("threshold must be >= 0");
  if (cfg.max_dim < 0) throw InvariantError("max_dim must be >= 0");
  DistanceMatrix dm;
  if (cfg.synthetic) {
    dm = pairwise_distances(sample_sphere(cfg.synthetic->count, cfg.synthetic->ambient_dim, cfg.seed));
  } else if (cfg.input.empty()) {
    throw ParseError("one of --input or --synthetic is required");
  } else if (cfg.kind == InputKind::kPoints) {
    dm = pairwise_distances(read_point_cloud(cfg.input));
  } else {
    dm = read_lower_distance_matrix(cfg.input);
  }
  LoadedInput loaded{dm.size(), build_rips(dm, cfg.threshold, cfg.max_dim)};
  if (auto v = validate_filtration(loaded.filtration)) throw InvariantError(v->message);
  return loaded;
}

namespace {

// Runs body and maps the error taxonomy onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "dtwist: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvariantError& e) {
    err << "dtwist: invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::bad_alloc&) {
    err << "dtwist: out of memory\n";
    return kExitOutOfMemory;
  } catch (const std::length_error& e) {
    err << "dtwist: out of memory: " << e.what() << '\n';
    return kExitOutOfMemory;
  }
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + cfg.output + "'");
  file << text;
}

ReducedMatrix reduce_with(Algorithm algorithm, const Filtration& f) {
  switch (algorithm) {
    case Algorithm::kStandard: return standard_reduce(boundary_matrix(f));
    case Algorithm::kTwist: return twist_reduce(boundary_matrix(f));
    case Algorithm::kDoubleTwist: return double_twist(f);
  }
  throw InvariantError("unknown algorithm");
}

using Clock = std::chrono::steady_clock;

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_filtration(cfg);
    const Filtration& f = loaded.filtration;
    const ReducedMatrix reduced = reduce_with(cfg.algorithm, f);
    const auto pairs = pairs_from_boundary(reduced, f);
    const auto essentials = essential_classes(f, pairs);
    std::vector<Representative> reps;
    if (cfg.representatives) reps = representatives(reduced, f);
    const Diagram d = diagram(f, pairs, essentials, cfg.drop_zero_persistence,
                              cfg.representatives ? &reps : nullptr);
    write_output(cfg, diagram_to_json(d, f, cfg.representatives), out);
    if (!cfg.dump.empty()) {
      std::ofstream dump(cfg.dump, std::ios::binary);
      if (!dump) throw ParseError("cannot write '" + cfg.dump + "'");
      write_dump(dump, reduced.matrix);
    }
    return int{kExitOk};
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_filtration(cfg);
    const Filtration& f = loaded.filtration;
    if (f.size() > cfg.verify_cap) {
      err << "dtwist: verify: " << f.size() << " simplices exceed the cap of " << cfg.verify_cap
          << '\n';
      return int{kExitCapExceeded};
    }
    VerifyOptions options;
    options.tamper = cfg.tamper;
    const VerifyReport report = run_verify(f, options);
    std::ostringstream text;
    text << "simplices: " << f.size() << '\n';
    for (const auto& check : report.checks) {
      text << (check.skipped ? "SKIP " : check.passed ? "PASS " : "FAIL ") << check.name;
      if (!check.detail.empty()) text << ": " << check.detail;
      text << '\n';
    }
    write_output(cfg, text.str(), out);
    return report.all_passed() ? int{kExitOk} : int{kExitCheckFailed};
  });
}

BenchMetrics run_bench(const Filtration& f, std::size_t data_size, double threshold,
                       bool skip_naive, int repeat) {
  BenchMetrics m;
  m.data_size = data_size;
  m.max_distance = threshold;
  m.simplices = f.size();
  repeat = std::max(repeat, 1);

  if (!skip_naive) {
    const PositionIndex index(f);
    for (int r = 0; r < repeat; ++r) {
      SparseBinaryMatrix boundary = boundary_matrix(f, index);
      const auto start = Clock::now();
      const ReducedMatrix reduced = twist_reduce(std::move(boundary));
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      m.naive_seconds = m.naive_seconds ? std::min(*m.naive_seconds, secs) : secs;
    }
  }

  ReducedMatrix result;
  for (int r = 0; r < repeat; ++r) {
    double first = 0, second = 0;
    result = double_twist(f, [&](const StageEvent& e) {
      switch (e.stage) {
        case Stage::kCoboundaryBuilt: m.input_nonzeros = e.nonzeros; break;
        case Stage::kCoboundaryReduced: first = e.seconds; break;
        case Stage::kPrunedBoundaryBuilt: m.pruned_nonzeros = e.nonzeros; break;
        case Stage::kPrunedBoundaryReduced: second = e.seconds; break;
        default: break;
      }
    });
    m.coboundary_seconds = r ? std::min(m.coboundary_seconds, first) : first;
    m.pruned_seconds = r ? std::min(m.pruned_seconds, second) : second;
  }

  for (const auto& p : pairs_from_boundary(result, f)) {
    ++m.saved;
    m.expected_pruned_nonzeros += static_cast<std::size_t>(f.dim(p.death_index)) + 1;
  }
  return m;
}

std::string bench_csv_header() {
  return "data_size,max_distance,simplices,input_nonzeros,nonzeros_after_first_pass,"
         "naive_seconds,coboundary_seconds,pruned_boundary_seconds\n";
}

std::string bench_csv_row(const BenchMetrics& m) {
  std::ostringstream os;
  os << m.data_size << ',' << m.max_distance << ',' << m.simplices << ',' << m.input_nonzeros
     << ',' << m.pruned_nonzeros << ',';
  os << std::fixed << std::setprecision(6);
  if (m.naive_seconds) os << *m.naive_seconds;
  os << ',' << m.coboundary_seconds << ',' << m.pruned_seconds << '\n';
  return os.str();
}

std::string bench_table(const BenchMetrics& m) {
  std::ostringstream os;
  os << std::left;
  auto row = [&](const std::string& label, const std::string& value) {
    os << std::setw(44) << label << value << '\n';
  };
  auto secs = [](double s) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(6) << s << " s";
    return t.str();
  };
  row("data size", std::to_string(m.data_size));
  std::ostringstream dist;
  dist << m.max_distance;
  row("maximum distance", dist.str());
  row("number of simplices", std::to_string(m.simplices));
  row("nonzeros in input (co)boundary matrix", std::to_string(m.input_nonzeros));
  row("nonzeros after 1st pass", std::to_string(m.pruned_nonzeros));
  row("boundary reduction time (naive)", m.naive_seconds ? secs(*m.naive_seconds) : "skipped");
  row("coboundary reduction time (1st pass)", secs(m.coboundary_seconds));
  row("pruned boundary reduction time (2nd pass)", secs(m.pruned_seconds));
  row("saved simplices", std::to_string(m.saved));
  row("pruned nonzeros accounting", m.accounting_ok() ? "ok" : "MISMATCH");
  return os.str();
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto loaded = load_filtration(cfg);
    const BenchMetrics m =
        run_bench(loaded.filtration, loaded.data_size, cfg.threshold, cfg.skip_naive, cfg.repeat);
    write_output(cfg, bench_table(m), out);
    if (!cfg.csv.empty()) {
      std::ofstream csv(cfg.csv, std::ios::binary);
      if (!csv) throw ParseError("cannot write '" + cfg.csv + "'");
      csv << bench_csv_header() << bench_csv_row(m);
    }
    if (!m.accounting_ok()) {
      err << "dtwist: bench: pruned nonzeros " << m.pruned_nonzeros << " != expected "
          << m.expected_pruned_nonzeros << '\n';
      return int{kExitInvariant};
    }
    return int{kExitOk};
  });
}

namespace {

void add_common_options(CLI::App& sub, RunConfig& cfg, std::string& threshold,
                        std::string& synthetic) {
  sub.add_option("--input", cfg.input, "Input file (points or lower distance matrix)");
  sub.add_option("--format", cfg.kind, "Input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputKind>{{"points", InputKind::kPoints},
                                           {"ldm", InputKind::kLowerDistance}}));
  sub.add_option("--threshold", threshold, "Rips threshold (number or inf)");
  sub.add_option("--max-dim", cfg.max_dim, "Skeleton dimension");
  sub.add_option("--synthetic", synthetic, "Synthetic input, sphere:N:D");
  sub.add_option("--seed", cfg.seed, "Seed for synthetic input");
  sub.add_option("--output", cfg.output, "Output path, - for standard output");
}

double parse_threshold(const std::string& text) {
  if (text.empty() || text == "inf" || text == "infinity") return kInfinity;
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || std::isnan(value))
    throw ParseError("bad --threshold '" + text + "'");
  return value;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistent homology with representative cycles for Rips filtrations"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string threshold, synthetic;

  auto* compute = app.add_subcommand("compute", "Write the persistence diagram as JSON");
  add_common_options(*compute, cfg, threshold, synthetic);
  compute->add_option("--algorithm", cfg.algorithm, "Reduction algorithm")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Algorithm>{
          {"standard", Algorithm::kStandard},
          {"twist", Algorithm::kTwist},
          {"double-twist", Algorithm::kDoubleTwist}}));
  compute->add_flag("--representatives", cfg.representatives, "Include representative cycles");
  compute->add_flag("--drop-zero-persistence", cfg.drop_zero_persistence,
                    "Leave out pairs with equal birth and death");
  compute->add_option("--dump", cfg.dump, "Write the reduced boundary matrix dump here");

  auto* verify = app.add_subcommand("verify", "Run the equivalence and validity checks");
  add_common_options(*verify, cfg, threshold, synthetic);
  verify->add_option("--cap", cfg.verify_cap, "Maximum number of simplices");

  auto* bench = app.add_subcommand("bench", "Time naive vs double-twist reduction");
  add_common_options(*bench, cfg, threshold, synthetic);
  bench->add_flag("--skip-naive", cfg.skip_naive, "Skip the full boundary reduction");
  bench->add_option("--csv", cfg.csv, "Also write a CSV row here");
  bench->add_option("--repeat", cfg.repeat, "Report the best of this many runs")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dtwist: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    cfg.threshold = parse_threshold(threshold);
    if (!synthetic.empty()) cfg.synthetic = parse_synthetic(synthetic);
  } catch (const ParseError& e) {
    err << "dtwist: parse error: " << e.what() << '\n';
    return kExitParse;
  }

  if (compute->parsed()) return cmd_compute(cfg, out, err);
  if (verify->parsed()) return cmd_verify(cfg, out, err);
  return cmd_bench(cfg, out, err);
}

}  // namespace dtwist
