#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eco/analysis.hpp"
#include "eco/problem.hpp"
#include "eco/trace.hpp"

namespace eco::harness {

enum class Suite { classic, engineering, single };
enum class Family { classic, engineering };
enum class Algorithm { eco, pso };

std::string to_string(Suite s);
std::string to_string(Algorithm a);
std::optional<Suite> parse_suite(const std::string& name);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct CatalogEntry {
  std::string id;
  Family family;
  Problem problem;
  std::optional<Point> reference_point;  ///< engineering problems only
};

/// Problem ids of a suite, in catalog order (f1..f23 or rc15..rc31).
std::vector<std::string> suite_ids(Suite suite);

/// Looks up f1..f23 or rc15/rc17/rc19/rc20/rc31. `dim` applies to the
/// variable-dimension classic functions. Throws UnknownFunction.
CatalogEntry lookup(const std::string& id, std::size_t dim = 30);

/// Engineering budget schedule keyed on dimension.
std::size_t engineering_budget(std::size_t dim);

/// Classic functions: 10000 * D; engineering: the dimension-keyed schedule;
/// an explicit override wins.
std::size_t resolve_budget(const CatalogEntry& entry, std::optional<std::size_t> override_fes = {});

struct ExperimentSpec {
  Suite suite = Suite::classic;
  /// Explicit problem ids; empty means the whole suite. Required for Suite::single.
  std::vector<std::string> problems;
  std::vector<Algorithm> algorithms{Algorithm::eco};
  /// Dimensions for the variable-dimension classic functions. With more than
  /// one entry those problems are expanded to ids like "f1_d10".
  std::vector<std::size_t> dims{30};
  std::size_t runs = 25;
  std::optional<std::size_t> max_fes;
  std::uint64_t base_seed = 7;
  std::filesystem::path output_dir;  ///< empty: nothing is written
  unsigned threads = 0;              ///< 0: hardware concurrency
  bool timing = false;               ///< write timing.csv
  bool keep_traces = true;           ///< write per-run trace CSVs
};

struct RunRecord {
  std::string problem;
  Algorithm algorithm = Algorithm::eco;
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  double best_value = 0.0;
  double best_violation = 0.0;
  Point best_position;
  std::size_t fes_used = 0;
  std::size_t max_fes = 0;
  std::size_t iterations = 0;
  double wall_seconds = 0.0;
  RunTrace trace;

  bool feasible() const { return best_violation <= kFeasibilityTolerance; }
};

struct SummaryRow {
  std::string problem;
  Algorithm algorithm;
  analysis::RunSummary summary;
  double feasible_rate = 0.0;
};

struct PairwiseRow {
  std::string problem;
  Algorithm reference;
  Algorithm opponent;
  analysis::PairwiseVerdict verdict;
};

struct ExperimentReport {
  std::vector<std::string> problems;
  std::vector<Algorithm> algorithms;
  std::vector<RunRecord> records;  ///< ordered by (problem, algorithm, run)
  std::vector<SummaryRow> summary;
  std::vector<PairwiseRow> pairwise;
  std::vector<analysis::WinTieLoss> win_tie_loss;  ///< algorithms[0] vs algorithms[1..]
  std::optional<analysis::FriedmanResult> friedman;

  /// Best values of one (problem, algorithm) cell, by run index.
  std::vector<double> bests(const std::string& problem, Algorithm algorithm) const;
};

/// Single run of one algorithm on one problem.
RunRecord execute_run(const CatalogEntry& entry, Algorithm algorithm, std::size_t run_index,
                      std::uint64_t base_seed, std::size_t max_fes);

/// Validates the spec, executes every (problem, algorithm, run) job and
/// assembles the report in deterministic order. Writes report files when
/// spec.output_dir is set. Throws UnknownFunction / std::invalid_argument on
/// a bad spec and std::runtime_error on IO failure.
ExperimentReport run_experiment(const ExperimentSpec& spec);

void write_report(const ExperimentSpec& spec, const ExperimentReport& report);

/// "%.9g".
std::string format_number(double v);

}  // namespace eco::harness
