#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pbrp/core.hpp"
#include "pbrp/io.hpp"

namespace pbrp {

struct ExperimentSpec {
  std::vector<SyntheticFamily> families;
  std::vector<int> agent_counts;
  int project_count = 5;
  int trials = 1;
  std::uint64_t base_seed = 0;
  std::string algorithm = "greedy";    // greedy | uwo-fptas
  Rational epsilon = Rational(1, 10);  // used by uwo-fptas
  bool run_oracle = true;
};

ExperimentSpec parse_experiment_spec(const std::string& json_text);

struct TrialRow {
  std::string family;
  int n = 0;
  int m = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  Rational alg_sw;
  Rational opt_sw;
  Rational ratio;
  bool has_oracle = false;
  std::int64_t alg_ms = 0;
  std::int64_t opt_ms = 0;
};

struct CellSummary {
  std::string family;
  int n = 0;
  int m = 0;
  int trials = 0;
  Rational median;
  Rational p10;
  Rational mean;
  Rational min;
};

struct RatioSummary {
  std::vector<CellSummary> cells;
};

struct ExperimentResult {
  RatioSummary summary;
  std::vector<TrialRow> rows;
};

// Trial seeds are base_seed XOR cell index XOR trial index; rows come out in
// (cell, trial) order, so a fixed seed yields byte-identical CSV output.
// Wall-clock columns stay zero unless measure_time is set.
ExperimentResult run_experiment(const ExperimentSpec& spec, bool measure_time = false);

// ratio of algorithm welfare to oracle welfare; 0/0 counts as 1
Rational welfare_ratio(const Rational& algorithm_sw, const Rational& oracle_sw);

// nearest-rank percentile: the ceil(percent/100 * k)-th smallest sample
Rational nearest_rank(std::vector<Rational> samples, int percent);

void write_trial_csv(std::ostream& out, const std::vector<TrialRow>& rows);
void write_summary_csv(std::ostream& out, const RatioSummary& summary);

struct PabulibBenchRow {
  std::string file;
  int n = 0;
  int m = 0;
  Rational alg_sw;
  Rational opt_sw;
  Rational ratio;
};

struct PabulibBenchResult {
  std::vector<PabulibBenchRow> rows;
  std::vector<std::string> notices;  // skipped files with reasons
  RatioSummary summary;              // one aggregate cell
  Rational fraction_above_098;
  Rational fraction_above_075;
};

// Converts every .pb file (at most max_projects projects) in the directory,
// runs the algorithm against the exhaustive participation-constrained
// optimum, and reports ratio statistics and threshold fractions.
PabulibBenchResult summarize_pabulib(const std::string& directory, const std::string& algorithm,
                                     const Rational& epsilon, int max_projects = 20);

void write_pabulib_csv(std::ostream& out, const std::vector<PabulibBenchRow>& rows);

}  // namespace pbrp
