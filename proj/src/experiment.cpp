#include "pbrp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pbrp/oracle.hpp"
#include "pbrp/solvers.hpp"

namespace pbrp {

namespace {

using Json = nlohmann::json;

constexpr int kRatioDigits = 9;

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct AlgorithmRun {
  Rational welfare;
  std::int64_t ms = 0;
};

AlgorithmRun run_algorithm(const std::string& algorithm, const Instance& inst,
                           const Rational& epsilon, bool measure_time) {
  const auto start = std::chrono::steady_clock::now();
  Rational welfare;
  if (algorithm == "greedy") {
    welfare = greedy_uwowp(inst).welfare;
  } else if (algorithm == "uwo-fptas") {
    welfare = uwo_additive_fptas(inst, epsilon).welfare;
  } else {
    throw Error(ErrorCode::SchemaError, "experiment algorithm must be greedy or uwo-fptas");
  }
  return {welfare, measure_time ? elapsed_ms(start) : 0};
}

AlgorithmRun run_oracle(const std::string& algorithm, const Instance& inst, bool measure_time) {
  const auto start = std::chrono::steady_clock::now();
  // compare each algorithm against the optimum of its own feasibility class
  const Rational welfare =
      algorithm == "uwo-fptas" ? brute_uwo(inst).objective : brute_uwo_wp(inst).objective;
  return {welfare, measure_time ? elapsed_ms(start) : 0};
}

CellSummary summarize_cell(std::string family, int n, int m,
                           const std::vector<Rational>& ratios) {
  CellSummary cell;
  cell.family = std::move(family);
  cell.n = n;
  cell.m = m;
  cell.trials = static_cast<int>(ratios.size());
  if (ratios.empty()) return cell;
  cell.median = nearest_rank(ratios, 50);
  cell.p10 = nearest_rank(ratios, 10);
  cell.min = *std::min_element(ratios.begin(), ratios.end());
  Rational sum = 0;
  for (const auto& r : ratios) sum += r;
  cell.mean = sum / static_cast<int>(ratios.size());
  return cell;
}

}  // namespace

Rational welfare_ratio(const Rational& algorithm_sw, const Rational& oracle_sw) {
  if (oracle_sw == 0) {
    return algorithm_sw == 0 ? Rational(1) : Rational(0);
  }
  return algorithm_sw / oracle_sw;
}

Rational nearest_rank(std::vector<Rational> samples, int percent) {
  if (samples.empty()) {
    throw Error(ErrorCode::SchemaError, "percentile of an empty sample");
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t k = samples.size();
  std::size_t rank = (percent * k + 99) / 100;  // ceil(percent/100 * k), 1-based
  if (rank == 0) rank = 1;
  return samples[rank - 1];
}

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::SchemaError, "experiment spec must be an object");
  }
  ExperimentSpec spec;
  try {
    for (const auto& f : doc.at("families")) {
      spec.families.push_back(parse_family(f.get<std::string>()));
    }
    for (const auto& n : doc.at("n_list")) {
      spec.agent_counts.push_back(n.get<int>());
    }
    spec.project_count = doc.at("m").get<int>();
    spec.trials = doc.at("trials").get<int>();
    spec.base_seed = doc.value("base_seed", std::uint64_t{0});
    spec.algorithm = doc.value("algorithm", std::string("greedy"));
    if (doc.contains("epsilon")) {
      spec.epsilon = parse_rational(doc.at("epsilon").get<std::string>());
    }
    spec.run_oracle = doc.value("oracle", true);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("experiment spec: ") + e.what());
  }
  return spec;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, bool measure_time) {
  if (spec.trials < 1) {
    throw Error(ErrorCode::SchemaError, "trials must be at least 1");
  }
  if (spec.families.empty() || spec.agent_counts.empty()) {
    throw Error(ErrorCode::SchemaError, "families and n_list must be nonempty");
  }
  if (spec.run_oracle && spec.project_count > kOracleProjectCap) {
    throw Error(ErrorCode::OracleCapExceeded,
                "oracle comparisons are capped at " + std::to_string(kOracleProjectCap) +
                    " projects");
  }

  ExperimentResult result;
  std::uint64_t cell_index = 0;
  for (const SyntheticFamily family : spec.families) {
    for (const int n : spec.agent_counts) {
      std::vector<Rational> ratios;
      ratios.reserve(spec.trials);
      for (int trial = 0; trial < spec.trials; ++trial) {
        TrialRow row;
        row.family = family_name(family);
        row.n = n;
        row.m = spec.project_count;
        row.trial = trial;
        row.seed = spec.base_seed ^ cell_index ^ static_cast<std::uint64_t>(trial);

        const Instance inst =
            gen_synthetic({family, n, spec.project_count, row.seed});
        const AlgorithmRun alg = run_algorithm(spec.algorithm, inst, spec.epsilon, measure_time);
        row.alg_sw = alg.welfare;
        row.alg_ms = alg.ms;
        if (spec.run_oracle) {
          const AlgorithmRun opt = run_oracle(spec.algorithm, inst, measure_time);
          row.opt_sw = opt.welfare;
          row.opt_ms = opt.ms;
          row.ratio = welfare_ratio(row.alg_sw, row.opt_sw);
          row.has_oracle = true;
          ratios.push_back(row.ratio);
        }
        result.rows.push_back(std::move(row));
      }
      if (spec.run_oracle) {
        result.summary.cells.push_back(
            summarize_cell(family_name(family), n, spec.project_count, ratios));
      }
      ++cell_index;
    }
  }
  return result;
}

void write_trial_csv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << "family,n,m,trial,seed,alg_sw,opt_sw,ratio,alg_ms,opt_ms\n";
  for (const auto& row : rows) {
    out << row.family << ',' << row.n << ',' << row.m << ',' << row.trial << ',' << row.seed
        << ',' << format_decimal(row.alg_sw, kRatioDigits) << ',';
    if (row.has_oracle) {
      out << format_decimal(row.opt_sw, kRatioDigits) << ','
          << format_decimal(row.ratio, kRatioDigits);
    } else {
      out << ',';
    }
    out << ',' << row.alg_ms << ',' << row.opt_ms << '\n';
  }
}

void write_summary_csv(std::ostream& out, const RatioSummary& summary) {
  out << "family,n,m,trials,median,p10,mean,min\n";
  for (const auto& cell : summary.cells) {
    out << cell.family << ',' << cell.n << ',' << cell.m << ',' << cell.trials << ','
        << format_decimal(cell.median, kRatioDigits) << ','
        << format_decimal(cell.p10, kRatioDigits) << ','
        << format_decimal(cell.mean, kRatioDigits) << ','
        << format_decimal(cell.min, kRatioDigits) << '\n';
  }
}

PabulibBenchResult summarize_pabulib(const std::string& directory, const std::string& algorithm,
                                     const Rational& epsilon, int max_projects) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::exists(directory)) {
    for (const auto& entry : fs::directory_iterator(directory)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pb") {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());

  PabulibBenchResult result;
  std::vector<Rational> ratios;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      std::ifstream in(path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const PabulibElection election = parse_pabulib(buffer.str());
      if (static_cast<int>(election.projects.size()) > max_projects) {
        result.notices.push_back(name + ": skipped, more than " +
                                 std::to_string(max_projects) + " projects");
        continue;
      }
      const Instance inst = pabulib_to_instance(election);
      PabulibBenchRow row;
      row.file = name;
      row.n = inst.agent_count();
      row.m = inst.project_count();
      row.alg_sw = run_algorithm(algorithm, inst, epsilon, false).welfare;
      row.opt_sw = run_oracle(algorithm, inst, false).welfare;
      row.ratio = welfare_ratio(row.alg_sw, row.opt_sw);
      ratios.push_back(row.ratio);
      result.rows.push_back(std::move(row));
    } catch (const Error& e) {
      result.notices.push_back(name + ": skipped, " + std::string(error_code_name(e.code())) +
                               ": " + e.what());
    }
  }

  result.summary.cells.push_back(summarize_cell("pabulib", 0, 0, ratios));
  int above_098 = 0;
  int above_075 = 0;
  for (const auto& r : ratios) {
    if (r > Rational(98, 100)) ++above_098;
    if (r > Rational(75, 100)) ++above_075;
  }
  if (!ratios.empty()) {
    result.fraction_above_098 = Rational(above_098, static_cast<int>(ratios.size()));
    result.fraction_above_075 = Rational(above_075, static_cast<int>(ratios.size()));
  }
  return result;
}

void write_pabulib_csv(std::ostream& out, const std::vector<PabulibBenchRow>& rows) {
  out << "file,n,m,alg_sw,opt_sw,ratio\n";
  for (const auto& row : rows) {
    out << row.file << ',' << row.n << ',' << row.m << ','
        << format_decimal(row.alg_sw, kRatioDigits) << ','
        << format_decimal(row.opt_sw, kRatioDigits) << ','
        << format_decimal(row.ratio, kRatioDigits) << '\n';
  }
}

}  // namespace pbrp
