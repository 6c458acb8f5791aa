#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbrp/experiment.hpp"
#include "pbrp/io.hpp"
#include "pbrp/oracle.hpp"
#include "pbrp/solvers.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace pbrp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::ParseError, "cannot write " + path);
  }
  out << content;
}

Instance load_validated(const std::string& path, bool drop_uncoverable) {
  const ValidationResult checked = validate_instance(load_instance(read_file(path)),
                                                     drop_uncoverable);
  for (const auto& warning : checked.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return checked.instance;
}

Json rational_array_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(format_rational(v));
  return arr;
}

Json report_json(const Instance& inst, const SolveReport& report,
                 std::optional<std::uint64_t> tie_count = std::nullopt) {
  Json doc;
  doc["algorithm"] = report.algorithm;
  if (report.epsilon) doc["epsilon"] = format_rational(*report.epsilon);
  doc["funded"] = report.outcome.funded;
  Json names = Json::array();
  for (int j : report.outcome.funded) names.push_back(inst.projects[j].name);
  doc["funded_names"] = std::move(names);
  doc["welfare"] = format_rational(report.welfare);
  doc["excess"] = format_rational(report.excess);
  if (tie_count) doc["tie_count"] = *tie_count;
  doc["outcome"] = Json{{"funded", report.outcome.funded},
                        {"payments", rational_array_json(report.outcome.payments)}};
  doc["instance"] = Json::parse(save_instance(inst));
  return doc;
}

int run_solve(const std::string& input, const std::string& algorithm,
              const std::string& epsilon_text, const std::string& output,
              bool no_drop) {
  const Instance inst = load_validated(input, !no_drop);
  const Rational eps = parse_rational(epsilon_text);

  Json doc;
  if (algorithm == "oracle-uwo") {
    const OracleResult res = brute_uwo(inst);
    doc = report_json(inst, make_report(inst, res.best, algorithm, std::nullopt, false),
                      res.tie_count);
  } else if (algorithm == "oracle-uwowp") {
    const OracleResult res = brute_uwo_wp(inst);
    doc = report_json(inst, make_report(inst, res.best, algorithm, std::nullopt, true),
                      res.tie_count);
  } else if (algorithm == "uwo-fptas") {
    doc = report_json(inst, uwo_additive_fptas(inst, eps));
  } else if (algorithm == "greedy") {
    doc = report_json(inst, greedy_uwowp(inst));
  } else if (algorithm == "symmetric") {
    doc = report_json(inst, symmetric_uwowp(inst));
  } else if (algorithm == "laminar-fptas") {
    doc = report_json(inst, uwowp_laminar_fptas(inst, eps));
  } else if (algorithm == "identical-costs") {
    doc = report_json(inst, uwo_identical_costs(inst));
  } else if (algorithm == "maxpe") {
    const MaxPeResult res = maxpe_single_minded(inst);
    doc = report_json(inst, make_report(inst, res.projects, algorithm, std::nullopt, true));
  } else {
    throw Error(ErrorCode::SchemaError, "unknown algorithm '" + algorithm + "'");
  }
  write_output(output, doc.dump(2) + "\n");
  return 0;
}

int run_check(const std::string& input) {
  const std::string text = read_file(input);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  if (doc.contains("instance") && doc.contains("outcome")) {
    const Instance inst = load_instance(doc["instance"].dump());
    Outcome outcome;
    for (const auto& j : doc["outcome"]["funded"]) outcome.funded.push_back(j.get<int>());
    outcome.funded = canonical_set(std::move(outcome.funded));
    for (const auto& p : doc["outcome"]["payments"]) {
      outcome.payments.push_back(parse_rational(p.get<std::string>()));
    }
    if (outcome.payments.size() != inst.agents.size()) {
      throw Error(ErrorCode::ArityMismatch, "payments length does not match agent count");
    }
    Rational paid = 0;
    bool feasible = true;
    for (int i = 0; i < inst.agent_count(); ++i) {
      if (outcome.payments[i] < 0 || outcome.payments[i] > inst.agents[i].budget) {
        feasible = false;
      }
      paid += outcome.payments[i];
    }
    const Rational cost = inst.total_cost(outcome.funded);
    const bool balanced = paid == cost;
    bool participating = true;
    for (int i = 0; i < inst.agent_count(); ++i) {
      if (agent_utility(inst, outcome, i) < 0) participating = false;
    }
    std::cout << "funded: " << Json(outcome.funded).dump() << "\n"
              << "cost: " << format_rational(cost) << "\n"
              << "paid: " << format_rational(paid) << "\n"
              << "within_budgets: " << (feasible ? "yes" : "no") << "\n"
              << "budget_balanced: " << (balanced ? "yes" : "no") << "\n"
              << "weak_participation: " << (participating ? "yes" : "no") << "\n"
              << "welfare: " << format_rational(social_welfare(inst, outcome.funded)) << "\n";
    if (!feasible || !balanced) {
      throw Error(ErrorCode::NotWpFundable, "outcome violates feasibility");
    }
    return 0;
  }

  const ValidationResult checked = validate_instance(load_instance(text), false);
  std::cout << "ok: " << checked.instance.project_count() << " projects, "
            << checked.instance.agent_count() << " agents\n";
  return 0;
}

int run_gen(const std::string& family, int n, int m, std::uint64_t seed,
            const std::string& output) {
  SyntheticConfig cfg;
  cfg.family = parse_family(family);
  cfg.agent_count = n;
  cfg.project_count = m;
  cfg.seed = seed;
  write_output(output, save_instance(gen_synthetic(cfg)));
  return 0;
}

int run_experiment_cmd(const std::string& spec_path, const std::string& csv_path,
                       const std::string& summary_path, bool timings) {
  const ExperimentSpec spec = parse_experiment_spec(read_file(spec_path));
  const ExperimentResult result = run_experiment(spec, timings);

  std::ostringstream csv;
  write_trial_csv(csv, result.rows);
  write_output(csv_path, csv.str());

  std::ostringstream summary;
  write_summary_csv(summary, result.summary);
  if (!summary_path.empty()) {
    write_output(summary_path, summary.str());
  }
  std::cerr << summary.str();
  return 0;
}

int run_convert(const std::string& input, const std::string& output) {
  const PabulibElection election = parse_pabulib(read_file(input));
  write_output(output, save_instance(pabulib_to_instance(election)));
  return 0;
}

int run_bench(const std::string& dir, const std::string& csv_path,
              const std::string& algorithm, const std::string& epsilon_text) {
  const PabulibBenchResult result =
      summarize_pabulib(dir, algorithm, parse_rational(epsilon_text));
  for (const auto& notice : result.notices) {
    std::cerr << "notice: " << notice << "\n";
  }
  std::ostringstream csv;
  write_pabulib_csv(csv, result.rows);
  write_output(csv_path, csv.str());

  std::cout << "elections: " << result.rows.size() << "\n"
            << "ratio>0.98: " << format_decimal(result.fraction_above_098, 4) << "\n"
            << "ratio>0.75: " << format_decimal(result.fraction_above_075, 4) << "\n";
  std::ostringstream summary;
  write_summary_csv(summary, result.summary);
  std::cout << summary.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers and experiment harness for budget-pooled project funding"};
  app.require_subcommand(1);

  std::string input;
  std::string output = "-";
  std::string algorithm = "greedy";
  std::string epsilon = "1/10";
  bool no_drop = false;

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--input", input, "instance JSON file")->required();
  solve->add_option("--algorithm", algorithm,
                    "oracle-uwo | oracle-uwowp | uwo-fptas | greedy | symmetric | "
                    "laminar-fptas | identical-costs | maxpe")
      ->required();
  solve->add_option("--epsilon", epsilon, "approximation parameter as p/q");
  solve->add_option("--output", output, "report destination (- for stdout)");
  solve->add_flag("--no-drop", no_drop, "fail on uncoverable projects instead of dropping");

  std::string family = "uniform";
  int gen_n = 10;
  int gen_m = 5;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  gen->add_option("--family", family, "uniform | normal | bernoulli")->required();
  gen->add_option("--n", gen_n, "agent count")->required();
  gen->add_option("--m", gen_m, "project count")->required();
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--output", output, "instance destination (- for stdout)");

  std::string spec_path;
  std::string csv_path;
  std::string summary_path;
  bool timings = false;
  auto* experiment = app.add_subcommand("experiment", "Run a synthetic sweep");
  experiment->add_option("--spec", spec_path, "experiment spec JSON")->required();
  experiment->add_option("--out-csv", csv_path, "per-trial CSV destination")->required();
  experiment->add_option("--summary-csv", summary_path, "per-cell summary CSV");
  experiment->add_flag("--timings", timings,
                       "record wall-clock columns (breaks byte-identical reruns)");

  auto* convert = app.add_subcommand("convert-pabulib", "Convert a .pb election file");
  convert->add_option("--input", input, "pabulib .pb file")->required();
  convert->add_option("--output", output, "instance destination (- for stdout)");

  std::string bench_dir;
  auto* bench = app.add_subcommand("pabulib-bench", "Benchmark a directory of .pb files");
  bench->add_option("--dir", bench_dir, "directory of .pb files")->required();
  bench->add_option("--out-csv", csv_path, "per-election CSV destination")->required();
  bench->add_option("--algorithm", algorithm, "greedy | uwo-fptas");
  bench->add_option("--epsilon", epsilon, "approximation parameter as p/q");

  auto* check = app.add_subcommand("check", "Validate an instance or outcome file");
  check->add_option("--input", input, "instance or solve-report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(input, algorithm, epsilon, output, no_drop);
    if (gen->parsed()) return run_gen(family, gen_n, gen_m, seed, output);
    if (experiment->parsed()) {
      return run_experiment_cmd(spec_path, csv_path, summary_path, timings);
    }
    if (convert->parsed()) return run_convert(input, output);
    if (bench->parsed()) return run_bench(bench_dir, csv_path, algorithm, epsilon);
    if (check->parsed()) return run_check(input);
  } catch (const Error& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
