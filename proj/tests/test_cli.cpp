#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pbrp/io.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const fs::path kWork = fs::temp_directory_path() / "pbrp_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(PBRP_CLI_PATH) + " " + args + " > " +
                          (kWork / "stdout.txt").string() + " 2> " +
                          (kWork / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct WorkDir {
  WorkDir() { fs::create_directories(kWork); }
  ~WorkDir() { fs::remove_all(kWork); }
};

}  // namespace

TEST_CASE("cli round trip: gen, solve, check") {
  WorkDir guard;
  const auto inst = (kWork / "inst.json").string();
  const auto report = (kWork / "report.json").string();

  REQUIRE(run("gen --family uniform --n 4 --m 3 --seed 7 --output " + inst) == 0);
  REQUIRE(run("solve --input " + inst + " --algorithm greedy --output " + report) == 0);

  const Json doc = Json::parse(slurp(report));
  CHECK(doc["algorithm"] == "greedy");
  CHECK(doc.contains("welfare"));
  CHECK(doc["outcome"]["payments"].size() == 4);

  // the emitted report doubles as a checkable outcome document
  CHECK(run("check --input " + report) == 0);
  CHECK(slurp(kWork / "stdout.txt").find("weak_participation: yes") != std::string::npos);

  CHECK(run("check --input " + inst) == 0);
}

TEST_CASE("cli solve variants agree on the towns fixture") {
  WorkDir guard;
  const auto inst = (kWork / "towns.json").string();
  {
    std::ofstream out(inst);
    out << pbrp::save_instance(pbrp::fixtures::towns_instance());
  }
  for (const std::string algorithm : {"oracle-uwo", "oracle-uwowp", "uwo-fptas", "greedy"}) {
    const auto report = (kWork / (algorithm + ".json")).string();
    REQUIRE(run("solve --input " + inst + " --algorithm " + algorithm + " --output " +
                report) == 0);
    const Json doc = Json::parse(slurp(report));
    CHECK(doc["funded"] == Json::array({1, 2}));
    CHECK(doc["welfare"] == "5/1");
  }
}

TEST_CASE("cli experiment emits byte-identical csv under a fixed seed") {
  WorkDir guard;
  const auto spec = (kWork / "spec.json").string();
  {
    std::ofstream out(spec);
    out << R"({"families": ["uniform"], "n_list": [4], "m": 3, "trials": 5,
               "base_seed": 5, "algorithm": "greedy", "oracle": true})";
  }
  const auto csv1 = (kWork / "a.csv").string();
  const auto csv2 = (kWork / "b.csv").string();
  REQUIRE(run("experiment --spec " + spec + " --out-csv " + csv1) == 0);
  REQUIRE(run("experiment --spec " + spec + " --out-csv " + csv2) == 0);
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK(slurp(csv1).find("family,n,m,trial,seed") == 0);
}

TEST_CASE("cli converts pabulib files") {
  WorkDir guard;
  const auto pb = (kWork / "tiny.pb").string();
  {
    std::ofstream out(pb);
    out << pbrp::fixtures::kMinimalPabulib;
  }
  const auto inst = (kWork / "converted.json").string();
  REQUIRE(run("convert-pabulib --input " + pb + " --output " + inst) == 0);
  const Json doc = Json::parse(slurp(inst));
  CHECK(doc["agents"].size() == 2);
  CHECK(doc["projects"].size() == 2);

  const auto csv = (kWork / "bench.csv").string();
  REQUIRE(run("pabulib-bench --dir " + kWork.string() + " --out-csv " + csv) == 0);
  CHECK(slurp(csv).find("file,n,m,alg_sw,opt_sw,ratio") == 0);
  CHECK(slurp(kWork / "stdout.txt").find("ratio>0.98") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  WorkDir guard;
  CHECK(run("") == 1);                                             // usage
  CHECK(run("solve --algorithm greedy") == 1);                     // missing required
  CHECK(run("solve --input /nonexistent.json --algorithm greedy") == 2);
  CHECK(run("gen --family martian --n 2 --m 2") == 2);

  const auto inst = (kWork / "inst.json").string();
  REQUIRE(run("gen --family uniform --n 2 --m 2 --seed 1 --output " + inst) == 0);
  CHECK(run("solve --input " + inst + " --algorithm uwo-fptas --epsilon 2/1") == 3);
  CHECK(run("solve --input " + inst + " --algorithm symmetric") == 3);  // wrong class
  CHECK(run("--help") == 0);
}
