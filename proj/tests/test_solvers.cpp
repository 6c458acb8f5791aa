#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbrp/oracle.hpp"
#include "pbrp/rng.hpp"
#include "pbrp/solvers.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace pbrp;

namespace {

void check_outcome_invariants(const Instance& inst, const SolveReport& report) {
  Rational paid = 0;
  for (int i = 0; i < inst.agent_count(); ++i) {
    CHECK(report.outcome.payments[i] >= 0);
    CHECK(report.outcome.payments[i] <= inst.agents[i].budget);
    paid += report.outcome.payments[i];
  }
  CHECK(paid == inst.total_cost(report.outcome.funded));
  CHECK(report.welfare == social_welfare(inst, report.outcome.funded));
  CHECK(report.excess == payment_excess(inst, report.outcome.funded));
}

}  // namespace

TEST_CASE("single-minded view merges duplicate demands") {
  Instance inst;
  inst.projects = {{"a", 1}, {"b", 1}};
  inst.agents = {
      {1, SingleMindedValuation{{0}, 10}},
      {10, SingleMindedValuation{{0}, 1}},
      {2, SingleMindedValuation{{0, 1}, 3}},
  };
  const SingleMindedView view = build_single_minded_view(inst);
  REQUIRE(view.agents.size() == 2);
  CHECK(view.agents[0].demand == ProjectSet{0});
  CHECK(view.agents[0].value == 11);
  CHECK(view.agents[0].budget == 11);
  CHECK(view.agents[0].capped == 2);  // min(1,10) + min(10,1), not min(11,11)
  CHECK(view.merged_index_of_agent == std::vector<int>{0, 0, 1});

  Instance additive = fixtures::towns_instance();
  CHECK_THROWS_AS(build_single_minded_view(additive), Error);
}

TEST_CASE("additive welfare fptas") {
  const Instance towns = fixtures::towns_instance();
  const SolveReport report = uwo_additive_fptas(towns, Rational(1, 10));
  CHECK(report.outcome.funded == ProjectSet{1, 2});
  CHECK(report.welfare == 5);
  check_outcome_invariants(towns, report);

  Instance broke = towns;
  for (auto& agent : broke.agents) agent.budget = 0;
  CHECK(uwo_additive_fptas(broke, Rational(1, 10)).outcome.funded.empty());

  CHECK_THROWS_AS(uwo_additive_fptas(towns, Rational(0)), Error);
  CHECK_THROWS_AS(uwo_additive_fptas(fixtures::laminar_example(), Rational(1, 2)), Error);
}

TEST_CASE("additive fptas guarantee against the oracle") {
  Rng rng(301);
  for (const Rational eps : {Rational(1, 2), Rational(1, 10)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Instance inst = testgen::random_additive(rng, 5, 9);
      const SolveReport report = uwo_additive_fptas(inst, eps);
      const Rational opt = brute_uwo(inst).objective;
      CHECK(report.welfare >= (1 - eps) * opt);
      CHECK(inst.total_cost(report.outcome.funded) <= inst.total_budget());
    }
  }
}

TEST_CASE("identical costs greedy is exact") {
  Instance inst;
  inst.projects = {{"a", 1}, {"b", 1}, {"c", 1}};
  inst.agents = {{2, AdditiveValuation{{3, Rational(1, 2), 2}}}};
  const SolveReport report = uwo_identical_costs(inst);
  CHECK(report.outcome.funded == ProjectSet{0, 2});
  CHECK(report.welfare == 3);

  Instance hopeless;
  hopeless.projects = {{"a", 2}, {"b", 2}};
  hopeless.agents = {{5, AdditiveValuation{{1, 1}}}};
  CHECK(uwo_identical_costs(hopeless).outcome.funded.empty());

  Instance mixed_costs;
  mixed_costs.projects = {{"a", 1}, {"b", 2}};
  mixed_costs.agents = {{1, AdditiveValuation{{1, 1}}}};
  CHECK_THROWS_AS(uwo_identical_costs(mixed_costs), Error);

  Rng rng(303);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance random = testgen::random_identical_costs(rng, 5, 8);
    CHECK(uwo_identical_costs(random).welfare == brute_uwo(random).objective);
  }
}

TEST_CASE("single-minded maxpe worked examples") {
  SUBCASE("minimal optimum is the empty set") {
    Instance inst;
    inst.projects = {{"a", 2}, {"b", 2}};
    inst.agents = {
        {2, SingleMindedValuation{{0}, 3}},
        {1, SingleMindedValuation{{0, 1}, 5}},
    };
    const MaxPeResult res = maxpe_single_minded(inst);
    CHECK(res.projects.empty());
    CHECK(res.excess == 0);
  }

  SUBCASE("positive extraction") {
    Instance inst;
    inst.projects = {{"a", 2}};
    inst.agents = {{4, SingleMindedValuation{{0}, 5}}};
    const MaxPeResult res = maxpe_single_minded(inst);
    CHECK(res.projects == ProjectSet{0});
    CHECK(res.excess == 2);
  }

  SUBCASE("laminar example") {
    const MaxPeResult res = maxpe_single_minded(fixtures::laminar_example());
    CHECK(res.projects == ProjectSet{2});
    CHECK(res.excess == 1);
  }
}

TEST_CASE("single-minded maxpe equals brute force") {
  Rng rng(305);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testgen::random_single_minded(rng, 7, 7);
    const MaxPeResult res = maxpe_single_minded(inst);
    const OracleResult oracle = brute_maxpe(inst);
    CHECK(res.excess == oracle.objective);
    CHECK(payment_excess(inst, res.projects) == res.excess);
    // minimality: the result sits inside every optimum, including the
    // canonical oracle winner
    CHECK(is_subset(res.projects, oracle.best));
  }
}

TEST_CASE("every maxpe set extends to a participation-optimal bundle") {
  Rng rng(307);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testgen::random_single_minded(rng, 6, 6);
    const MaxPeResult res = maxpe_single_minded(inst);
    CHECK(brute::best_wp_welfare_containing(inst, res.projects) ==
          brute_uwo_wp(inst).objective);
  }
}

TEST_CASE("laminar participation fptas") {
  SUBCASE("worked example") {
    const Instance inst = fixtures::laminar_example();
    const SolveReport report = uwowp_laminar_fptas(inst, Rational(1, 10));
    CHECK(report.outcome.funded == ProjectSet{0, 1, 2});
    CHECK(report.welfare == 6);
    CHECK(report.excess >= 0);
    check_outcome_invariants(inst, report);
    CHECK(brute_uwo_wp(inst).objective == 6);
  }

  SUBCASE("already optimal maxpe set is returned as is") {
    Instance inst;
    inst.projects = {{"a", 1}};
    inst.agents = {{2, SingleMindedValuation{{0}, 3}}};
    const SolveReport report = uwowp_laminar_fptas(inst, Rational(1, 10));
    CHECK(report.outcome.funded == ProjectSet{0});
    CHECK(report.welfare == 2);
  }

  SUBCASE("five-set nested family with unit values and costs") {
    Instance inst;
    for (int j = 0; j < 6; ++j) inst.projects.push_back({"p" + std::to_string(j), 1});
    for (const auto& demand : fixtures::nested_family()) {
      inst.agents.push_back({1, SingleMindedValuation{demand, 1}});
    }
    const Rational eps(1, 10);
    const SolveReport report = uwowp_laminar_fptas(inst, eps);
    CHECK(report.excess >= 0);
    CHECK(report.welfare >= (1 - eps) * brute_uwo_wp(inst).objective);
  }

  SUBCASE("crossing demands are rejected") {
    Instance inst;
    inst.projects = {{"a", 1}, {"b", 1}, {"c", 1}};
    inst.agents = {
        {1, SingleMindedValuation{{0, 1}, 2}},
        {1, SingleMindedValuation{{1, 2}, 2}},
    };
    CHECK_THROWS_AS(uwowp_laminar_fptas(inst, Rational(1, 10)), Error);
  }
}

TEST_CASE("laminar fptas guarantee against the oracle") {
  Rng rng(309);
  const Rational eps(1, 10);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance inst = testgen::random_laminar_single_minded(rng, 7, 8);
    const SolveReport report = uwowp_laminar_fptas(inst, eps);
    CHECK(report.excess >= 0);
    CHECK(report.welfare >= (1 - eps) * brute_uwo_wp(inst).objective);
    check_outcome_invariants(inst, report);
  }
}

TEST_CASE("symmetric solver") {
  SUBCASE("worked example") {
    Instance inst;
    inst.projects = {{"a", 1}, {"b", 2}};
    inst.agents = {
        {2, SymmetricValuation{{0, 2, 3}}},
        {2, SymmetricValuation{{0, 1, 1}}},
    };
    const SolveReport report = symmetric_uwowp(inst);
    CHECK(report.outcome.funded == ProjectSet{0});
    CHECK(report.welfare == 2);
    CHECK(report.outcome.payments == std::vector<Rational>{1, 0});
  }

  SUBCASE("strictly negative prefixes give the empty bundle") {
    Instance inst;
    inst.projects = {{"a", 2}};
    inst.agents = {{5, SymmetricValuation{{0, 1}}}};  // fundable but welfare -1
    const SolveReport report = symmetric_uwowp(inst);
    CHECK(report.outcome.funded.empty());
    CHECK(report.welfare == 0);
  }

  SUBCASE("exact cover across identical agents") {
    const int n = 4;
    Instance inst;
    inst.projects = {{"a", n}};
    for (int i = 0; i < n; ++i) {
      inst.agents.push_back({1, SymmetricValuation{{0, 1}}});
    }
    const SolveReport report = symmetric_uwowp(inst);
    CHECK(report.outcome.funded == ProjectSet{0});
    CHECK(report.welfare == 0);
    CHECK(report.outcome.payments == std::vector<Rational>(n, Rational(1)));
  }

  SUBCASE("wrong class is rejected") {
    CHECK_THROWS_AS(symmetric_uwowp(fixtures::towns_instance()), Error);
  }
}

TEST_CASE("symmetric solver matches the oracle") {
  Rng rng(311);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testgen::random_symmetric(rng, 5, 7);
    const SolveReport report = symmetric_uwowp(inst);
    CHECK(report.welfare == brute_uwo_wp(inst).objective);
    CHECK(report.excess >= 0);
    check_outcome_invariants(inst, report);
  }
}

TEST_CASE("greedy heuristic") {
  SUBCASE("towns example is solved optimally") {
    const Instance towns = fixtures::towns_instance();
    const SolveReport report = greedy_uwowp(towns);
    CHECK(report.outcome.funded == ProjectSet{1, 2});
    CHECK(report.welfare == 5);
    check_outcome_invariants(towns, report);
  }

  SUBCASE("enabler example shows suboptimality") {
    const Instance inst = fixtures::enabler_instance();
    const SolveReport report = greedy_uwowp(inst);
    // ranking P1(99), P3(20.99), P2(9), P4(1): P1 is unaffordable alone,
    // P3 is taken, P2 then breaks participation, P4 still fits
    CHECK(report.outcome.funded == ProjectSet{2, 3});
    CHECK(report.welfare == Rational(2199, 100));
    CHECK(report.welfare < brute_uwo_wp(inst).objective);
  }

  SUBCASE("empty instance") {
    Instance inst;
    inst.agents = {{1, AdditiveValuation{{}}}};
    CHECK(greedy_uwowp(inst).outcome.funded.empty());
  }

  SUBCASE("zero-cost projects come first and always fit") {
    Instance inst;
    inst.projects = {{"free", 0}, {"paid", 1}};
    inst.agents = {{1, AdditiveValuation{{0, 2}}}};
    const SolveReport report = greedy_uwowp(inst);
    CHECK(report.outcome.funded == ProjectSet{0, 1});
  }
}

TEST_CASE("greedy output is always fundable and never beats the oracle") {
  Rng rng(313);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testgen::random_mixed(rng, 6, 6);
    const SolveReport report = greedy_uwowp(inst);
    CHECK(report.excess >= 0);
    CHECK(report.welfare >= 0);
    CHECK(report.welfare <= brute_uwo_wp(inst).objective);
    check_outcome_invariants(inst, report);
  }
}

TEST_CASE("laminar set-union knapsack") {
  SUBCASE("worked example") {
    SukpInstance s;
    s.item_sets = {{0}, {0, 1}, {2}};
    s.item_values = {3, 5, 2};
    s.element_weights = {2, 3, 1};
    s.capacity = 5;
    const SukpSolution sol = sukp_laminar_fptas(s, Rational(0));
    CHECK(sol.items == std::vector<int>{0, 1});
    CHECK(sol.value == 8);
  }

  SUBCASE("everything fits") {
    SukpInstance s;
    s.item_sets = {{0}, {1}, {0, 1}};
    s.item_values = {1, 2, 4};
    s.element_weights = {3, 3};
    s.capacity = 6;
    const SukpSolution sol = sukp_laminar_fptas(s, Rational(0));
    CHECK(sol.items == std::vector<int>{0, 1, 2});
    CHECK(sol.value == 7);
  }

  SUBCASE("disjoint singletons behave like plain knapsack") {
    SukpInstance s;
    s.item_sets = {{0}, {1}, {2}};
    s.item_values = {6, 10, 12};
    s.element_weights = {1, 2, 3};
    s.capacity = 5;
    CHECK(sukp_laminar_fptas(s, Rational(0)).value == 22);
  }

  SUBCASE("crossing item sets are rejected") {
    SukpInstance s;
    s.item_sets = {{0, 1}, {1, 2}};
    s.item_values = {1, 1};
    s.element_weights = {1, 1, 1};
    s.capacity = 3;
    CHECK_THROWS_AS(sukp_laminar_fptas(s, Rational(0)), Error);
  }
}

TEST_CASE("set-union knapsack guarantee and feasibility") {
  Rng rng(317);
  const Rational eps(1, 10);
  for (int trial = 0; trial < 150; ++trial) {
    const SukpInstance s = testgen::random_laminar_sukp(rng, 7, 8);
    const SukpSolution sol = sukp_laminar_fptas(s, eps);
    CHECK(sol.value >= (1 - eps) * brute::sukp_best_value(s));

    std::vector<bool> used(s.element_weights.size(), false);
    for (int i : sol.items) {
      for (int e : s.item_sets[i]) used[e] = true;
    }
    Rational weight = 0;
    for (std::size_t e = 0; e < used.size(); ++e) {
      if (used[e]) weight += s.element_weights[e];
    }
    CHECK(weight <= s.capacity);
  }
}
