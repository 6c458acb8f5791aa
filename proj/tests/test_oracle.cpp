#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbrp/oracle.hpp"
#include "pbrp/rng.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace pbrp;

TEST_CASE("towns example optima") {
  const Instance inst = fixtures::towns_instance();

  const OracleResult uwo = brute_uwo(inst);
  CHECK(uwo.best == ProjectSet{1, 2});
  CHECK(uwo.objective == 5);
  CHECK(uwo.tie_count == 1);

  const OracleResult wp = brute_uwo_wp(inst);
  CHECK(wp.best == ProjectSet{1, 2});
  CHECK(wp.objective == 5);

  const OracleResult pe = brute_maxpe(inst);
  CHECK(pe.best == ProjectSet{2});
  CHECK(pe.objective == 3);
}

TEST_CASE("enabler example forces the cheap companion project") {
  const OracleResult wp = brute_uwo_wp(fixtures::enabler_instance());
  CHECK(wp.best == ProjectSet{0, 3});
  CHECK(wp.objective == 100);
}

TEST_CASE("degenerate instances") {
  Instance broke;
  broke.projects = {{"a", 1}, {"b", 1}};
  broke.agents = {{0, AdditiveValuation{{2, 2}}}};
  CHECK(brute_uwo(broke).best.empty());
  CHECK(brute_uwo(broke).objective == 0);

  Instance solo;
  solo.projects = {{"a", 1}};
  solo.agents = {{1, AdditiveValuation{{3}}}};
  CHECK(brute_uwo(solo).best == ProjectSet{0});
  CHECK(brute_uwo(solo).objective == 2);
}

TEST_CASE("participation can forbid the welfare optimum") {
  // the valuing agent has no budget, the funding agent sees no value
  Instance inst;
  inst.projects = {{"a", 1}};
  inst.agents = {
      {0, AdditiveValuation{{2}}},
      {1, AdditiveValuation{{0}}},
  };
  CHECK(brute_uwo(inst).best == ProjectSet{0});
  CHECK(brute_uwo(inst).objective == 1);
  CHECK(brute_uwo_wp(inst).best.empty());
  CHECK(brute_uwo_wp(inst).objective == 0);
}

TEST_CASE("maxpe on a partition-style instance") {
  Instance inst;
  inst.projects = {{"p0", Rational(1, 2)}, {"p1", Rational(1, 2)}, {"p2", 1}};
  inst.agents = {{2, AdditiveValuation{{1, 1, 2}}}};
  const OracleResult pe = brute_maxpe(inst);
  CHECK(pe.objective == 1);
  CHECK(pe.best == ProjectSet{2});  // smallest cardinality wins the tie
  CHECK(pe.tie_count == 2);         // {0,1} reaches 1 as well
}

TEST_CASE("ties break toward small then lexicographic bundles") {
  Instance inst;
  inst.projects = {{"a", 1}, {"b", 1}};
  inst.agents = {{2, AdditiveValuation{{2, 2}}}};
  // {0}, {1} both give SW 1; {0,1} gives 2
  CHECK(brute_uwo(inst).best == ProjectSet{0, 1});

  Instance flat;
  flat.projects = {{"a", 1}, {"b", 1}};
  flat.agents = {{2, AdditiveValuation{{1, 1}}}};
  // every bundle has SW 0; the empty set is canonical
  const OracleResult res = brute_uwo(flat);
  CHECK(res.best.empty());
  CHECK(res.tie_count == 4);
}

TEST_CASE("project cap guard") {
  Instance inst;
  for (int j = 0; j < 26; ++j) inst.projects.push_back({"p", 0});
  inst.agents = {{0, SymmetricValuation{std::vector<Rational>(27, 0)}}};
  CHECK_THROWS_AS(brute_uwo(inst), Error);
}

TEST_CASE("participation never beats the unconstrained optimum") {
  Rng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testgen::random_mixed(rng, 5, 6);
    CHECK(brute_uwo_wp(inst).objective <= brute_uwo(inst).objective);
    CHECK(brute_maxpe(inst).objective >= 0);
  }
}

TEST_CASE("identical inputs give identical results") {
  Rng rng(7);
  const Instance inst = testgen::random_mixed(rng, 5, 6);
  const OracleResult a = brute_uwo_wp(inst);
  const OracleResult b = brute_uwo_wp(inst);
  CHECK(a.best == b.best);
  CHECK(a.objective == b.objective);
  CHECK(a.tie_count == b.tie_count);
}
