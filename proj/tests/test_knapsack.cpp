#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbrp/knapsack.hpp"
#include "pbrp/rng.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace pbrp;

namespace {

KnapsackInstance small_knapsack() { return {{1, 2, 3}, {6, 10, 12}, 5}; }

KnapsackInstance random_knapsack(Rng& rng, int max_items) {
  KnapsackInstance k;
  const int n = static_cast<int>(rng.range(0, max_items));
  for (int i = 0; i < n; ++i) {
    k.weights.push_back(rng.range(0, 12));
    k.profits.push_back(rng.range(0, 15));
  }
  k.capacity = rng.range(0, 20);
  return k;
}

// laminar KCG instance over a random family with integer profits
KcgInstance random_kcg(Rng& rng, LaminarForest& forest, bool integer_profits) {
  const int m = static_cast<int>(rng.range(2, 8));
  const auto family = testgen::random_laminar_family(rng, m, 8);
  forest = LaminarForest::from_family(family);
  KcgInstance k;
  k.graph = ConflictGraph::from_edges(static_cast<int>(family.size()),
                                      forest.comparable_pairs());
  for (std::size_t i = 0; i < family.size(); ++i) {
    k.profits.push_back(integer_profits ? Rational(rng.range(0, 9))
                                        : testgen::small_rational(rng));
    k.weights.push_back(testgen::small_rational(rng, 4));
  }
  k.capacity = testgen::small_rational(rng, 6);
  return k;
}

}  // namespace

TEST_CASE("exact knapsack worked examples") {
  const KnapsackSolution sol = knapsack_exact(small_knapsack());
  CHECK(sol.chosen == std::vector<int>{1, 2});
  CHECK(sol.profit == 22);
  CHECK(sol.weight == 5);

  KnapsackInstance zero = small_knapsack();
  zero.capacity = 0;
  CHECK(knapsack_exact(zero).chosen.empty());
  CHECK(knapsack_exact(zero).profit == 0);

  const KnapsackInstance single{{2}, {7}, 3};
  CHECK(knapsack_exact(single).chosen == std::vector<int>{0});

  CHECK_THROWS_AS(knapsack_exact({{1}, {1}, -1}), Error);
}

TEST_CASE("exact knapsack matches enumeration") {
  Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const KnapsackInstance k = random_knapsack(rng, 12);
    const KnapsackSolution sol = knapsack_exact(k);
    std::int64_t weight = 0;
    std::int64_t profit = 0;
    for (int i : sol.chosen) {
      weight += k.weights[i];
      profit += k.profits[i];
    }
    CHECK(weight == sol.weight);
    CHECK(profit == sol.profit);
    CHECK(weight <= k.capacity);
    CHECK(sol.profit == brute::knapsack_best_profit(k));
  }
}

TEST_CASE("fptas worked examples") {
  const KnapsackSolution half = knapsack_fptas(small_knapsack(), Rational(1, 2));
  CHECK(half.profit >= 11);
  CHECK(half.weight <= 5);

  // only {1,2} clears (1 - 1/10) * 22
  const KnapsackSolution tight = knapsack_fptas(small_knapsack(), Rational(1, 10));
  CHECK(tight.profit == 22);
  CHECK(tight.chosen == std::vector<int>{1, 2});

  CHECK(knapsack_fptas({{}, {}, 5}, Rational(1, 2)).chosen.empty());
  CHECK_THROWS_AS(knapsack_fptas(small_knapsack(), Rational(0)), Error);
  CHECK_THROWS_AS(knapsack_fptas(small_knapsack(), Rational(1)), Error);
  CHECK_THROWS_AS(knapsack_fptas(small_knapsack(), Rational(3, 2)), Error);
}

TEST_CASE("fptas guarantee on random instances") {
  Rng rng(31);
  for (const Rational eps : {Rational(1, 2), Rational(1, 10)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const KnapsackInstance k = random_knapsack(rng, 10);
      const std::int64_t opt = brute::knapsack_best_profit(k);
      const KnapsackSolution sol = knapsack_fptas(k, eps);
      CHECK(Rational(sol.profit) >= (1 - eps) * opt);
      CHECK(sol.weight <= k.capacity);
    }
  }
}

TEST_CASE("laminar forest construction") {
  const auto family = fixtures::nested_family();  // {0,1,2,3},{1,2},{0},{1},{5}
  const LaminarForest forest = LaminarForest::from_family(family);
  CHECK(forest.parent[0] == -1);
  CHECK(forest.parent[1] == 0);
  CHECK(forest.parent[2] == 0);
  CHECK(forest.parent[3] == 1);
  CHECK(forest.parent[4] == -1);
  CHECK(forest.roots() == std::vector<int>{0, 4});
  CHECK(forest.comparable_pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 3}});

  CHECK_THROWS_AS(LaminarForest::from_family({{0, 1}, {1, 2}}), Error);

  // equal sets chain so they still conflict with each other
  const LaminarForest dup = LaminarForest::from_family({{0}, {0}});
  CHECK(dup.comparable_pairs() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("conflict knapsack worked examples") {
  SUBCASE("one containment edge") {
    LaminarForest forest = LaminarForest::from_family({{0, 1}, {1}, {2}});
    KcgInstance k;
    k.graph = ConflictGraph::from_edges(3, forest.comparable_pairs());
    k.profits = {5, 4, 3};
    k.weights = {2, 2, 1};
    k.capacity = 3;
    const KcgSolution sol = laminar_conflict_knapsack(k, forest, Rational(0));
    CHECK(sol.chosen == std::vector<int>{0, 2});
    CHECK(sol.profit == 8);
  }

  SUBCASE("edgeless reduces to plain knapsack") {
    LaminarForest forest = LaminarForest::from_family({{0}, {1}, {2}});
    KcgInstance k;
    k.graph = ConflictGraph::from_edges(3, {});
    k.profits = {6, 10, 12};
    k.weights = {1, 2, 3};
    k.capacity = 5;
    CHECK(laminar_conflict_knapsack(k, forest, Rational(0)).profit == 22);
  }

  SUBCASE("sibling pair under one root") {
    // conflicts 0-1 and 1-2 only; with ample capacity take both leaves
    LaminarForest forest = LaminarForest::from_family({{0}, {0, 1, 2}, {1}});
    KcgInstance k;
    k.graph = ConflictGraph::from_edges(3, forest.comparable_pairs());
    CHECK(k.graph.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    k.profits = {4, 6, 3};
    k.weights = {1, 1, 1};
    k.capacity = 100;
    const KcgSolution sol = laminar_conflict_knapsack(k, forest, Rational(0));
    CHECK(sol.profit == 7);
    CHECK(sol.chosen == std::vector<int>{0, 2});
  }

  SUBCASE("mismatched edges are rejected") {
    LaminarForest forest = LaminarForest::from_family({{0}, {1}});
    KcgInstance k;
    k.graph = ConflictGraph::from_edges(2, {{0, 1}});
    k.profits = {1, 1};
    k.weights = {0, 0};
    k.capacity = 1;
    CHECK_THROWS_AS(laminar_conflict_knapsack(k, forest, Rational(0)), Error);
  }

  SUBCASE("exact mode needs integers") {
    LaminarForest forest = LaminarForest::from_family({{0}});
    KcgInstance k;
    k.graph = ConflictGraph::from_edges(1, {});
    k.profits = {Rational(1, 2)};
    k.weights = {0};
    k.capacity = 1;
    CHECK_THROWS_AS(laminar_conflict_knapsack(k, forest, Rational(0)), Error);
    CHECK(laminar_conflict_knapsack(k, forest, Rational(1, 10)).profit == Rational(1, 2));
  }
}

TEST_CASE("conflict knapsack agrees with antichain enumeration") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    LaminarForest forest;
    const KcgInstance k = random_kcg(rng, forest, true);
    const KcgSolution sol = laminar_conflict_knapsack(k, forest, Rational(0));
    CHECK(sol.profit == brute::kcg_best_profit(k));
    CHECK(sol.weight <= k.capacity);
    for (std::size_t a = 0; a < sol.chosen.size(); ++a) {
      for (std::size_t b = a + 1; b < sol.chosen.size(); ++b) {
        CHECK(!k.graph.has_edge(sol.chosen[a], sol.chosen[b]));
      }
    }
  }
}

TEST_CASE("conflict knapsack fptas guarantee") {
  Rng rng(43);
  const Rational eps(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    LaminarForest forest;
    const KcgInstance k = random_kcg(rng, forest, false);
    const KcgSolution sol = laminar_conflict_knapsack(k, forest, eps);
    CHECK(sol.profit >= (1 - eps) * brute::kcg_best_profit(k));
    CHECK(sol.weight <= k.capacity);
  }
}

TEST_CASE("chordality basics") {
  const ConflictGraph triangle = ConflictGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_chordal(triangle).chordal);

  const ConflictGraph square = ConflictGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_FALSE(is_chordal(square).chordal);

  const ConflictGraph square_with_chord =
      ConflictGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(is_chordal(square_with_chord).chordal);

  CHECK(is_chordal(ConflictGraph::from_edges(0, {})).chordal);
}

TEST_CASE("containment graph of a nested family is chordal") {
  // one chain, one sibling pair, one loner, drawn as sets over six labels
  const std::vector<std::vector<int>> family = {
      {0, 1, 2, 3}, {1, 2}, {0}, {1}, {5}};
  const LaminarForest forest = LaminarForest::from_family(family);
  const ConflictGraph g =
      ConflictGraph::from_edges(static_cast<int>(family.size()), forest.comparable_pairs());
  const ChordalityResult res = is_chordal(g);
  CHECK(res.chordal);
  CHECK(res.elimination_order.size() == family.size());
}

TEST_CASE("random containment graphs are chordal with valid witnesses") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng.range(2, 12));
    const auto family = testgen::random_laminar_family(rng, m, 12);
    const LaminarForest forest = LaminarForest::from_family(family);
    const ConflictGraph g = ConflictGraph::from_edges(static_cast<int>(family.size()),
                                                      forest.comparable_pairs());
    const ChordalityResult res = is_chordal(g);
    CHECK(res.chordal);

    // witness: later neighbours of every vertex form a clique
    std::vector<int> pos(family.size());
    for (std::size_t i = 0; i < res.elimination_order.size(); ++i) {
      pos[res.elimination_order[i]] = static_cast<int>(i);
    }
    for (int v = 0; v < g.node_count; ++v) {
      std::vector<int> later;
      for (int u = 0; u < g.node_count; ++u) {
        if (u != v && g.has_edge(u, v) && pos[u] > pos[v]) later.push_back(u);
      }
      for (std::size_t a = 0; a < later.size(); ++a) {
        for (std::size_t b = a + 1; b < later.size(); ++b) {
          CHECK(g.has_edge(later[a], later[b]));
        }
      }
    }
  }
}

TEST_CASE("chordality agrees with simplicial elimination on random graphs") {
  Rng rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.range(1, 8));
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng.below(2)) edges.emplace_back(a, b);
      }
    }
    const ConflictGraph g = ConflictGraph::from_edges(n, edges);
    CHECK(is_chordal(g).chordal == brute::chordal_by_elimination(n, g.edges));
  }
}
