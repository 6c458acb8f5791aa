#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pbrp/rational.hpp"

namespace pbrp {

struct KnapsackInstance {
  std::vector<std::int64_t> weights;   // nonnegative
  std::vector<std::int64_t> profits;   // nonnegative
  std::int64_t capacity = 0;
};

struct KnapsackSolution {
  std::vector<int> chosen;  // sorted item indices
  std::int64_t profit = 0;
  std::int64_t weight = 0;
};

// Exact 0/1 knapsack, DP over profit (min weight per profit level).
KnapsackSolution knapsack_exact(const KnapsackInstance& k);

// Profit scaling with K = eps * p_max / n followed by the exact DP;
// guarantees profit >= (1 - eps) * OPT.
KnapsackSolution knapsack_fptas(const KnapsackInstance& k, const Rational& eps);

struct ConflictGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, first < second, sorted

  static ConflictGraph from_edges(int node_count, std::vector<std::pair<int, int>> edges);
  bool has_edge(int a, int b) const;
};

struct KcgInstance {
  ConflictGraph graph;
  std::vector<Rational> profits;  // may be negative; such nodes are never selected
  std::vector<Rational> weights;  // nonnegative
  Rational capacity;
};

// Containment forest of a laminar set family: parent strictly contains child,
// siblings are disjoint. Node order matches the family order.
struct LaminarForest {
  std::vector<int> parent;                 // -1 for roots
  std::vector<std::vector<int>> children;  // sorted child lists

  int node_count() const { return static_cast<int>(parent.size()); }
  std::vector<int> roots() const;

  // Builds the forest by containment; throws Error(NotLaminar) if two sets
  // properly cross. Equal sets are chained by index. Empty sets become
  // isolated roots.
  static LaminarForest from_family(const std::vector<std::vector<int>>& sets);

  // All comparable pairs (ancestor, descendant), normalised (first < second).
  std::vector<std::pair<int, int>> comparable_pairs() const;
};

struct KcgSolution {
  std::vector<int> chosen;  // sorted node indices, pairwise non-conflicting
  Rational profit;
  Rational weight;
};

// Knapsack over a conflict graph whose edges are exactly the comparable pairs
// of the laminar forest. Independent sets are antichains (at most one node on
// any root-to-leaf path), solved by a tree DP over scaled profits.
// eps = 0 requires integral profits and runs exactly; 0 < eps < 1 scales
// profits and guarantees profit >= (1 - eps) * OPT.
KcgSolution laminar_conflict_knapsack(const KcgInstance& k, const LaminarForest& forest,
                                      const Rational& eps);

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> elimination_order;  // perfect elimination ordering when chordal
};

// Lexicographic BFS followed by perfect-elimination verification.
ChordalityResult is_chordal(const ConflictGraph& g);

}  // namespace pbrp
