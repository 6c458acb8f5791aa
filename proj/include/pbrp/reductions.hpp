#pragma once

#include <array>

#include "pbrp/core.hpp"
#include "pbrp/knapsack.hpp"
#include "pbrp/solvers.hpp"

namespace pbrp {

struct PartitionInstance {
  std::vector<std::int64_t> values;  // positive integers
};

struct X3cInstance {
  int universe_size = 0;                   // multiple of 3, elements 0..size-1
  std::vector<std::array<int, 3>> triples;
};

struct ScaledKnapsack {
  KnapsackInstance knapsack;        // item j corresponds to project j
  Rational weight_scale;            // integer weight = cost * weight_scale
  Rational profit_scale;            // integer profit = clamped welfare * profit_scale
};

// Additive welfare maximisation as 0/1 knapsack: weight C_j, profit
// max(0, sum_i v_ij - C_j), capacity = pooled budget. On instances that pass
// validation no project is clamped, and the knapsack value of any bundle
// equals its social welfare after unscaling.
ScaledKnapsack uwo_to_knapsack(const Instance& inst);

// Adds agent 0 (budget 0, values only the new project 0 at
// 2 * gap_factor * sum_i v_i(M)) and project 0 with cost t. Any
// gap_factor-approximate welfare-under-participation solver then decides
// whether t can be extracted from the original instance.
Instance gap_transform(const Instance& inst, const Rational& t, const Rational& gap_factor);

struct PartitionReduction {
  Instance instance;   // single agent, v_i = a_i, b = gamma, C_i = a_i / 2
  Rational threshold;  // gamma / 2; a partition exists iff MaxPE >= threshold
};
PartitionReduction partition_to_maxpe(const PartitionInstance& p);

// One agent per universe element (budget 1/3 + 1/n), one unit-cost project
// per triple; an exact cover exists iff MaxPE >= 1.
Instance x3c_to_maxpe(const X3cInstance& x);

struct LaminarKcg {
  KcgInstance kcg;
  LaminarForest forest;
  std::vector<int> merged_agent_of_node;  // -1 for the aggregate node 0
};

// Conflict-knapsack encoding of "extend a MaxPE set Q to a welfare-optimal
// participating bundle": node 0 carries the agents already satisfied inside
// Q; node i adds agent i's demand set; capacity is the excess left by Q.
LaminarKcg laminar_to_kcg(const SingleMindedView& view, const ProjectSet& maxpe_set,
                          const Rational& maxpe_excess, const std::vector<Rational>& costs);

struct SukpKcg {
  KcgInstance kcg;
  LaminarForest forest;
};

// Laminar set-union knapsack as conflict knapsack: p_i aggregates the values
// of all item sets nested in L_i, w_i is the weight of L_i's elements.
SukpKcg sukp_to_kcg(const SukpInstance& s);

}  // namespace pbrp
