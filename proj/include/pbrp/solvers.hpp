#pragma once

#include "pbrp/core.hpp"
#include "pbrp/knapsack.hpp"

namespace pbrp {

// Agents sharing a demand set collapse into one entry. `capped` is the sum of
// min(b_i, z_i) over the merged agents: the amount the group can actually be
// charged while keeping everyone weakly participating. (Summing budgets and
// values first and capping afterwards would overstate it.)
struct MergedSingleMinded {
  ProjectSet demand;
  Rational value;   // sum of z_i
  Rational budget;  // sum of b_i
  Rational capped;  // sum of min(b_i, z_i)
};

struct SingleMindedView {
  std::vector<MergedSingleMinded> agents;        // first-occurrence order
  std::vector<int> merged_index_of_agent;        // original -> merged
};

// Throws Error(WrongValuationClass) unless every agent is single-minded.
SingleMindedView build_single_minded_view(const Instance& inst);

// Set-union knapsack: items are element sets, an element's weight is paid
// once no matter how many chosen items contain it.
struct SukpInstance {
  std::vector<std::vector<int>> item_sets;  // sorted element indices, nonempty
  std::vector<Rational> item_values;        // nonnegative
  std::vector<Rational> element_weights;    // nonnegative
  Rational capacity;
};

struct SukpSolution {
  std::vector<int> items;  // sorted
  Rational value;
};

struct MaxPeResult {
  ProjectSet projects;
  Rational excess;
};

// Welfare maximisation for additive valuations via the knapsack FPTAS:
// weight C_j, profit sum_i v_ij - C_j, capacity = pooled budget.
// SW(result) >= (1 - eps) * optimum; participation is not guaranteed.
SolveReport uwo_additive_fptas(const Instance& inst, const Rational& eps);

// Exact welfare maximisation when every project costs the same: sort by
// per-project welfare and take nonnegative prefixes while budget remains.
SolveReport uwo_identical_costs(const Instance& inst);

// Exact maximum payment extraction for single-minded agents, solved as a
// maximum-closure problem via a min cut. Returns the unique minimal optimum.
MaxPeResult maxpe_single_minded(const Instance& inst);

// FPTAS for welfare maximisation under weak participation when the demand
// family is laminar: extends the MaxPE set by a conflict-knapsack over the
// containment forest.
SolveReport uwowp_laminar_fptas(const Instance& inst, const Rational& eps);

// Exact welfare maximisation under weak participation for symmetric
// valuations: the optimum is a cheapest-prefix bundle.
SolveReport symmetric_uwowp(const Instance& inst);

// Bang-per-buck heuristic: rank projects by singleton welfare over cost once,
// then take each project whose addition keeps the bundle fundable and whose
// marginal welfare is nonnegative.
SolveReport greedy_uwowp(const Instance& inst);

// FPTAS for laminar set-union knapsack (eps = 0 allowed for integer values).
SukpSolution sukp_laminar_fptas(const SukpInstance& s, const Rational& eps);

}  // namespace pbrp
