#include "pbrp/oracle.hpp"

#include <functional>

namespace pbrp {

namespace {

// Visits all subsets of {0..m-1} by increasing cardinality, lexicographic
// within each cardinality.
void for_each_subset(int m, const std::function<void(const ProjectSet&)>& visit) {
  ProjectSet subset;
  visit(subset);
  for (int k = 1; k <= m; ++k) {
    subset.resize(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    for (;;) {
      visit(subset);
      int i = k - 1;
      while (i >= 0 && subset[i] == m - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
}

OracleResult maximize(const Instance& inst,
                      const std::function<bool(const ProjectSet&)>& feasible,
                      const std::function<Rational(const ProjectSet&)>& objective) {
  if (inst.project_count() > kOracleProjectCap) {
    throw Error(ErrorCode::TooManyProjects,
                "brute force capped at " + std::to_string(kOracleProjectCap) + " projects, got " +
                    std::to_string(inst.project_count()));
  }
  OracleResult result;
  bool have = false;
  for_each_subset(inst.project_count(), [&](const ProjectSet& w) {
    if (!feasible(w)) return;
    const Rational value = objective(w);
    if (!have || value > result.objective) {
      result.best = w;
      result.objective = value;
      result.tie_count = 1;
      have = true;
    } else if (value == result.objective) {
      ++result.tie_count;
    }
  });
  return result;  // the empty bundle is always feasible for all three programs
}

}  // namespace

OracleResult brute_uwo(const Instance& inst) {
  const Rational budget = inst.total_budget();
  return maximize(
      inst, [&](const ProjectSet& w) { return inst.total_cost(w) <= budget; },
      [&](const ProjectSet& w) { return social_welfare(inst, w); });
}

OracleResult brute_uwo_wp(const Instance& inst) {
  return maximize(
      inst, [&](const ProjectSet& w) { return payment_excess(inst, w) >= 0; },
      [&](const ProjectSet& w) { return social_welfare(inst, w); });
}

OracleResult brute_maxpe(const Instance& inst) {
  return maximize(
      inst, [](const ProjectSet&) { return true; },
      [&](const ProjectSet& w) { return payment_excess(inst, w); });
}

}  // namespace pbrp
