#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pbrp/errors.hpp"
#include "pbrp/rational.hpp"

namespace pbrp {

// Project-index sets (funded bundles, demand sets) are kept sorted ascending
// with no duplicates.
using ProjectSet = std::vector<int>;

ProjectSet canonical_set(ProjectSet s);
bool set_contains(const ProjectSet& s, int j);
bool is_subset(const ProjectSet& a, const ProjectSet& b);
bool sets_disjoint(const ProjectSet& a, const ProjectSet& b);
ProjectSet set_union(const ProjectSet& a, const ProjectSet& b);
ProjectSet set_difference(const ProjectSet& a, const ProjectSet& b);

// Exactly one valuation shape per agent.
struct AdditiveValuation {
  std::vector<Rational> values;  // one entry per project
};

struct SingleMindedValuation {
  ProjectSet demand;  // worth `value` once fully funded, zero otherwise
  Rational value;
};

struct SymmetricValuation {
  std::vector<Rational> by_count;  // length m+1, by_count[0] == 0, nondecreasing
};

struct TableValuation {
  // entries[mask] for every subset mask; capped at m <= 20 to bound memory
  std::vector<Rational> entries;
};

using Valuation =
    std::variant<AdditiveValuation, SingleMindedValuation, SymmetricValuation, TableValuation>;

inline constexpr int kMaxTableProjects = 20;

// Number of projects the valuation is defined over, when the shape pins one
// down (single-minded valuations accept any superset arity).
std::optional<int> valuation_arity(const Valuation& v);

struct Project {
  std::string name;
  Rational cost;
};

struct Agent {
  Rational budget;
  Valuation valuation;
};

struct Instance {
  std::vector<Project> projects;
  std::vector<Agent> agents;

  int project_count() const { return static_cast<int>(projects.size()); }
  int agent_count() const { return static_cast<int>(agents.size()); }
  Rational total_cost(const ProjectSet& w) const;
  Rational total_budget() const;
};

struct Outcome {
  ProjectSet funded;
  std::vector<Rational> payments;  // length n, 0 <= x_i <= b_i, sums to C(funded)
};

struct SolveReport {
  Outcome outcome;
  Rational welfare;
  Rational excess;
  std::string algorithm;
  std::optional<Rational> epsilon;
};

struct ValidationResult {
  Instance instance;
  std::vector<std::string> warnings;
};

// Checks arity, nonnegativity and monotonicity. Projects whose cost exceeds
// the total value anyone assigns them are dropped (with a warning) when
// drop_uncoverable is set, or reported as an error otherwise.
ValidationResult validate_instance(const Instance& raw, bool drop_uncoverable = true);

Rational eval_valuation(const Valuation& v, const ProjectSet& w);
Rational social_welfare(const Instance& inst, const ProjectSet& w);

// PE(W) = sum_i min(b_i, v_i(W)) - C(W); W is fundable in a feasible, weakly
// participating way iff this is nonnegative.
Rational payment_excess(const Instance& inst, const ProjectSet& w);

// Prefix-fill: agents pay min(budget, value) in index order until C(W) is
// covered, the threshold agent pays the remainder, everyone later pays zero.
// Throws Error(NotWpFundable) when payment_excess(inst, w) < 0.
std::vector<Rational> wp_payments(const Instance& inst, const ProjectSet& w);

Rational agent_utility(const Instance& inst, const Outcome& outcome, int agent);

// Prefix-fill against budgets only (welfare-optimal bundles need not respect
// participation). Requires C(W) <= total budget.
std::vector<Rational> budget_fill_payments(const Instance& inst, const ProjectSet& w);

// Assembles a report; wp_rule selects wp_payments, otherwise budget fill.
SolveReport make_report(const Instance& inst, ProjectSet w, std::string algorithm,
                        std::optional<Rational> epsilon, bool wp_rule);

bool operator==(const AdditiveValuation& a, const AdditiveValuation& b);
bool operator==(const SingleMindedValuation& a, const SingleMindedValuation& b);
bool operator==(const SymmetricValuation& a, const SymmetricValuation& b);
bool operator==(const TableValuation& a, const TableValuation& b);
bool operator==(const Project& a, const Project& b);
bool operator==(const Agent& a, const Agent& b);
bool operator==(const Instance& a, const Instance& b);

}  // namespace pbrp
