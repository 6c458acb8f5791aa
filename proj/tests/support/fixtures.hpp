#pragma once

#include "pbrp/core.hpp"

namespace pbrp::fixtures {

// Three towns deciding on a concert hall, a shelter, and a pool.
// Costs 5/4/2, budgets 2/3/1, additive valuations per row.
inline Instance towns_instance() {
  Instance inst;
  inst.projects = {{"hall", 5}, {"shelter", 4}, {"pool", 2}};
  inst.agents = {
      {2, AdditiveValuation{{2, 1, 2}}},
      {3, AdditiveValuation{{1, 2, 2}}},
      {1, AdditiveValuation{{4, 3, 1}}},
  };
  return inst;
}

// Two agents, four projects; the cheap project 3 must be funded so that the
// high-value project 0 becomes affordable for agent 1's benefit.
inline Instance enabler_instance(const Rational& high = 100,
                                 const Rational& near_two = Rational(199, 100)) {
  Instance inst;
  inst.projects = {{"P1", 1}, {"P2", 2}, {"P3", 1}, {"P4", 1}};
  inst.agents = {
      {2, AdditiveValuation{{0, 20, near_two, 2}}},
      {0, AdditiveValuation{{high, 0, 20, 0}}},
  };
  return inst;
}

// Laminar single-minded worked example: costs (2,1,4), demands {1}, {0,1},
// {2} with values 3/4/6 and budgets 1/2/5.
inline Instance laminar_example() {
  Instance inst;
  inst.projects = {{"p0", 2}, {"p1", 1}, {"p2", 4}};
  inst.agents = {
      {1, SingleMindedValuation{{1}, 3}},
      {2, SingleMindedValuation{{0, 1}, 4}},
      {5, SingleMindedValuation{{2}, 6}},
  };
  return inst;
}

// Laminar family with one nesting chain, one sibling pair and one loner:
// {0,1,2,3}, {1,2}, {0}, {1}, {5}.
inline std::vector<std::vector<int>> nested_family() {
  return {{0, 1, 2, 3}, {1, 2}, {0}, {1}, {5}};
}

inline const char* kMinimalPabulib =
    "META;\n"
    "key;value\n"
    "description;minimal fixture\n"
    "budget;10\n"
    "vote_type;approval\n"
    "num_votes;2\n"
    "PROJECTS;\n"
    "project_id;cost;name\n"
    "A;4;park\n"
    "B;6;library\n"
    "VOTES;\n"
    "voter_id;vote\n"
    "1;A\n"
    "2;A,B\n";

}  // namespace pbrp::fixtures
