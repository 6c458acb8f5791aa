#include "pbrp/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

#include "max_flow.hpp"
#include "pbrp/reductions.hpp"

namespace pbrp {

namespace {

void require_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::BadEpsilon, "epsilon must lie in (0, 1)");
  }
}

std::vector<Rational> singleton_value_sums(const Instance& inst) {
  const int m = inst.project_count();
  std::vector<Rational> sums(m, Rational(0));
  for (const auto& agent : inst.agents) {
    for (int j = 0; j < m; ++j) {
      sums[j] += eval_valuation(agent.valuation, ProjectSet{j});
    }
  }
  return sums;
}

}  // namespace

SingleMindedView build_single_minded_view(const Instance& inst) {
  SingleMindedView view;
  std::map<ProjectSet, int> merged_of_demand;
  for (int i = 0; i < inst.agent_count(); ++i) {
    const auto* sm = std::get_if<SingleMindedValuation>(&inst.agents[i].valuation);
    if (!sm) {
      throw Error(ErrorCode::WrongValuationClass,
                  "agents[" + std::to_string(i) + "] is not single-minded");
    }
    auto [it, inserted] =
        merged_of_demand.try_emplace(sm->demand, static_cast<int>(view.agents.size()));
    if (inserted) {
      view.agents.push_back({sm->demand, Rational(0), Rational(0), Rational(0)});
    }
    auto& merged = view.agents[it->second];
    merged.value += sm->value;
    merged.budget += inst.agents[i].budget;
    merged.capped += std::min(inst.agents[i].budget, sm->value);
    view.merged_index_of_agent.push_back(it->second);
  }
  return view;
}

SolveReport uwo_additive_fptas(const Instance& inst, const Rational& eps) {
  require_epsilon(eps);
  const ScaledKnapsack red = uwo_to_knapsack(inst);
  const KnapsackSolution sol = knapsack_fptas(red.knapsack, eps);
  return make_report(inst, ProjectSet(sol.chosen.begin(), sol.chosen.end()), "uwo-fptas",
                     eps, /*wp_rule=*/false);
}

SolveReport uwo_identical_costs(const Instance& inst) {
  const int m = inst.project_count();
  for (int i = 0; i < inst.agent_count(); ++i) {
    if (!std::holds_alternative<AdditiveValuation>(inst.agents[i].valuation)) {
      throw Error(ErrorCode::WrongValuationClass,
                  "agents[" + std::to_string(i) + "] is not additive");
    }
  }
  for (int j = 1; j < m; ++j) {
    if (inst.projects[j].cost != inst.projects[0].cost) {
      throw Error(ErrorCode::CostsNotIdentical,
                  "projects[" + std::to_string(j) + "] breaks the identical-cost assumption");
    }
  }

  ProjectSet chosen;
  if (m > 0) {
    const Rational cost = inst.projects[0].cost;
    std::vector<Rational> welfare = singleton_value_sums(inst);
    for (auto& w : welfare) w -= cost;

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return welfare[a] > welfare[b]; });

    const Rational budget = inst.total_budget();
    Rational spent = 0;
    for (int j : order) {
      if (welfare[j] < 0) break;  // everything after is negative too
      if (spent + cost > budget) break;
      chosen.push_back(j);
      spent += cost;
    }
  }
  return make_report(inst, std::move(chosen), "identical-costs", std::nullopt,
                     /*wp_rule=*/false);
}

MaxPeResult maxpe_single_minded(const Instance& inst) {
  const SingleMindedView view = build_single_minded_view(inst);
  const int k = static_cast<int>(view.agents.size());
  const int m = inst.project_count();

  // Maximum-weight closure of agent -> demanded-project arcs, solved as a
  // min s-t cut. Everything is scaled to a common denominator so the flow
  // network carries exact integers.
  BigInt den = 1;
  for (const auto& agent : view.agents) {
    den = boost::multiprecision::lcm(den, denominator(agent.capped));
  }
  for (const auto& project : inst.projects) {
    den = boost::multiprecision::lcm(den, denominator(project.cost));
  }

  const int source = 0;
  const int sink = k + m + 1;
  detail::MaxFlow flow(k + m + 2);
  BigInt total = 0;
  for (int i = 0; i < k; ++i) {
    total += numerator(Rational(view.agents[i].capped * den));
  }
  const BigInt infinite = total + 1;
  for (int i = 0; i < k; ++i) {
    flow.add_edge(source, 1 + i, numerator(Rational(view.agents[i].capped * den)));
    for (int j : view.agents[i].demand) {
      flow.add_edge(1 + i, 1 + k + j, infinite);
    }
  }
  for (int j = 0; j < m; ++j) {
    flow.add_edge(1 + k + j, sink, numerator(Rational(inst.projects[j].cost * den)));
  }
  flow.run(source, sink);

  const std::vector<bool> reachable = flow.source_side(source);
  MaxPeResult result;
  for (int j = 0; j < m; ++j) {
    if (reachable[1 + k + j]) result.projects.push_back(j);
  }
  result.excess = payment_excess(inst, result.projects);
  return result;
}

SolveReport uwowp_laminar_fptas(const Instance& inst, const Rational& eps) {
  require_epsilon(eps);
  const SingleMindedView view = build_single_minded_view(inst);
  {
    std::vector<std::vector<int>> family;
    family.reserve(view.agents.size());
    for (const auto& agent : view.agents) family.push_back(agent.demand);
    LaminarForest::from_family(family);  // fail fast on crossing demand sets
  }

  const MaxPeResult base = maxpe_single_minded(inst);
  std::vector<Rational> costs;
  costs.reserve(inst.projects.size());
  for (const auto& p : inst.projects) costs.push_back(p.cost);

  const LaminarKcg red = laminar_to_kcg(view, base.projects, base.excess, costs);
  const KcgSolution sol = laminar_conflict_knapsack(red.kcg, red.forest, eps);

  ProjectSet funded = base.projects;
  for (int node : sol.chosen) {
    const int agent = red.merged_agent_of_node[node];
    if (agent >= 0) funded = set_union(funded, view.agents[agent].demand);
  }
  return make_report(inst, std::move(funded), "laminar-fptas", eps, /*wp_rule=*/true);
}

SolveReport symmetric_uwowp(const Instance& inst) {
  const int m = inst.project_count();
  for (int i = 0; i < inst.agent_count(); ++i) {
    if (!std::holds_alternative<SymmetricValuation>(inst.agents[i].valuation)) {
      throw Error(ErrorCode::WrongValuationClass,
                  "agents[" + std::to_string(i) + "] is not symmetric");
    }
  }

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.projects[a].cost < inst.projects[b].cost;
  });

  // only cheapest-prefix bundles can be optimal; scan all fundable prefixes
  ProjectSet prefix;
  ProjectSet best_set;
  Rational best_welfare = 0;
  bool found = false;
  for (int k = 1; k <= m; ++k) {
    prefix.push_back(order[k - 1]);
    std::sort(prefix.begin(), prefix.end());
    if (payment_excess(inst, prefix) < 0) continue;
    const Rational welfare = social_welfare(inst, prefix);
    if (!found || welfare > best_welfare) {
      found = true;
      best_welfare = welfare;
      best_set = prefix;
    }
  }
  if (!found || best_welfare < 0) best_set.clear();  // the empty bundle wins
  return make_report(inst, std::move(best_set), "symmetric", std::nullopt, /*wp_rule=*/true);
}

SolveReport greedy_uwowp(const Instance& inst) {
  const int m = inst.project_count();
  const std::vector<Rational> singleton = singleton_value_sums(inst);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Rational& ca = inst.projects[a].cost;
    const Rational& cb = inst.projects[b].cost;
    const bool za = ca == 0;
    const bool zb = cb == 0;
    if (za != zb) return za;  // free projects first
    if (!za) {
      // (s_a - c_a)/c_a vs (s_b - c_b)/c_b by cross-multiplication
      const Rational lhs = (singleton[a] - ca) * cb;
      const Rational rhs = (singleton[b] - cb) * ca;
      if (lhs != rhs) return lhs > rhs;
      if (ca != cb) return ca < cb;
    }
    return a < b;
  });

  ProjectSet funded;
  Rational current_welfare = 0;
  for (int j : order) {
    ProjectSet candidate = set_union(funded, ProjectSet{j});
    const Rational candidate_welfare = social_welfare(inst, candidate);
    if (candidate_welfare < current_welfare) continue;  // negative marginal welfare
    if (payment_excess(inst, candidate) < 0) continue;  // would break participation
    funded = std::move(candidate);
    current_welfare = candidate_welfare;
  }
  return make_report(inst, std::move(funded), "greedy", std::nullopt, /*wp_rule=*/true);
}

SukpSolution sukp_laminar_fptas(const SukpInstance& s, const Rational& eps) {
  for (const auto& v : s.item_values) {
    if (v < 0) throw Error(ErrorCode::NegativeQuantity, "negative item value");
  }
  for (const auto& w : s.element_weights) {
    if (w < 0) throw Error(ErrorCode::NegativeQuantity, "negative element weight");
  }

  const SukpKcg red = sukp_to_kcg(s);
  const KcgSolution inner = laminar_conflict_knapsack(red.kcg, red.forest, eps);

  std::vector<bool> covered(s.element_weights.size(), false);
  for (int i : inner.chosen) {
    for (int e : s.item_sets[i]) covered[e] = true;
  }

  // every item set nested in the chosen union rides along for free
  SukpSolution sol;
  sol.value = 0;
  for (std::size_t i = 0; i < s.item_sets.size(); ++i) {
    const bool inside = std::all_of(s.item_sets[i].begin(), s.item_sets[i].end(),
                                    [&](int e) { return covered[e]; });
    if (inside) {
      sol.items.push_back(static_cast<int>(i));
      sol.value += s.item_values[i];
    }
  }
  return sol;
}

}  // namespace pbrp
