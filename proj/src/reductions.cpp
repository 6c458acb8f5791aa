#include "pbrp/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

namespace pbrp {

namespace {

const AdditiveValuation& require_additive(const Agent& agent, int index) {
  const auto* add = std::get_if<AdditiveValuation>(&agent.valuation);
  if (!add) {
    throw Error(ErrorCode::WrongValuationClass,
                "agents[" + std::to_string(index) + "] is not additive");
  }
  return *add;
}

BigInt lcm_with(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace

ScaledKnapsack uwo_to_knapsack(const Instance& inst) {
  const int m = inst.project_count();
  std::vector<Rational> profit(m, Rational(0));
  for (int i = 0; i < inst.agent_count(); ++i) {
    const auto& add = require_additive(inst.agents[i], i);
    for (int j = 0; j < m; ++j) profit[j] += add.values[j];
  }
  const Rational budget = inst.total_budget();

  BigInt weight_den = denominator(budget);
  for (int j = 0; j < m; ++j) {
    weight_den = lcm_with(weight_den, denominator(inst.projects[j].cost));
  }
  BigInt profit_den = 1;
  for (int j = 0; j < m; ++j) {
    profit[j] -= inst.projects[j].cost;
    if (profit[j] < 0) profit[j] = 0;  // never part of an optimum
    profit_den = lcm_with(profit_den, denominator(profit[j]));
  }

  ScaledKnapsack out;
  out.weight_scale = Rational(weight_den);
  out.profit_scale = Rational(profit_den);
  out.knapsack.capacity = to_int64_checked(numerator(Rational(budget * weight_den)), "capacity");
  for (int j = 0; j < m; ++j) {
    out.knapsack.weights.push_back(
        to_int64_checked(numerator(Rational(inst.projects[j].cost * weight_den)), "weight"));
    out.knapsack.profits.push_back(
        to_int64_checked(numerator(Rational(profit[j] * profit_den)), "profit"));
  }
  return out;
}

Instance gap_transform(const Instance& inst, const Rational& t, const Rational& gap_factor) {
  const int m = inst.project_count();
  ProjectSet grand(m);
  std::iota(grand.begin(), grand.end(), 0);

  Rational grand_value = 0;
  for (const auto& agent : inst.agents) {
    grand_value += eval_valuation(agent.valuation, grand);
  }

  Instance out;
  out.projects.push_back({"aux", t});
  for (const auto& p : inst.projects) out.projects.push_back(p);

  AdditiveValuation probe_valuation;
  probe_valuation.values.assign(m + 1, Rational(0));
  probe_valuation.values[0] = 2 * gap_factor * grand_value;
  out.agents.push_back({Rational(0), probe_valuation});

  for (const auto& agent : inst.agents) {
    Valuation shifted = std::visit(
        [&](const auto& v) -> Valuation {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, AdditiveValuation>) {
            AdditiveValuation n;
            n.values.push_back(0);
            n.values.insert(n.values.end(), v.values.begin(), v.values.end());
            return n;
          } else if constexpr (std::is_same_v<T, SingleMindedValuation>) {
            SingleMindedValuation n;
            for (int j : v.demand) n.demand.push_back(j + 1);
            n.value = v.value;
            return n;
          } else if constexpr (std::is_same_v<T, SymmetricValuation>) {
            // size profiles cannot ignore one project, so fall back to a table
            if (m + 1 > kMaxTableProjects) {
              throw Error(ErrorCode::WrongValuationClass,
                          "symmetric valuation too wide to re-express over m+1 projects");
            }
            TableValuation n;
            n.entries.resize(std::size_t{1} << (m + 1));
            for (std::size_t mask = 0; mask < n.entries.size(); ++mask) {
              n.entries[mask] = v.by_count[std::popcount(mask >> 1)];
            }
            return n;
          } else {
            TableValuation n;
            n.entries.resize(v.entries.size() * 2);
            for (std::size_t mask = 0; mask < n.entries.size(); ++mask) {
              n.entries[mask] = v.entries[mask >> 1];
            }
            return n;
          }
        },
        agent.valuation);
    out.agents.push_back({agent.budget, std::move(shifted)});
  }
  return out;
}

PartitionReduction partition_to_maxpe(const PartitionInstance& p) {
  Rational gamma = 0;
  for (auto a : p.values) {
    if (a <= 0) {
      throw Error(ErrorCode::NegativeQuantity, "partition values must be positive");
    }
    gamma += a;
  }
  gamma /= 2;

  PartitionReduction out;
  AdditiveValuation valuation;
  for (auto a : p.values) {
    out.instance.projects.push_back({"p" + std::to_string(out.instance.projects.size()),
                                     Rational(a, 2)});
    valuation.values.push_back(a);
  }
  out.instance.agents.push_back({gamma, valuation});
  out.threshold = gamma / 2;
  return out;
}

Instance x3c_to_maxpe(const X3cInstance& x) {
  if (x.universe_size <= 0 || x.universe_size % 3 != 0) {
    throw Error(ErrorCode::UniverseNotDivisibleBy3,
                "universe size must be a positive multiple of 3");
  }
  const int n = x.universe_size;
  const Rational share = Rational(1, 3) + Rational(1, n);

  Instance out;
  for (std::size_t j = 0; j < x.triples.size(); ++j) {
    for (int e : x.triples[j]) {
      if (e < 0 || e >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "triple element out of universe");
      }
    }
    out.projects.push_back({"s" + std::to_string(j), Rational(1)});
  }
  for (int i = 0; i < n; ++i) {
    AdditiveValuation valuation;
    valuation.values.assign(x.triples.size(), Rational(0));
    for (std::size_t j = 0; j < x.triples.size(); ++j) {
      const auto& tr = x.triples[j];
      if (tr[0] == i || tr[1] == i || tr[2] == i) valuation.values[j] = share;
    }
    out.agents.push_back({share, valuation});
  }
  return out;
}

LaminarKcg laminar_to_kcg(const SingleMindedView& view, const ProjectSet& maxpe_set,
                          const Rational& maxpe_excess, const std::vector<Rational>& costs) {
  const int k = static_cast<int>(view.agents.size());
  auto cost_of = [&](const ProjectSet& s) {
    Rational sum = 0;
    for (int j : s) sum += costs.at(j);
    return sum;
  };

  // in_q[i]: agent i's demand already satisfied by the MaxPE set
  std::vector<bool> in_q(k, false);
  for (int i = 0; i < k; ++i) in_q[i] = is_subset(view.agents[i].demand, maxpe_set);

  LaminarKcg out;
  out.merged_agent_of_node.assign(k + 1, -1);

  std::vector<std::vector<int>> family(k + 1);
  family[0] = {};  // aggregate node, isolated
  std::vector<Rational> profits(k + 1, Rational(0));
  std::vector<Rational> weights(k + 1, Rational(0));

  for (int i = 0; i < k; ++i) {
    if (in_q[i]) profits[0] += view.agents[i].value;
  }
  profits[0] -= cost_of(maxpe_set);

  for (int i = 0; i < k; ++i) {
    const int node = i + 1;
    out.merged_agent_of_node[node] = i;
    family[node] = view.agents[i].demand;
    const ProjectSet extra = set_difference(view.agents[i].demand, maxpe_set);
    const Rational extra_cost = cost_of(extra);
    const ProjectSet with_q = set_union(view.agents[i].demand, maxpe_set);
    Rational value_sum = 0;
    Rational capped_sum = 0;
    for (int j = 0; j < k; ++j) {
      if (in_q[j]) continue;  // only agents not already satisfied by Q
      if (is_subset(view.agents[j].demand, with_q)) value_sum += view.agents[j].value;
      if (is_subset(view.agents[j].demand, view.agents[i].demand)) {
        capped_sum += view.agents[j].capped;
      }
    }
    profits[node] = value_sum - extra_cost;
    weights[node] = extra_cost - capped_sum;
  }

  out.forest = LaminarForest::from_family(family);
  out.kcg.graph = ConflictGraph::from_edges(k + 1, out.forest.comparable_pairs());
  out.kcg.profits = std::move(profits);
  out.kcg.weights = std::move(weights);
  out.kcg.capacity = maxpe_excess;
  return out;
}

SukpKcg sukp_to_kcg(const SukpInstance& s) {
  const int n = static_cast<int>(s.item_sets.size());
  if (s.item_values.size() != s.item_sets.size()) {
    throw Error(ErrorCode::ArityMismatch, "item values and sets lengths differ");
  }
  for (int i = 0; i < n; ++i) {
    if (s.item_sets[i].empty()) {
      throw Error(ErrorCode::SchemaError, "item sets must be nonempty");
    }
    for (int e : s.item_sets[i]) {
      if (e < 0 || e >= static_cast<int>(s.element_weights.size())) {
        throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
      }
    }
  }

  SukpKcg out;
  out.forest = LaminarForest::from_family(s.item_sets);
  out.kcg.graph = ConflictGraph::from_edges(n, out.forest.comparable_pairs());
  out.kcg.capacity = s.capacity;
  out.kcg.profits.assign(n, Rational(0));
  out.kcg.weights.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::includes(s.item_sets[i].begin(), s.item_sets[i].end(),
                        s.item_sets[j].begin(), s.item_sets[j].end())) {
        out.kcg.profits[i] += s.item_values[j];
      }
    }
    for (int e : s.item_sets[i]) out.kcg.weights[i] += s.element_weights[e];
  }
  return out;
}

}  // namespace pbrp
