#include "pbrp/core.hpp"

#include <algorithm>
#include <bit>

namespace pbrp {

ProjectSet canonical_set(ProjectSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool set_contains(const ProjectSet& s, int j) {
  return std::binary_search(s.begin(), s.end(), j);
}

bool is_subset(const ProjectSet& a, const ProjectSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool sets_disjoint(const ProjectSet& a, const ProjectSet& b) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a == *it_b) return false;
    if (*it_a < *it_b) ++it_a; else ++it_b;
  }
  return true;
}

ProjectSet set_union(const ProjectSet& a, const ProjectSet& b) {
  ProjectSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ProjectSet set_difference(const ProjectSet& a, const ProjectSet& b) {
  ProjectSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<int> valuation_arity(const Valuation& v) {
  if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
    return static_cast<int>(add->values.size());
  }
  if (const auto* sym = std::get_if<SymmetricValuation>(&v)) {
    return static_cast<int>(sym->by_count.size()) - 1;
  }
  if (const auto* tab = std::get_if<TableValuation>(&v)) {
    return std::countr_zero(tab->entries.size());
  }
  return std::nullopt;
}

Rational Instance::total_cost(const ProjectSet& w) const {
  Rational sum = 0;
  for (int j : w) sum += projects[j].cost;
  return sum;
}

Rational Instance::total_budget() const {
  Rational sum = 0;
  for (const auto& a : agents) sum += a.budget;
  return sum;
}

namespace {

void check_indices(const ProjectSet& w, int m) {
  for (int j : w) {
    if (j < 0 || j >= m) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "project index " + std::to_string(j) + " out of range [0, " +
                      std::to_string(m) + ")");
    }
  }
}

std::uint32_t mask_of(const ProjectSet& w) {
  std::uint32_t mask = 0;
  for (int j : w) mask |= 1u << j;
  return mask;
}

// Value an agent assigns to project j alone.
Rational singleton_value(const Valuation& v, int j) {
  return eval_valuation(v, ProjectSet{j});
}

void check_valuation(const Valuation& v, int m, int agent_index) {
  const std::string who = "agents[" + std::to_string(agent_index) + "]";
  const auto arity = valuation_arity(v);
  if (arity && *arity != m) {
    throw Error(ErrorCode::ArityMismatch,
                who + " valuation covers " + std::to_string(*arity) + " projects, instance has " +
                    std::to_string(m));
  }
  if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
    for (const auto& x : add->values) {
      if (x < 0) throw Error(ErrorCode::NegativeQuantity, who + " has a negative value");
    }
  } else if (const auto* sm = std::get_if<SingleMindedValuation>(&v)) {
    if (sm->value < 0) throw Error(ErrorCode::NegativeQuantity, who + " has a negative value");
    if (!std::is_sorted(sm->demand.begin(), sm->demand.end()) ||
        std::adjacent_find(sm->demand.begin(), sm->demand.end()) != sm->demand.end()) {
      throw Error(ErrorCode::SchemaError, who + " demand set is not sorted-unique");
    }
    for (int j : sm->demand) {
      if (j < 0 || j >= m) {
        throw Error(ErrorCode::ArityMismatch, who + " demand set references project " +
                                                  std::to_string(j));
      }
    }
  } else if (const auto* sym = std::get_if<SymmetricValuation>(&v)) {
    if (sym->by_count.empty() || sym->by_count[0] != 0) {
      throw Error(ErrorCode::NonMonotoneValuation, who + " size profile must start at 0");
    }
    for (std::size_t k = 0; k < sym->by_count.size(); ++k) {
      if (sym->by_count[k] < 0) {
        throw Error(ErrorCode::NegativeQuantity, who + " has a negative value");
      }
      if (k > 0 && sym->by_count[k] < sym->by_count[k - 1]) {
        throw Error(ErrorCode::NonMonotoneValuation, who + " size profile decreases at " +
                                                         std::to_string(k));
      }
    }
  } else if (const auto* tab = std::get_if<TableValuation>(&v)) {
    if (tab->entries.empty() || !std::has_single_bit(tab->entries.size())) {
      throw Error(ErrorCode::ArityMismatch, who + " table must have 2^m entries");
    }
    if (m > kMaxTableProjects) {
      throw Error(ErrorCode::ArityMismatch,
                  who + " table valuations support at most " +
                      std::to_string(kMaxTableProjects) + " projects");
    }
    if (tab->entries[0] != 0) {
      throw Error(ErrorCode::NonMonotoneValuation, who + " table value of {} must be 0");
    }
    for (std::size_t mask = 0; mask < tab->entries.size(); ++mask) {
      if (tab->entries[mask] < 0) {
        throw Error(ErrorCode::NegativeQuantity, who + " has a negative value");
      }
      // removing any one element may not increase the value
      for (std::uint32_t bits = static_cast<std::uint32_t>(mask); bits;) {
        const std::uint32_t low = bits & (~bits + 1);
        if (tab->entries[mask & ~low] > tab->entries[mask]) {
          throw Error(ErrorCode::NonMonotoneValuation, who + " table is not monotone");
        }
        bits ^= low;
      }
    }
  }
}

Valuation drop_projects(const Valuation& v, const std::vector<int>& keep,
                        const std::vector<int>& new_index) {
  if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
    AdditiveValuation out;
    out.values.reserve(keep.size());
    for (int j : keep) out.values.push_back(add->values[j]);
    return out;
  }
  if (const auto* sm = std::get_if<SingleMindedValuation>(&v)) {
    SingleMindedValuation out;
    bool lost = false;
    for (int j : sm->demand) {
      if (new_index[j] < 0) {
        lost = true;
      } else {
        out.demand.push_back(new_index[j]);
      }
    }
    // a demand that references a dropped project can never be met
    out.value = lost ? Rational(0) : sm->value;
    return out;
  }
  if (const auto* sym = std::get_if<SymmetricValuation>(&v)) {
    SymmetricValuation out;
    out.by_count.assign(sym->by_count.begin(), sym->by_count.begin() + keep.size() + 1);
    return out;
  }
  const auto& tab = std::get<TableValuation>(v);
  TableValuation out;
  out.entries.resize(std::size_t{1} << keep.size());
  for (std::size_t mask = 0; mask < out.entries.size(); ++mask) {
    std::uint32_t old_mask = 0;
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (mask & (std::size_t{1} << b)) old_mask |= 1u << keep[b];
    }
    out.entries[mask] = tab.entries[old_mask];
  }
  return out;
}

}  // namespace

Rational eval_valuation(const Valuation& v, const ProjectSet& w) {
  const auto arity = valuation_arity(v);
  if (arity) check_indices(w, *arity);
  if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
    Rational sum = 0;
    for (int j : w) sum += add->values[j];
    return sum;
  }
  if (const auto* sm = std::get_if<SingleMindedValuation>(&v)) {
    return is_subset(sm->demand, w) ? sm->value : Rational(0);
  }
  if (const auto* sym = std::get_if<SymmetricValuation>(&v)) {
    return sym->by_count[w.size()];
  }
  return std::get<TableValuation>(v).entries[mask_of(w)];
}

Rational social_welfare(const Instance& inst, const ProjectSet& w) {
  check_indices(w, inst.project_count());
  Rational sum = -inst.total_cost(w);
  for (const auto& agent : inst.agents) sum += eval_valuation(agent.valuation, w);
  return sum;
}

Rational payment_excess(const Instance& inst, const ProjectSet& w) {
  check_indices(w, inst.project_count());
  Rational sum = -inst.total_cost(w);
  for (const auto& agent : inst.agents) {
    sum += std::min(agent.budget, eval_valuation(agent.valuation, w));
  }
  return sum;
}

std::vector<Rational> wp_payments(const Instance& inst, const ProjectSet& w) {
  if (payment_excess(inst, w) < 0) {
    throw Error(ErrorCode::NotWpFundable, "bundle cannot be funded while keeping every "
                                          "agent's utility nonnegative");
  }
  Rational remaining = inst.total_cost(w);
  std::vector<Rational> payments;
  payments.reserve(inst.agents.size());
  for (const auto& agent : inst.agents) {
    const Rational cap = std::min(agent.budget, eval_valuation(agent.valuation, w));
    const Rational pay = std::min(cap, remaining);
    payments.push_back(pay);
    remaining -= pay;
  }
  return payments;
}

Rational agent_utility(const Instance& inst, const Outcome& outcome, int agent) {
  if (agent < 0 || agent >= inst.agent_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "agent index " + std::to_string(agent));
  }
  if (outcome.payments.size() != inst.agents.size()) {
    throw Error(ErrorCode::ArityMismatch, "payment vector length mismatch");
  }
  return eval_valuation(inst.agents[agent].valuation, outcome.funded) -
         outcome.payments[agent];
}

std::vector<Rational> budget_fill_payments(const Instance& inst, const ProjectSet& w) {
  Rational remaining = inst.total_cost(w);
  if (remaining > inst.total_budget()) {
    throw Error(ErrorCode::NotWpFundable, "bundle exceeds the pooled budget");
  }
  std::vector<Rational> payments;
  payments.reserve(inst.agents.size());
  for (const auto& agent : inst.agents) {
    const Rational pay = std::min(agent.budget, remaining);
    payments.push_back(pay);
    remaining -= pay;
  }
  return payments;
}

SolveReport make_report(const Instance& inst, ProjectSet w, std::string algorithm,
                        std::optional<Rational> epsilon, bool wp_rule) {
  SolveReport report;
  report.outcome.funded = canonical_set(std::move(w));
  report.outcome.payments = wp_rule ? wp_payments(inst, report.outcome.funded)
                                    : budget_fill_payments(inst, report.outcome.funded);
  report.welfare = social_welfare(inst, report.outcome.funded);
  report.excess = payment_excess(inst, report.outcome.funded);
  report.algorithm = std::move(algorithm);
  report.epsilon = std::move(epsilon);
  return report;
}

ValidationResult validate_instance(const Instance& raw, bool drop_uncoverable) {
  const int m = raw.project_count();
  for (int j = 0; j < m; ++j) {
    if (raw.projects[j].cost < 0) {
      throw Error(ErrorCode::NegativeQuantity, "projects[" + std::to_string(j) + "].cost");
    }
  }
  for (int i = 0; i < raw.agent_count(); ++i) {
    if (raw.agents[i].budget < 0) {
      throw Error(ErrorCode::NegativeQuantity, "agents[" + std::to_string(i) + "].budget");
    }
    check_valuation(raw.agents[i].valuation, m, i);
  }

  ValidationResult result{raw, {}};
  // Dropping a project can zero out demand values, which can in turn make
  // other projects uncoverable, so iterate to a fixpoint.
  for (;;) {
    const int cur_m = result.instance.project_count();
    std::vector<int> keep;
    for (int j = 0; j < cur_m; ++j) {
      Rational support = 0;
      for (const auto& agent : result.instance.agents) {
        support += singleton_value(agent.valuation, j);
      }
      if (support < result.instance.projects[j].cost) {
        const auto& name = result.instance.projects[j].name;
        if (!drop_uncoverable) {
          throw Error(ErrorCode::UncoverableProject,
                      "projects[" + std::to_string(j) + "]" +
                          (name.empty() ? "" : " (" + name + ")") +
                          " costs more than its total value");
        }
        result.warnings.push_back("dropped uncoverable project " + std::to_string(j) +
                                  (name.empty() ? "" : " (" + name + ")"));
      } else {
        keep.push_back(j);
      }
    }
    if (static_cast<int>(keep.size()) == cur_m) break;

    std::vector<int> new_index(cur_m, -1);
    for (std::size_t k = 0; k < keep.size(); ++k) new_index[keep[k]] = static_cast<int>(k);
    Instance reduced;
    for (int j : keep) reduced.projects.push_back(result.instance.projects[j]);
    for (const auto& agent : result.instance.agents) {
      reduced.agents.push_back({agent.budget, drop_projects(agent.valuation, keep, new_index)});
    }
    result.instance = std::move(reduced);
  }
  return result;
}

bool operator==(const AdditiveValuation& a, const AdditiveValuation& b) {
  return a.values == b.values;
}
bool operator==(const SingleMindedValuation& a, const SingleMindedValuation& b) {
  return a.demand == b.demand && a.value == b.value;
}
bool operator==(const SymmetricValuation& a, const SymmetricValuation& b) {
  return a.by_count == b.by_count;
}
bool operator==(const TableValuation& a, const TableValuation& b) {
  return a.entries == b.entries;
}
bool operator==(const Project& a, const Project& b) {
  return a.name == b.name && a.cost == b.cost;
}
bool operator==(const Agent& a, const Agent& b) {
  return a.budget == b.budget && a.valuation == b.valuation;
}
bool operator==(const Instance& a, const Instance& b) {
  return a.projects == b.projects && a.agents == b.agents;
}

}  // namespace pbrp
