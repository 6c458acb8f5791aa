#include <algorithm>
#include <cmath>
#include <string>

#include "pbrp/io.hpp"
#include "pbrp/rng.hpp"

namespace pbrp {

SyntheticFamily parse_family(const std::string& name) {
  if (name == "uniform") return SyntheticFamily::Uniform;
  if (name == "normal") return SyntheticFamily::Normal;
  if (name == "bernoulli") return SyntheticFamily::Bernoulli;
  throw Error(ErrorCode::SchemaError, "unknown instance family '" + name + "'");
}

const char* family_name(SyntheticFamily family) {
  switch (family) {
    case SyntheticFamily::Uniform: return "uniform";
    case SyntheticFamily::Normal: return "normal";
    case SyntheticFamily::Bernoulli: return "bernoulli";
  }
  return "?";
}

Instance gen_synthetic(const SyntheticConfig& cfg) {
  if (cfg.agent_count < 1 || cfg.project_count < 1) {
    throw Error(ErrorCode::SchemaError, "agent and project counts must be at least 1");
  }
  const int n = cfg.agent_count;
  const int m = cfg.project_count;
  Rng rng(cfg.seed);

  // values[i][j], drawn project by project; everything lands on the 1e-9 grid
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(m, Rational(0)));
  switch (cfg.family) {
    case SyntheticFamily::Uniform:
      for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) values[i][j] = rng.unit();
      }
      break;
    case SyntheticFamily::Normal:
      for (int j = 0; j < m; ++j) {
        const double mu = rng.unit_double();
        const double sigma = 0.5 * rng.unit_double();
        Rational lowest = 0;
        for (int i = 0; i < n; ++i) {
          const double draw = mu + sigma * rng.gaussian();
          values[i][j] = Rational(BigInt(std::llround(draw * Rng::kQuantum)),
                                  BigInt(Rng::kQuantum));
          lowest = std::min(lowest, values[i][j]);
        }
        // shift the whole column up so no value is negative
        if (lowest < 0) {
          for (int i = 0; i < n; ++i) values[i][j] -= lowest;
        }
      }
      break;
    case SyntheticFamily::Bernoulli:
      for (int j = 0; j < m; ++j) {
        const double probability = rng.unit_double();
        const Rational magnitude = rng.unit();
        for (int i = 0; i < n; ++i) {
          values[i][j] = rng.unit_double() < probability ? magnitude : Rational(0);
        }
      }
      break;
  }

  Instance inst;
  Rational grand_cost = 0;
  for (int j = 0; j < m; ++j) {
    Rational column = 0;
    for (int i = 0; i < n; ++i) column += values[i][j];
    const Rational draw = Rational(3, 4) + rng.unit() / 4;
    Rational cost = round_to_denominator(column * draw, Rng::kQuantum);
    cost = std::max(cost, ceil_to_denominator(column * Rational(3, 4), Rng::kQuantum));
    cost = std::min(cost, column);
    inst.projects.push_back({"p" + std::to_string(j), cost});
    grand_cost += cost;
  }

  const Rational total_budget = grand_cost / 2;
  std::vector<Rational> fraction(n);
  Rational fraction_sum = 0;
  for (int i = 0; i < n; ++i) {
    fraction[i] = rng.unit();
    fraction_sum += fraction[i];
  }
  Rational assigned = 0;
  for (int i = 0; i < n; ++i) {
    Rational budget;
    if (i + 1 == n) {
      budget = total_budget - assigned;  // exact remainder keeps the sum tight
    } else {
      const Rational share = fraction_sum == 0 ? Rational(1, n) : fraction[i] / fraction_sum;
      budget = floor_to_denominator(total_budget * share, Rng::kQuantum);
      assigned += budget;
    }
    inst.agents.push_back({budget, AdditiveValuation{}});
  }
  for (int i = 0; i < n; ++i) {
    std::get<AdditiveValuation>(inst.agents[i].valuation).values = std::move(values[i]);
  }
  return inst;
}

}  // namespace pbrp
