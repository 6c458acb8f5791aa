#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbrp/core.hpp"

namespace pbrp {

// Canonical JSON text format. Rationals are "p/q" strings; field order is
// fixed on save, so identical instances serialize to identical bytes.
std::string save_instance(const Instance& inst);
Instance load_instance(const std::string& text);

struct PabulibProject {
  std::string id;
  Rational cost;
  std::string name;
};

struct PabulibVote {
  std::string voter_id;
  std::vector<std::string> approved;  // project ids
};

struct PabulibElection {
  std::vector<std::pair<std::string, std::string>> meta;  // order preserved
  std::vector<PabulibProject> projects;
  std::vector<PabulibVote> votes;

  const std::string* meta_value(const std::string& key) const;
};

// Sections META / PROJECTS / VOTES, each a header line, a column-header line,
// then semicolon-separated rows. Only approval ballots are supported.
PabulibElection parse_pabulib(const std::string& text);

// One agent per voter with an even split of the election budget; approval
// utilities scaled so the grand bundle is worth exactly its total cost.
Instance pabulib_to_instance(const PabulibElection& election);

enum class SyntheticFamily { Uniform, Normal, Bernoulli };

SyntheticFamily parse_family(const std::string& name);
const char* family_name(SyntheticFamily family);

struct SyntheticConfig {
  SyntheticFamily family = SyntheticFamily::Uniform;
  int agent_count = 1;
  int project_count = 1;
  std::uint64_t seed = 0;
};

// Deterministic under the seed. Valuations per family; costs drawn from
// [0.75 * column sum, column sum]; budgets are random fractions of half the
// total cost, normalised to sum to it exactly.
Instance gen_synthetic(const SyntheticConfig& cfg);

}  // namespace pbrp
