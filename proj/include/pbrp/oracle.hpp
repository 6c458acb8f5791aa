#pragma once

#include <cstdint>

#include "pbrp/core.hpp"

namespace pbrp {

struct OracleResult {
  ProjectSet best;
  Rational objective;
  std::uint64_t tie_count = 0;
};

inline constexpr int kOracleProjectCap = 25;

// Exhaustive search over all 2^m bundles, m <= 25. Subsets are visited in
// increasing cardinality, then lexicographically by index sequence, so the
// first optimum found is the canonical tie-break winner.

// max SW(W) subject to C(W) <= total budget
OracleResult brute_uwo(const Instance& inst);

// max SW(W) subject to payment_excess(inst, W) >= 0
OracleResult brute_uwo_wp(const Instance& inst);

// max PE(W), unconstrained (the empty bundle attains 0)
OracleResult brute_maxpe(const Instance& inst);

}  // namespace pbrp
