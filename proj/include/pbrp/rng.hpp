#pragma once

#include <cstdint>
#include <random>

#include "pbrp/rational.hpp"

namespace pbrp {

// Deterministic sampling built directly on the mt19937_64 word stream.
// Standard-library distributions are deliberately avoided: their output is
// implementation defined, and generated instances must be reproducible from
// the seed alone.
class Rng {
 public:
  static constexpr std::int64_t kQuantum = 1'000'000'000;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, bound), unbiased via rejection
  std::uint64_t below(std::uint64_t bound);

  // uniform integer in [lo, hi], inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  // uniform k/denom with k in [0, denom]
  Rational unit(std::int64_t denom = kQuantum);

  // uniform double in (0, 1)
  double unit_double();

  // standard normal via inverse-CDF polynomial approximation
  double gaussian();

 private:
  std::mt19937_64 engine_;
};

// Inverse of the standard normal CDF for p in (0,1) (Acklam's rational
// polynomial approximation, |relative error| < 1.2e-9).
double inverse_normal_cdf(double p);

}  // namespace pbrp
