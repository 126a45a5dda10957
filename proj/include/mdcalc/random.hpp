#pragma once

#include <cstdint>
#include <random>

#include "mdcalc/operator.hpp"
#include "mdcalc/star.hpp"

namespace mdcalc {

/// Independent, reproducible stream for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Random exact data for property checks. Coefficients come from a small
/// Gaussian-rational pool so exact arithmetic stays cheap.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

  Scalar coefficient();
  /// Degree-m symbol with 1..max_terms terms. `polynomial` forbids negative
  /// exponents (and so requires m >= 0).
  HomogeneousSymbol symbol(int nvars, int degree, int max_terms = 5, bool polynomial = false);

  /// Truncated operator: top in [-2, max_deg], one to three components,
  /// floor in [floor, floor + 2].
  Operator truncated(TruncationContext ctx, int max_deg, int floor);
  /// Exact operator of order <= max_deg with polynomial symbols.
  Operator polynomial(TruncationContext ctx, int max_deg);
  /// Exact operator of order <= 1 (random components in degrees 1, 0, -1).
  Operator order_at_most_one(TruncationContext ctx);
  /// 1 + (terms of order <= -1), truncated at floor.
  Operator unipotent(TruncationContext ctx, int floor);
  /// Self-adjoint (theta = dx) unipotent operator, truncated at floor.
  Operator self_adjoint_unipotent(TruncationContext ctx, int floor);
  /// Operator whose principal symbol is a unit monomial, truncated at floor.
  Operator invertible(TruncationContext ctx, int floor);
  /// theta = c x^a dx with a in [-2, 2]^n.
  VolumeDensity density(int nvars);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mdcalc
