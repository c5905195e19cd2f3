#pragma once

#include <cstdint>

#include "zklab/rat.hpp"

namespace zklab {

enum class ChernoffKind { MultAbove, MultBelow, Additive };

// Tail bounds for X = sum of m independent Bernoulli(p):
//   MultAbove: P[X >= (1+delta) mp] <= exp(-delta^2 mp / 3),  0 < delta < 1
//   MultBelow: P[X <= (1-delta) mp] <= exp(-delta^2 mp / 2),  0 < delta < 1
//   Additive:  P[|X - mp| >= Delta] <= 2 exp(-Delta^2 / m),   Delta >= 0
// Delta is in count units. Values are display/compare reals; exact-mode
// results never flow through here.
double chernoff_bound(ChernoffKind kind, std::uint64_t m, const Rat& p, const Rat& delta);

// Two-sided confidence half-width (frequency units) from the additive bound:
// the Delta/m such that 2 exp(-Delta^2/m) = alpha.
double chernoff_interval_halfwidth(std::uint64_t m, double alpha);

}  // namespace zklab
