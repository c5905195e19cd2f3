#pragma once

#include <cstdint>
#include <optional>

#include "zklab/rat.hpp"

namespace zklab {

// Counter-based deterministic stream: the value of draw i depends only on
// (seed, i), so identical (seed, counter) always replays identically and
// child streams can be split off without coupling.
struct SeedStream {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    explicit SeedStream(std::uint64_t s = 0, std::uint64_t c = 0) : seed(s), counter(c) {}

    std::uint64_t next_u64();

    // Uniform over [0, n), n >= 1; rejection keeps it unbiased.
    std::uint64_t uniform(std::uint64_t n);

    // Uniform over [0, n) for arbitrary-precision n >= 1.
    Int uniform_int(const Int& n);

    // Exact Bernoulli(p) for rational p in [0, 1].
    bool bernoulli(const Rat& p);

    // Independent child stream; advances this stream by one draw.
    SeedStream split(std::uint64_t tag);
};

}  // namespace zklab
