#pragma once

#include <array>
#include <cstdint>

#include "wm/rational.hpp"

namespace wm {

// Identifies one reproducible random stream.  Identical (value, stream)
// produce bit-identical draws on every platform: all arithmetic below is
// plain unsigned 64-bit.
struct Seed {
    uint64_t value = 0;
    uint64_t stream = 0;
};

// Philox4x64-10 counter-based generator.  The draw for counter n does not
// depend on any other counter, so membership of n is seekable and parallel
// generation is order-independent.
std::array<uint64_t, 4> philox4x64(const std::array<uint64_t, 4>& counter,
                                   const std::array<uint64_t, 2>& key);

// First output word of the block keyed by the seed at the given counter.
uint64_t counter_word(const Seed& s, uint64_t counter);

// Child stream with a stable label; used to derive per-trial seeds.
Seed substream(const Seed& s, uint64_t label);

// floor(p * 2^64) for rational p in (0, 1); draw u passes iff u < threshold.
uint64_t bernoulli_threshold(const Rat& p);

}  // namespace wm
