#pragma once

#include <cstdint>

#include "wm/integer_set.hpp"
#include "wm/rational.hpp"
#include "wm/rng.hpp"

namespace wm {

// Irrational rotation parameters.  alpha is a binary fraction with 128
// fractional bits (alpha_hi:alpha_lo); the membership test needs at least
// log2(horizon) + 64 valid bits, so horizons must stay below 2^63.
struct SturmianParams {
    uint64_t alpha_hi;
    uint64_t alpha_lo;
    Rat lo;  // closed interval [lo, hi] subset of [0, 1)
    Rat hi;

    static SturmianParams sqrt2_interval(const Rat& lo, const Rat& hi);
};

// floor((sqrt(2) - 1) * 2^128)
constexpr uint64_t kSqrt2Minus1Hi = 0x6a09e667f3bcc908ull;
constexpr uint64_t kSqrt2Minus1Lo = 0xb2fb1366ea957d3eull;

// Each n in [1, N] included independently with probability p, keyed by
// (seed, n); same seed gives the identical set on every platform and
// thread count.
IntegerSet random_normal(uint64_t n, const Seed& seed, const Rat& p = Rat(1, 2));

// {n : frac(alpha * n) in [lo, hi]} evaluated in 128-bit fixed point,
// with frac(alpha*n) computed as alpha_fixed * n mod 2^128 (no drift).
IntegerSet sturmian(uint64_t n, const SturmianParams& params);

// {n : n mod m in residues}
IntegerSet periodic_set(uint64_t n, uint64_t modulus, const std::vector<uint64_t>& residues);

}  // namespace wm
