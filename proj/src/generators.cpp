#include "wm/generators.hpp"

#include <algorithm>

#include "wm/errors.hpp"

namespace wm {

namespace {

using u128 = unsigned __int128;

u128 to_u128(uint64_t hi, uint64_t lo) { return (u128(hi) << 64) | lo; }

// round a rational in [0,1] to 128-bit fixed point; up = ceil, else floor
u128 fixed128(const Rat& q, bool up) {
    Int scaled_num = q.get_num() << 128;
    Int den = q.get_den();
    Int fl = scaled_num / den;  // GMP: truncation; q >= 0 here so == floor
    if (up && fl * den != scaled_num) fl += 1;
    Int mask64 = (Int(1) << 64) - 1;
    uint64_t lo = mpz_get_ui(Int(fl & mask64).get_mpz_t());
    uint64_t hi = mpz_get_ui(Int((fl >> 64) & mask64).get_mpz_t());
    return to_u128(hi, lo);
}

}  // namespace

SturmianParams SturmianParams::sqrt2_interval(const Rat& lo, const Rat& hi) {
    return SturmianParams{kSqrt2Minus1Hi, kSqrt2Minus1Lo, lo, hi};
}

IntegerSet random_normal(uint64_t n, const Seed& seed, const Rat& p) {
    if (n == 0) throw precondition_error("N must be positive");
    uint64_t thr = bernoulli_threshold(p);
    IntegerSet out(n);
    for (uint64_t i = 1; i <= n; ++i)
        if (counter_word(seed, i) < thr) out.insert(i);
    return out;
}

IntegerSet sturmian(uint64_t n, const SturmianParams& params) {
    if (n == 0) throw precondition_error("N must be positive");
    if (n >= (uint64_t(1) << 63))
        throw precondition_error("horizon too large for 128-bit fixed point precision");
    if (!(params.lo >= 0 && params.lo < params.hi && params.hi < 1))
        throw precondition_error("interval must satisfy 0 <= u < v < 1");
    u128 alpha = to_u128(params.alpha_hi, params.alpha_lo);
    u128 lo = fixed128(params.lo, /*up=*/true);
    u128 hi = fixed128(params.hi, /*up=*/false);
    IntegerSet out(n);
    u128 x = 0;
    for (uint64_t i = 1; i <= n; ++i) {
        x += alpha;  // mod 2^128 automatically; exact, no accumulated drift
        if (x >= lo && x <= hi) out.insert(i);
    }
    return out;
}

IntegerSet periodic_set(uint64_t n, uint64_t modulus, const std::vector<uint64_t>& residues) {
    if (n == 0) throw precondition_error("N must be positive");
    if (modulus == 0) throw precondition_error("modulus must be positive");
    for (uint64_t r : residues)
        if (r >= modulus) throw precondition_error("residues must lie in [0, modulus)");
    std::vector<bool> in(modulus, false);
    for (uint64_t r : residues) in[r] = true;
    IntegerSet out(n);
    for (uint64_t i = 1; i <= n; ++i)
        if (in[i % modulus]) out.insert(i);
    return out;
}

}  // namespace wm
