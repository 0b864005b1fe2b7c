#include "wm/rng.hpp"

#include "wm/errors.hpp"

namespace wm {

namespace {

constexpr uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
    unsigned __int128 p = (unsigned __int128)a * b;
    hi = uint64_t(p >> 64);
    lo = uint64_t(p);
}

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::array<uint64_t, 4> philox4x64(const std::array<uint64_t, 4>& counter,
                                   const std::array<uint64_t, 2>& key) {
    std::array<uint64_t, 4> x = counter;
    uint64_t k0 = key[0], k1 = key[1];
    for (int round = 0; round < 10; ++round) {
        uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, x[0], hi0, lo0);
        mulhilo(kPhiloxM1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return x;
}

uint64_t counter_word(const Seed& s, uint64_t counter) {
    return philox4x64({counter, 0, 0, 0}, {s.value, s.stream})[0];
}

Seed substream(const Seed& s, uint64_t label) {
    return Seed{s.value, mix64(s.stream ^ (label * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull))};
}

uint64_t bernoulli_threshold(const Rat& p) {
    if (p <= 0 || p >= 1) throw precondition_error("probability must satisfy 0 < p < 1");
    Int scaled = (p.get_num() << 64) / p.get_den();
    return mpz_get_ui(scaled.get_mpz_t());  // < 2^64 since 0 < p < 1
}

}  // namespace wm
