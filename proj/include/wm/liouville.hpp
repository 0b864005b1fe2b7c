#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wm/integer_set.hpp"
#include "wm/rational.hpp"
#include "wm/rng.hpp"

namespace wm {

// Sign choice on primes: -1 on members of Q, +1 elsewhere.  Q is either an
// explicit prime list or drawn per prime with probability 1/2, keyed by the
// prime value itself so that assignments are seekable.
struct QSignAssignment {
    std::optional<Seed> seed;         // set: random Q derived from the seed
    std::vector<uint64_t> q_primes;   // explicit Q; used when seed is unset

    static QSignAssignment from_seed(const Seed& s) { return QSignAssignment{s, {}}; }
    static QSignAssignment from_primes(std::vector<uint64_t> primes) {
        return QSignAssignment{std::nullopt, std::move(primes)};
    }
    static QSignAssignment all_primes();  // classical Liouville signs

    bool all = false;

    int sign_of_prime(uint64_t p) const;
};

struct MultSignResult {
    SignSeq values;        // the completely multiplicative +/-1 sequence on [1, N]
    IntegerSet negatives;  // {n : value(n) = -1}
};

// Completely multiplicative extension of the prime signs, computed with a
// smallest-prime-factor sieve; O(N) words of memory, N capped at 2^31.
MultSignResult mult_liouville(uint64_t n, const QSignAssignment& q);

// Smallest-prime-factor table for [2, n] (spf[i] = least prime dividing i);
// shared by sieving and factor walks.
std::vector<uint32_t> spf_table(uint64_t n);

struct SecondMomentReport {
    std::vector<uint64_t> shifts;
    uint64_t n = 0;
    uint64_t trials = 0;
    Rat mean_square;          // exact mean of T_N^2 over the trials
    std::vector<Rat> per_trial;  // T_N per trial
};

// Monte-Carlo mean of T_N^2 over independent random sign assignments, where
// T_N = (1/N) sum lambda(n) lambda(n+i_1) ... lambda(n+i_k).
SecondMomentReport second_moment_mc(std::span<const uint64_t> shifts, uint64_t n, uint64_t trials,
                                    const Seed& seed);

}  // namespace wm
