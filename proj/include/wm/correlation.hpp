#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wm/integer_set.hpp"
#include "wm/rational.hpp"

namespace wm {

// T_N for one shift tuple: exact value of
//   (1/N) sum_{n=1..N} chi(n) chi(n+i_1) ... chi(n+i_k).
struct CorrelationReport {
    std::vector<uint64_t> shifts;  // strictly increasing, may be empty (k = 0)
    uint64_t n = 0;
    Rat value;  // in [-1, 1], denominator divides n
};

// Product of k+1 signs is -1 exactly when the number of -1 factors is odd,
// so the sum reduces to a popcount over XORed shifted bit vectors.
CorrelationReport correlation(const SignSeq& chi, std::span<const uint64_t> shifts, uint64_t n);
CorrelationReport correlation(const IntegerSet& a, std::span<const uint64_t> shifts, uint64_t n);

// Fraction of start positions n in [1, N] where 1_A(n+j-1) = w_j for all j.
// The word is given as a "01" string.
Rat word_frequency(const IntegerSet& a, const std::string& word, uint64_t n);

struct NormalityOptions {
    unsigned max_order = 3;    // largest tuple length k
    uint64_t max_shift = 8;    // shifts drawn from [1, max_shift]
    uint64_t n = 0;            // 0 means horizon - max_shift
    std::optional<Rat> tau;    // unset -> default gate |T| <= 10/sqrt(N)
    uint64_t tuple_budget = 200000;
};

struct NormalityReport {
    bool pass = false;
    std::vector<uint64_t> worst_shifts;
    Rat worst_value;
    uint64_t tuples_checked = 0;
    uint64_t n = 0;
    Rat tau;  // the gate actually applied (default gate reported as 100/N scaled; see tau_note)
    std::string tau_note;
};

// Evaluates T_N over every increasing tuple with at most max_order entries
// from [1, max_shift] (the empty tuple included) and gates each |T_N|.
// The default gate |T| <= 10/sqrt(N) is tested exactly as N*T^2 <= 100.
NormalityReport normality_test(const IntegerSet& a, const NormalityOptions& opt);

// Interpolation check between correlation checkpoints: for each (N, T_N) in
// `full` lying between consecutive checkpoints (N_i, T_{N_i}),
//   |T_N - T_{N_i}| <= 2 (1 - N_i/N) + bound (N/N_i - 1)
// must hold, where `bound` dominates |a_n|.
bool subsequence_consistency(const std::vector<std::pair<uint64_t, Rat>>& checkpoints,
                             const std::vector<std::pair<uint64_t, Rat>>& full, const Rat& bound);

}  // namespace wm
