#include "wm/liouville.hpp"

#include <algorithm>

#include "wm/correlation.hpp"
#include "wm/errors.hpp"
#include "wm/parallel.hpp"

namespace wm {

QSignAssignment QSignAssignment::all_primes() {
    QSignAssignment q;
    q.all = true;
    return q;
}

int QSignAssignment::sign_of_prime(uint64_t p) const {
    if (all) return -1;
    if (seed) return (counter_word(*seed, p) >> 63) ? -1 : +1;
    return std::find(q_primes.begin(), q_primes.end(), p) != q_primes.end() ? -1 : +1;
}

std::vector<uint32_t> spf_table(uint64_t n) {
    if (n > (uint64_t(1) << 31)) throw budget_error("sieve capped at N <= 2^31");
    std::vector<uint32_t> spf(n + 1, 0);
    std::vector<uint32_t> primes;
    for (uint64_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            spf[i] = uint32_t(i);
            primes.push_back(uint32_t(i));
        }
        for (uint32_t p : primes) {
            if (p > spf[i] || i * p > n) break;
            spf[i * p] = p;
        }
    }
    return spf;
}

namespace {

MultSignResult mult_from_spf(uint64_t n, const std::vector<uint32_t>& spf,
                             const QSignAssignment& q) {
    MultSignResult out{SignSeq(n), IntegerSet(n)};
    out.values.set_sign(1, +1);  // empty product
    std::vector<int8_t> val(n + 1, 0);
    val[1] = +1;
    for (uint64_t i = 2; i <= n; ++i) {
        uint32_t p = spf[i];
        int8_t s = (p == i) ? int8_t(q.sign_of_prime(i)) : int8_t(val[p] * val[i / p]);
        val[i] = s;
        out.values.set_sign(i, s);
        if (s < 0) out.negatives.insert(i);
    }
    return out;
}

}  // namespace

MultSignResult mult_liouville(uint64_t n, const QSignAssignment& q) {
    if (n < 2) throw precondition_error("N must be at least 2");
    auto spf = spf_table(n);
    for (uint64_t p : q.q_primes)
        if (p < 2 || (p <= n && spf[p] != p))
            throw precondition_error("Q must contain primes only: " + std::to_string(p));
    return mult_from_spf(n, spf, q);
}

SecondMomentReport second_moment_mc(std::span<const uint64_t> shifts, uint64_t n, uint64_t trials,
                                    const Seed& seed) {
    if (trials == 0) throw precondition_error("trials must be >= 1");
    if (n == 0) throw precondition_error("N must be positive");
    uint64_t reach = n + (shifts.empty() ? 0 : shifts.back());
    uint64_t sieve_to = std::max<uint64_t>(reach, 2);
    auto spf = spf_table(sieve_to);

    SecondMomentReport rep;
    rep.shifts.assign(shifts.begin(), shifts.end());
    rep.n = n;
    rep.trials = trials;
    rep.per_trial.resize(trials);

    parallel_for(trials, [&](size_t t) {
        QSignAssignment q = QSignAssignment::from_seed(substream(seed, t));
        MultSignResult ms = mult_from_spf(sieve_to, spf, q);
        rep.per_trial[t] = correlation(ms.values, shifts, n).value;
    });

    Rat sum_sq = 0;
    for (const Rat& t : rep.per_trial) sum_sq += t * t;
    rep.mean_square = sum_sq / Rat(trials);
    return rep;
}

}  // namespace wm
