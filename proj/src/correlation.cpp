#include "wm/correlation.hpp"

#include <algorithm>

#include "wm/errors.hpp"
#include "wm/parallel.hpp"

namespace wm {

namespace {

void check_shifts(std::span<const uint64_t> shifts, uint64_t n, uint64_t horizon) {
    if (n == 0) throw precondition_error("N must be positive");
    for (size_t i = 0; i + 1 < shifts.size(); ++i)
        if (shifts[i] >= shifts[i + 1])
            throw precondition_error("shifts must be strictly increasing");
    if (!shifts.empty() && shifts.front() == 0)
        throw precondition_error("shifts must be positive");
    uint64_t reach = n + (shifts.empty() ? 0 : shifts.back());
    if (reach > horizon) throw horizon_error("N + max shift exceeds horizon");
}

Rat correlation_value(const BitVec& plus, std::span<const uint64_t> shifts, uint64_t n) {
    BitVec acc(n);
    acc.xor_shifted(plus, 0);
    for (uint64_t s : shifts) acc.xor_shifted(plus, s);
    // acc bit = parity of +1 factors; flip so that set bit = product is -1
    if ((shifts.size() + 1) % 2 == 1) acc.flip_all();
    uint64_t minus = acc.count();
    Int num = Int(n) - 2 * Int(minus);
    return make_rat(num, Int(n));
}

}  // namespace

CorrelationReport correlation(const SignSeq& chi, std::span<const uint64_t> shifts, uint64_t n) {
    check_shifts(shifts, n, chi.horizon());
    CorrelationReport rep;
    rep.shifts.assign(shifts.begin(), shifts.end());
    rep.n = n;
    rep.value = correlation_value(chi.plus_bits(), shifts, n);
    return rep;
}

CorrelationReport correlation(const IntegerSet& a, std::span<const uint64_t> shifts, uint64_t n) {
    check_shifts(shifts, n, a.horizon());
    CorrelationReport rep;
    rep.shifts.assign(shifts.begin(), shifts.end());
    rep.n = n;
    rep.value = correlation_value(a.bits(), shifts, n);
    return rep;
}

Rat word_frequency(const IntegerSet& a, const std::string& word, uint64_t n) {
    if (word.empty()) throw precondition_error("word must be nonempty");
    if (n == 0) throw precondition_error("N must be positive");
    if (n + word.size() - 1 > a.horizon()) throw horizon_error("N + |w| - 1 exceeds horizon");
    BitVec not_a = a.bits();
    not_a.flip_all();
    BitVec acc(n);
    acc.fill_all();
    for (size_t j = 0; j < word.size(); ++j) {
        if (word[j] == '1')
            acc.and_shifted(a.bits(), j);
        else if (word[j] == '0')
            acc.and_shifted(not_a, j);
        else
            throw precondition_error("word must be over {0,1}");
    }
    return make_rat(Int(acc.count()), Int(n));
}

namespace {

// increasing tuples from [1, max_shift] with 0..max_order entries, ordered by
// length then lexicographically
std::vector<std::vector<uint64_t>> enumerate_tuples(unsigned max_order, uint64_t max_shift,
                                                    uint64_t budget) {
    std::vector<std::vector<uint64_t>> out;
    out.push_back({});
    for (unsigned k = 1; k <= max_order && k <= max_shift; ++k) {
        std::vector<uint64_t> idx(k);
        for (unsigned i = 0; i < k; ++i) idx[i] = i + 1;
        for (;;) {
            out.push_back(idx);
            if (out.size() > budget)
                throw budget_error("tuple budget exceeded: " + std::to_string(budget));
            // next combination
            int pos = int(k) - 1;
            while (pos >= 0 && idx[pos] == max_shift - (k - 1 - pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

}  // namespace

NormalityReport normality_test(const IntegerSet& a, const NormalityOptions& opt) {
    uint64_t n = opt.n;
    if (n == 0) {
        if (a.horizon() <= opt.max_shift) throw horizon_error("horizon too small for max shift");
        n = a.horizon() - opt.max_shift;
    }
    if (n + opt.max_shift > a.horizon()) throw horizon_error("N + max shift exceeds horizon");

    auto tuples = enumerate_tuples(opt.max_order, opt.max_shift, opt.tuple_budget);
    std::vector<Rat> values(tuples.size());
    parallel_for(tuples.size(), [&](size_t i) {
        values[i] = correlation(a, tuples[i], n).value;
    });

    // worst = largest |T|; ties broken by larger signed T, then earlier tuple
    size_t worst = 0;
    for (size_t i = 1; i < values.size(); ++i) {
        Rat ai = rat_abs(values[i]), aw = rat_abs(values[worst]);
        if (ai > aw || (ai == aw && values[i] > values[worst])) worst = i;
    }

    NormalityReport rep;
    rep.n = n;
    rep.tuples_checked = tuples.size();
    rep.worst_shifts = tuples[worst];
    rep.worst_value = values[worst];
    Rat worst_abs = rat_abs(values[worst]);
    if (opt.tau) {
        rep.tau = *opt.tau;
        rep.tau_note = "explicit";
        rep.pass = worst_abs <= rep.tau;
    } else {
        // |T| <= 10/sqrt(N) checked exactly as N*T^2 <= 100
        rep.tau = make_rat(Int(100), Int(n));  // reported as tau^2
        rep.tau_note = "default 10/sqrt(N), reported as tau^2 = 100/N";
        rep.pass = worst_abs * worst_abs * Rat(n) <= 100;
    }
    return rep;
}

bool subsequence_consistency(const std::vector<std::pair<uint64_t, Rat>>& checkpoints,
                             const std::vector<std::pair<uint64_t, Rat>>& full,
                             const Rat& bound) {
    for (size_t i = 0; i + 1 < checkpoints.size(); ++i)
        if (checkpoints[i].first >= checkpoints[i + 1].first)
            throw precondition_error("checkpoint indices must be strictly increasing");
    if (checkpoints.empty()) return true;
    for (const auto& [n, t] : full) {
        // latest checkpoint at or before n
        const std::pair<uint64_t, Rat>* cp = nullptr;
        for (const auto& c : checkpoints)
            if (c.first <= n) cp = &c;
        if (!cp) continue;
        uint64_t ni = cp->first;
        Rat lhs = rat_abs(t - cp->second);
        Rat rhs = 2 * (Rat(1) - make_rat(Int(ni), Int(n))) +
                  bound * (make_rat(Int(n), Int(ni)) - Rat(1));
        if (lhs > rhs) return false;
    }
    return true;
}

}  // namespace wm
