#include "wm/ll_property.hpp"

#include <vector>

#include "wm/errors.hpp"

namespace wm {

std::optional<uint64_t> ll_window(const IntegerSet& a, uint64_t l) {
    if (l == 0) throw precondition_error("l must be positive");
    uint64_t n = a.horizon();
    if (l > n) return std::nullopt;

    // run[p] = length of the zero run ending at position p (1-based)
    // ends[k] = least p >= k with run[p] >= l, i.e. the first place where a
    // window starting at k has seen l consecutive zeros
    std::vector<uint64_t> next_end(n + 2, 0);  // 0 = none
    {
        uint64_t run = 0;
        std::vector<uint64_t> end_at(n + 1, 0);
        for (uint64_t p = 1; p <= n; ++p) {
            run = a.contains(p) ? 0 : run + 1;
            end_at[p] = (run >= l) ? 1 : 0;
        }
        next_end[n + 1] = 0;
        for (uint64_t p = n; p >= 1; --p) {
            next_end[p] = end_at[p] ? p : next_end[p + 1];
            if (p == 1) break;
        }
    }

    // required window length from start k: the run must END at >= k + l - 1
    // and lie fully inside the window, so L >= end - k + 1
    // prefix_max[j] = max over k <= j of required length (infinite -> sentinel)
    constexpr uint64_t kInf = ~uint64_t(0);
    std::vector<uint64_t> prefix_max(n + 1, 0);
    uint64_t running = 0;
    for (uint64_t k = 1; k <= n; ++k) {
        uint64_t first = (k + l - 1 <= n) ? next_end[k + l - 1] : 0;
        uint64_t need = first ? (first - k + 1) : kInf;
        running = std::max(running, need);
        prefix_max[k] = running;
    }

    uint64_t cap = n / 2;
    for (uint64_t len = l; len <= cap; ++len) {
        uint64_t last_start = n - len + 1;
        if (prefix_max[last_start] <= len) return len;
    }
    return std::nullopt;
}

}  // namespace wm
