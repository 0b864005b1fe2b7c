#include "wm/interval_removal.hpp"

#include <cstdlib>

#include "wm/errors.hpp"

namespace wm {

IntegerSet remove_poly_intervals(const IntegerSet& a, const IntPolynomial& p1,
                                 const IntPolynomial& p2) {
    if (p1.degree() > p2.degree() - 2)
        throw precondition_error("degree gap violated: need deg p1 <= deg p2 - 2");
    if (p1.leading() <= 0 || p2.leading() <= 0)
        throw precondition_error("leading coefficients must be positive");

    IntegerSet out = a;
    IntPolynomial diff = p2 - p1;
    // diff has degree >= 2 and positive leading coefficient, so once
    // n > sum |coeffs| + N the value diff(n) stays above N and no interval
    // can intersect [1, N] any more.
    __int128 coeff_sum = 0;
    for (long long c : diff.coeffs()) coeff_sum += std::llabs(c);
    uint64_t n_stop = a.horizon() + uint64_t(coeff_sum) + 2;

    for (uint64_t n = 1; n <= n_stop; ++n) {
        __int128 hi = p2.eval(n);
        __int128 lo = hi - p1.eval(n);
        if (hi < 1) continue;
        if (lo > __int128(a.horizon())) {
            if (n > uint64_t(coeff_sum) + 1) break;  // monotone regime reached
            continue;
        }
        uint64_t from = lo < 1 ? 1 : uint64_t(lo);
        uint64_t to = hi > __int128(a.horizon()) ? a.horizon() : uint64_t(hi);
        for (uint64_t m = from; m <= to; ++m)
            if (out.contains(m)) out.erase(m);
    }
    return out;
}

}  // namespace wm
