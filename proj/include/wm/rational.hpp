#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wm {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(n, d) does not reduce to lowest terms by itself.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long long num, long long den) { return make_rat(Int((long)num), Int((long)den)); }

// "p" or "p/q" in base 10.
Rat parse_rat(const std::string& text);

std::string rat_str(const Rat& q);

inline double rat_d(const Rat& q) { return q.get_d(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace wm
