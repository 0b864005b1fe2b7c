#pragma once

#include "wm/integer_set.hpp"
#include "wm/poly.hpp"

namespace wm {

// A \ union over n >= 1 of [p2(n) - p1(n), p2(n)], clipped to [1, horizon].
// Requires deg p1 <= deg p2 - 2 and positive leading coefficients; the
// removed gaps have density zero while every solution of the two-equation
// additive system lands inside them.
IntegerSet remove_poly_intervals(const IntegerSet& a, const IntPolynomial& p1,
                                 const IntPolynomial& p2);

}  // namespace wm
