#pragma once

#include <optional>
#include <vector>

#include "wm/ratlin.hpp"

namespace wm {

// Search for a strictly positive vector in span(basis): exact
// Fourier-Motzkin elimination on the system  sum_r t_r basis[r][i] >= 1
// for every coordinate i.
struct PositiveVectorResult {
    // coefficients over the basis and the point itself, when feasible
    std::optional<RatVector> combination;
    std::optional<RatVector> point;
    // infeasible case: multipliers y >= 0 over the k coordinate inequalities
    // with sum_i y_i * basis[r][i] = 0 for every r while sum_i y_i >= 1,
    // certifying that no combination can dominate the all-ones vector
    std::optional<RatVector> farkas;
    bool feasible() const { return point.has_value(); }
};

PositiveVectorResult positive_vector(const std::vector<RatVector>& basis, size_t dim);

}  // namespace wm
