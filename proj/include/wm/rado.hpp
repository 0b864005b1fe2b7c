#pragma once

#include <vector>

#include "wm/ratlin.hpp"

namespace wm {

// Columns condition for a homogeneous system A x = 0: a partition
// I_1, ..., I_l of the columns such that the columns of I_1 sum to zero and
// each later block's column-sum is a rational combination of the columns in
// the earlier blocks.  `coeffs[r]` holds, for block r >= 1 (0-based), the
// combination over columns listed in `span_columns[r]`.
struct RadoResult {
    bool regular = false;
    std::vector<std::vector<size_t>> blocks;        // 0-based column indices
    std::vector<std::vector<size_t>> span_columns;  // per block r >= 1
    std::vector<RatVector> coeffs;                  // aligned with span_columns
};

// Exhaustive subset search, deterministic (candidate blocks enumerated in
// ascending bitmask order, failed placements memoized).  Hard cap of 20
// columns; past that the subset space is out of desk range.
RadoResult rado_regular(const RatMatrix& a);

}  // namespace wm
