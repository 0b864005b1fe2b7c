#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wm/rational.hpp"

namespace wm {

// Dense matrix of exact rationals (GMP-backed, always in lowest terms).
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

using RatVector = std::vector<Rat>;

RatVector mat_apply(const RatMatrix& m, const RatVector& x);

// One row per line, whitespace-separated "p" or "p/q" entries.
RatMatrix parse_matrix(std::istream& is);
// All whitespace-separated rationals in the stream, as one vector.
RatVector parse_vector(std::istream& is);

// Exact basis of ker(B); size = cols - rank.
std::vector<RatVector> nullspace(const RatMatrix& b);

// Row combination y with y^T B = 0 but y^T d != 0: a machine-checkable
// witness that B x = d has no solution.
struct Inconsistency {
    RatVector row_combination;
};

std::variant<RatVector, Inconsistency> particular_solution(const RatMatrix& b, const RatVector& d);

// dim span of {(v[i], v[j]) : v in basis} -- 0, 1 or 2.
int pair_projection_dim(const std::vector<RatVector>& basis, size_t i, size_t j);

// Integer solution of A x = b (denominators cleared, then a column-style
// Hermite reduction); nullopt when none exists.
std::optional<std::vector<Int>> integer_point(const RatMatrix& a, const RatVector& b);

}  // namespace wm
