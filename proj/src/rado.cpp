#include "wm/rado.hpp"

#include <unordered_set>

#include "wm/errors.hpp"

namespace wm {

namespace {

// solve  sum_{j in span_cols} c_j * col_j = target  exactly
std::optional<RatVector> in_span(const RatMatrix& a, const std::vector<size_t>& span_cols,
                                 const RatVector& target) {
    if (span_cols.empty()) {
        for (const Rat& t : target)
            if (t != 0) return std::nullopt;
        return RatVector{};
    }
    RatMatrix sys(a.rows(), span_cols.size());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < span_cols.size(); ++j) sys.at(i, j) = a.at(i, span_cols[j]);
    auto sol = particular_solution(sys, target);
    if (std::holds_alternative<Inconsistency>(sol)) return std::nullopt;
    return std::get<RatVector>(sol);
}

RatVector column_sum(const RatMatrix& a, uint32_t mask) {
    RatVector sum(a.rows(), Rat(0));
    for (size_t j = 0; j < a.cols(); ++j)
        if (mask & (uint32_t(1) << j))
            for (size_t i = 0; i < a.rows(); ++i) sum[i] += a.at(i, j);
    return sum;
}

struct Search {
    const RatMatrix& a;
    size_t k;
    uint32_t full;
    std::unordered_set<uint32_t> dead;  // placed-masks with no completion
    std::vector<uint32_t> chosen;       // block masks along the current path

    bool dfs(uint32_t placed) {
        if (placed == full) return true;
        if (dead.count(placed)) return false;
        std::vector<size_t> span_cols;
        for (size_t j = 0; j < k; ++j)
            if (placed & (uint32_t(1) << j)) span_cols.push_back(j);
        uint32_t rem = full & ~placed;
        // nonempty submasks of rem, ascending, so results are deterministic
        for (uint32_t sub = 1; sub <= rem; ++sub) {
            if ((sub & rem) != sub) continue;
            RatVector sum = column_sum(a, sub);
            if (!in_span(a, span_cols, sum)) continue;
            chosen.push_back(sub);
            if (dfs(placed | sub)) return true;
            chosen.pop_back();
        }
        dead.insert(placed);
        return false;
    }
};

}  // namespace

RadoResult rado_regular(const RatMatrix& a) {
    size_t k = a.cols();
    if (k > 20) throw budget_error("columns condition search capped at 20 columns");
    RadoResult out;
    Search s{a, k, (uint32_t(1) << k) - 1, {}, {}};
    if (!s.dfs(0)) return out;

    out.regular = true;
    std::vector<size_t> placed_cols;
    for (uint32_t mask : s.chosen) {
        std::vector<size_t> block;
        for (size_t j = 0; j < k; ++j)
            if (mask & (uint32_t(1) << j)) block.push_back(j);
        if (!out.blocks.empty()) {
            RatVector sum = column_sum(a, mask);
            auto c = in_span(a, placed_cols, sum);
            out.span_columns.push_back(placed_cols);
            out.coeffs.push_back(std::move(*c));
        }
        placed_cols.insert(placed_cols.end(), block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    return out;
}

}  // namespace wm
