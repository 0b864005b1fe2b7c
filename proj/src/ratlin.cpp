#include "wm/ratlin.hpp"

#include <istream>
#include <sstream>

#include "wm/errors.hpp"

namespace wm {

RatVector mat_apply(const RatMatrix& m, const RatVector& x) {
    if (x.size() != m.cols()) throw precondition_error("dimension mismatch in mat_apply");
    RatVector out(m.rows(), Rat(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * x[j];
    return out;
}

RatMatrix parse_matrix(std::istream& is) {
    std::vector<RatVector> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        RatVector row;
        std::string tok;
        while (ls >> tok) {
            try {
                row.push_back(parse_rat(tok));
            } catch (const format_error&) {
                throw format_error("line " + std::to_string(lineno) + ": bad entry '" + tok + "'");
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw format_error("line " + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw format_error("empty matrix");
    RatMatrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

RatVector parse_vector(std::istream& is) {
    RatVector out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                out.push_back(parse_rat(tok));
            } catch (const format_error&) {
                throw format_error("line " + std::to_string(lineno) + ": bad entry '" + tok + "'");
            }
        }
    }
    if (out.empty()) throw format_error("empty vector");
    return out;
}

namespace {

struct RrefResult {
    RatMatrix m;                     // reduced row echelon form
    std::vector<size_t> pivot_cols;  // one per nonzero row
    // Row-operation tracker: trans * original = m (trans is rows x rows).
    RatMatrix trans;
};

RrefResult rref(const RatMatrix& in) {
    RrefResult r{in, {}, RatMatrix(in.rows(), in.rows())};
    for (size_t i = 0; i < in.rows(); ++i) r.trans.at(i, i) = 1;
    size_t row = 0;
    for (size_t col = 0; col < in.cols() && row < in.rows(); ++col) {
        size_t pivot = row;
        while (pivot < in.rows() && r.m.at(pivot, col) == 0) ++pivot;
        if (pivot == in.rows()) continue;
        if (pivot != row) {
            for (size_t j = 0; j < in.cols(); ++j) std::swap(r.m.at(pivot, j), r.m.at(row, j));
            for (size_t j = 0; j < in.rows(); ++j)
                std::swap(r.trans.at(pivot, j), r.trans.at(row, j));
        }
        Rat inv = 1 / r.m.at(row, col);
        for (size_t j = 0; j < in.cols(); ++j) r.m.at(row, j) *= inv;
        for (size_t j = 0; j < in.rows(); ++j) r.trans.at(row, j) *= inv;
        for (size_t i = 0; i < in.rows(); ++i) {
            if (i == row || r.m.at(i, col) == 0) continue;
            Rat factor = r.m.at(i, col);
            for (size_t j = 0; j < in.cols(); ++j) r.m.at(i, j) -= factor * r.m.at(row, j);
            for (size_t j = 0; j < in.rows(); ++j) r.trans.at(i, j) -= factor * r.trans.at(row, j);
        }
        r.pivot_cols.push_back(col);
        ++row;
    }
    return r;
}

}  // namespace

std::vector<RatVector> nullspace(const RatMatrix& b) {
    RrefResult r = rref(b);
    size_t k = b.cols();
    std::vector<bool> is_pivot(k, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (size_t free = 0; free < k; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(k, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::variant<RatVector, Inconsistency> particular_solution(const RatMatrix& b,
                                                           const RatVector& d) {
    if (d.size() != b.rows()) throw precondition_error("rhs length must match rows");
    // rref of the augmented system, tracking row operations for the witness
    RatMatrix aug(b.rows(), b.cols() + 1);
    for (size_t i = 0; i < b.rows(); ++i) {
        for (size_t j = 0; j < b.cols(); ++j) aug.at(i, j) = b.at(i, j);
        aug.at(i, b.cols()) = d[i];
    }
    RrefResult r = rref(aug);
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == b.cols()) {
            // row i of the reduced system reads 0 = 1
            RatVector y(b.rows());
            for (size_t j = 0; j < b.rows(); ++j) y[j] = r.trans.at(i, j);
            return Inconsistency{std::move(y)};
        }
    }
    RatVector x(b.cols(), Rat(0));
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = r.m.at(i, b.cols());
    return x;
}

int pair_projection_dim(const std::vector<RatVector>& basis, size_t i, size_t j) {
    if (i == j) throw precondition_error("pair projection needs distinct coordinates");
    // rank of the 2 x r matrix of (v[i], v[j]) columns
    Rat a0, a1;  // first independent column found
    bool have = false;
    for (const auto& v : basis) {
        const Rat &x = v[i], &y = v[j];
        if (x == 0 && y == 0) continue;
        if (!have) {
            a0 = x;
            a1 = y;
            have = true;
            continue;
        }
        if (a0 * y - a1 * x != 0) return 2;
    }
    return have ? 1 : 0;
}

namespace {

// column-style Hermite reduction on an integer matrix: returns U (unimodular,
// cols x cols) and the transformed matrix H = A * U with staircase columns
void hermite_columns(std::vector<std::vector<Int>>& a, std::vector<std::vector<Int>>& u) {
    size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    auto col_addmul = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
        for (size_t i = 0; i < cols; ++i) u[i][dst] += f * u[i][src];
    };
    auto col_swap = [&](size_t c1, size_t c2) {
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][c1], a[i][c2]);
        for (size_t i = 0; i < cols; ++i) std::swap(u[i][c1], u[i][c2]);
    };
    size_t lead = 0;
    for (size_t row = 0; row < rows && lead < cols; ++row) {
        // gcd-reduce all entries a[row][lead..] into column `lead`
        for (;;) {
            size_t nz = lead;
            size_t count = 0, best = lead;
            Int best_abs;
            for (size_t c = lead; c < cols; ++c) {
                if (a[row][c] != 0) {
                    ++count;
                    Int ab = abs(a[row][c]);
                    if (count == 1 || ab < best_abs) {
                        best_abs = ab;
                        best = c;
                    }
                    nz = c;
                }
            }
            (void)nz;
            if (count == 0) break;        // row has no pivot at/after lead
            if (count == 1 && best != lead) col_swap(best, lead);
            if (count <= 1) break;
            if (best != lead) col_swap(best, lead);
            for (size_t c = lead + 1; c < cols; ++c) {
                if (a[row][c] == 0) continue;
                Int q = a[row][c] / a[row][lead];  // truncated division is fine for gcd steps
                if (q != 0) col_addmul(c, lead, -q);
            }
        }
        if (a[row][lead] != 0) ++lead;
    }
}

}  // namespace

std::optional<std::vector<Int>> integer_point(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw precondition_error("rhs length must match rows");
    size_t rows = a.rows(), cols = a.cols();
    // clear denominators per row
    std::vector<std::vector<Int>> ai(rows, std::vector<Int>(cols));
    std::vector<Int> bi(rows);
    for (size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (size_t j = 0; j < cols; ++j) l = lcm(l, a.at(i, j).get_den());
        l = lcm(l, b[i].get_den());
        for (size_t j = 0; j < cols; ++j) {
            Rat scaled = a.at(i, j) * Rat(l);
            ai[i][j] = scaled.get_num();
        }
        Rat scaled = b[i] * Rat(l);
        bi[i] = scaled.get_num();
    }

    std::vector<std::vector<Int>> h = ai;
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;
    hermite_columns(h, u);

    // forward-substitute: h is column-staircase, solve h y = b over Z
    std::vector<Int> y(cols, 0);
    size_t lead = 0;
    for (size_t row = 0; row < rows; ++row) {
        Int val = bi[row];
        for (size_t c = 0; c < lead; ++c) val -= h[row][c] * y[c];
        if (lead < cols && h[row][lead] != 0) {
            if (val % h[row][lead] != 0) return std::nullopt;  // no integer solution
            y[lead] = val / h[row][lead];
            ++lead;
        } else {
            if (val != 0) return std::nullopt;  // inconsistent over the rationals
        }
    }
    // x = U y
    std::vector<Int> x(cols, 0);
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j) x[i] += u[i][j] * y[j];
    return x;
}

}  // namespace wm
