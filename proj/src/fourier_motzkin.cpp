#include "wm/fourier_motzkin.hpp"

#include <algorithm>
#include <map>

#include "wm/errors.hpp"

namespace wm {

namespace {

// One inequality  sum_j coeff[j] * t_j >= rhs, carrying the nonnegative
// multipliers over the original inequalities that derived it.
struct Ineq {
    RatVector coeff;
    Rat rhs;
    RatVector mult;
};

// normalize so the first nonzero coefficient is +/-1; used only to detect
// duplicates and keep the inequality count in check
std::vector<Rat> dedup_key(const Ineq& q) {
    std::vector<Rat> key;
    key.reserve(q.coeff.size() + 1);
    Rat scale;
    bool found = false;
    for (const Rat& c : q.coeff)
        if (c != 0) {
            scale = 1 / rat_abs(c);
            found = true;
            break;
        }
    if (!found) scale = q.rhs != 0 ? 1 / rat_abs(q.rhs) : Rat(1);
    for (const Rat& c : q.coeff) key.push_back(c * scale);
    key.push_back(q.rhs * scale);
    return key;
}

}  // namespace

PositiveVectorResult positive_vector(const std::vector<RatVector>& basis, size_t dim) {
    PositiveVectorResult res;
    size_t r = basis.size();
    for (const auto& v : basis)
        if (v.size() != dim) throw precondition_error("basis vector dimension mismatch");

    std::vector<Ineq> sys;
    for (size_t i = 0; i < dim; ++i) {
        Ineq q;
        q.coeff.resize(r, Rat(0));
        for (size_t j = 0; j < r; ++j) q.coeff[j] = basis[j][i];
        q.rhs = 1;
        q.mult.assign(dim, Rat(0));
        q.mult[i] = 1;
        sys.push_back(std::move(q));
    }

    // eliminate t_{r-1}, ..., t_0, keeping each stage for back-substitution
    std::vector<std::vector<Ineq>> stages;
    stages.push_back(sys);
    for (size_t var = r; var-- > 0;) {
        const auto& cur = stages.back();
        std::vector<const Ineq*> lower, upper, flat;
        for (const auto& q : cur) {
            int s = sgn(q.coeff[var]);
            if (s > 0)
                lower.push_back(&q);
            else if (s < 0)
                upper.push_back(&q);
            else
                flat.push_back(&q);
        }
        std::vector<Ineq> next;
        std::map<std::vector<Rat>, bool> seen;
        auto push = [&](Ineq q) {
            auto key = dedup_key(q);
            if (seen.emplace(std::move(key), true).second) next.push_back(std::move(q));
        };
        for (const Ineq* q : flat) push(*q);
        for (const Ineq* lo : lower)
            for (const Ineq* up : upper) {
                // (1/a_lo) * lo + (1/|a_up|) * up eliminates the variable
                Rat wl = 1 / lo->coeff[var];
                Rat wu = 1 / (-up->coeff[var]);
                Ineq q;
                q.coeff.resize(r, Rat(0));
                for (size_t j = 0; j < r; ++j)
                    q.coeff[j] = wl * lo->coeff[j] + wu * up->coeff[j];
                q.coeff[var] = 0;  // exact by construction
                q.rhs = wl * lo->rhs + wu * up->rhs;
                q.mult.assign(dim, Rat(0));
                for (size_t i = 0; i < dim; ++i)
                    q.mult[i] = wl * lo->mult[i] + wu * up->mult[i];
                push(std::move(q));
            }
        stages.push_back(std::move(next));
    }

    // constant stage: every inequality reads 0 >= rhs
    for (const auto& q : stages.back()) {
        if (q.rhs > 0) {
            res.farkas = q.mult;
            return res;
        }
    }

    // feasible: back-substitute t_0, t_1, ..., t_{r-1}
    RatVector t(r, Rat(0));
    for (size_t var = 0; var < r; ++var) {
        // stages[k] has variables 0..r-1-k left, so variable `var` is pinned
        // from stages[r-1-var], whose bounds involve only t_0..t_{var-1}
        const auto& stage = stages[r - 1 - var];
        bool has_lb = false, has_ub = false;
        Rat lb, ub;
        for (const auto& q : stage) {
            int s = sgn(q.coeff[var]);
            if (s == 0) continue;
            Rat bound = q.rhs;
            for (size_t j = 0; j < var; ++j) bound -= q.coeff[j] * t[j];
            bound /= q.coeff[var];
            if (s > 0) {
                if (!has_lb || bound > lb) lb = bound;
                has_lb = true;
            } else {
                if (!has_ub || bound < ub) ub = bound;
                has_ub = true;
            }
        }
        if (has_lb)
            t[var] = lb;
        else if (has_ub)
            t[var] = ub < 0 ? ub : Rat(0);
        else
            t[var] = 0;
    }

    RatVector point(dim, Rat(0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < r; ++j) point[i] += t[j] * basis[j][i];
    for (size_t i = 0; i < dim; ++i)
        if (!(point[i] >= 1))
            throw error("fourier-motzkin back-substitution produced an infeasible point");
    res.combination = std::move(t);
    res.point = std::move(point);
    return res;
}

}  // namespace wm
