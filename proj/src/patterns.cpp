#include "wm/patterns.hpp"

#include <algorithm>
#include <cmath>

#include "wm/errors.hpp"
#include "wm/rational.hpp"

namespace wm {

namespace {

using u128 = unsigned __int128;

std::optional<uint64_t> integer_sqrt(u128 v) {
    if (v == 0) return 0;
    uint64_t r = uint64_t(std::sqrt(double(v)));
    while (u128(r) * r > v) --r;
    while (u128(r + 1) * (r + 1) <= v) ++r;
    return u128(r) * r == v ? std::optional<uint64_t>(r) : std::nullopt;
}

// some x with x < z - x and both members; word-parallel against the
// mirrored window of the set
std::optional<uint64_t> sum_pair(const IntegerSet& a, uint64_t z) {
    uint64_t half = (z - 1) / 2;  // x < y strictly
    const BitVec& bits = a.bits();
    for (uint64_t start = 0; start < half; start += 64) {
        // bit j of w1 <-> candidate x = start + j + 1
        uint64_t w1 = bits.window(int64_t(start));
        if (!w1) continue;
        // partner of x is z - x at bit index z - x - 1 = (z - start - 2) - j
        uint64_t w2 = reverse_bits64(bits.window(int64_t(z) - int64_t(start) - 65));
        uint64_t both = w1 & w2;
        if (start + 64 > half) {
            uint64_t keep = half - start;  // only x <= floor(z/2)
            both &= keep >= 64 ? ~uint64_t(0) : ((uint64_t(1) << keep) - 1);
        }
        if (both) return start + uint64_t(std::countr_zero(both)) + 1;
    }
    return std::nullopt;
}

}  // namespace

std::string kind_str(PatternKind k) {
    switch (k) {
        case PatternKind::schur: return "schur";
        case PatternKind::mult_schur: return "mult-schur";
        case PatternKind::mult_square: return "mult-square";
        case PatternKind::sum_square: return "sum-square";
        case PatternKind::diff_square: return "diff-square";
        case PatternKind::ap: return "ap";
        case PatternKind::ip_prefix: return "ip-prefix";
        case PatternKind::recurrence: return "recurrence";
        case PatternKind::poly_system: return "poly-system";
    }
    return "?";
}

bool witness_holds(const PatternWitness& w, const IntegerSet& a, const IntegerSet* second,
                   const std::vector<IntPolynomial>* polys) {
    const auto& el = w.elements;
    auto all_in = [&](const IntegerSet& s) {
        for (uint64_t v : el)
            if (!s.contains(v)) return false;
        return true;
    };
    switch (w.kind) {
        case PatternKind::schur:
            return el.size() == 3 && all_in(a) && el[0] + el[1] == el[2];
        case PatternKind::mult_schur:
            return el.size() == 3 && all_in(a) && u128(el[0]) * el[1] == el[2];
        case PatternKind::mult_square:
            return el.size() == 3 && all_in(a) && el[0] != el[1] &&
                   u128(el[0]) * el[1] == u128(el[2]) * el[2];
        case PatternKind::sum_square:
            return el.size() == 2 && all_in(a) && w.auxiliary.size() == 1 &&
                   u128(el[0]) * el[0] + u128(el[1]) * el[1] ==
                       u128(w.auxiliary[0]) * w.auxiliary[0];
        case PatternKind::diff_square:
            return el.size() == 2 && all_in(a) && w.auxiliary.size() == 1 && el[0] > el[1] &&
                   u128(el[0]) * el[0] - u128(el[1]) * el[1] ==
                       u128(w.auxiliary[0]) * w.auxiliary[0];
        case PatternKind::ap: {
            if (el.size() < 3 || w.auxiliary.size() != 2 || !all_in(a)) return false;
            uint64_t start = w.auxiliary[0], diff = w.auxiliary[1];
            if (diff == 0 || el[0] != start) return false;
            for (size_t i = 0; i < el.size(); ++i)
                if (el[i] != start + i * diff) return false;
            return true;
        }
        case PatternKind::ip_prefix: {
            if (el.empty()) return false;
            size_t m = el.size();
            if (m > 20) return false;
            for (uint64_t mask = 1; mask < (uint64_t(1) << m); ++mask) {
                u128 sum = 0;
                for (size_t i = 0; i < m; ++i)
                    if (mask & (uint64_t(1) << i)) sum += el[i];
                if (sum > a.horizon() || !a.contains(uint64_t(sum))) return false;
            }
            return true;
        }
        case PatternKind::recurrence: {
            if (el.size() != 1 || w.auxiliary.size() != 1 || !second) return false;
            uint64_t s = el[0], n = w.auxiliary[0];
            return a.contains(s) && second->contains(n) && second->contains(n + s);
        }
        case PatternKind::poly_system: {
            if (!polys || el.size() != polys->size() + 2) return false;
            uint64_t x = el.front(), z = el.back();
            if (!a.contains(x)) return false;
            for (size_t i = 0; i < polys->size(); ++i) {
                uint64_t y = el[i + 1];
                if (!a.contains(y)) return false;
                if (__int128(x) + y != (*polys)[i].eval(z)) return false;
            }
            return true;
        }
    }
    return false;
}

std::optional<PatternWitness> find_schur(const IntegerSet& a) {
    for (uint64_t z : a.members()) {
        if (z < 2) continue;
        auto x = sum_pair(a, z);
        if (x) return PatternWitness{PatternKind::schur, {*x, z - *x, z}, {}};
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_mult_schur(const IntegerSet& a, bool allow_one) {
    uint64_t min_x = allow_one ? 1 : 2;
    for (uint64_t z : a.members()) {
        for (uint64_t x = min_x; x * x < z; ++x) {  // x < y strictly
            if (z % x) continue;
            uint64_t y = z / x;
            if (a.contains(x) && a.contains(y))
                return PatternWitness{PatternKind::mult_schur, {x, y, z}, {}};
        }
    }
    return std::nullopt;
}

namespace {

// complete scan over the parametrization x = m r^2, y = m s^2, z = m r s
std::optional<PatternWitness> mult_square_structured(const IntegerSet& a) {
    uint64_t n = a.horizon();
    for (uint64_t s = 2; s * s <= n; ++s)
        for (uint64_t r = 1; r < s; ++r)
            for (uint64_t m = 1; m * s * s <= n; ++m) {
                uint64_t x = m * r * r, y = m * s * s, z = m * r * s;
                if (a.contains(x) && a.contains(y) && a.contains(z))
                    return PatternWitness{PatternKind::mult_square, {x, y, z}, {}};
            }
    return std::nullopt;
}

std::optional<PatternWitness> mult_square_divisors(const IntegerSet& a) {
    for (uint64_t z : a.members()) {
        if (z == 1) continue;
        // divisors x < z of z^2 with z^2/x within the horizon
        for (uint64_t x = 1; x < z; ++x) {
            u128 zz = u128(z) * z;
            if (zz % x) continue;
            u128 y = zz / x;
            if (y > a.horizon()) continue;
            if (a.contains(x) && a.contains(uint64_t(y)))
                return PatternWitness{PatternKind::mult_square, {x, uint64_t(y), z}, {}};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> find_mult_square(const IntegerSet& a) {
    if (density(a) >= make_rat(3, 10)) return mult_square_structured(a);
    return mult_square_divisors(a);
}

namespace {

std::optional<PatternWitness> square_pair_scan(const IntegerSet& a, bool sum) {
    // fast path: dilate the known mutual triple into the set
    const uint64_t triple_sum[3][2] = {{44, 117}, {44, 240}, {117, 240}};
    const uint64_t triple_diff[3][2] = {{185, 153}, {697, 185}, {697, 153}};
    const auto& pairs = sum ? triple_sum : triple_diff;
    uint64_t n = a.horizon();
    for (int t = 0; t < 3; ++t) {
        uint64_t big = std::max(pairs[t][0], pairs[t][1]);
        for (uint64_t z = 1; z * big <= n; ++z) {
            uint64_t u = z * pairs[t][0], v = z * pairs[t][1];
            if (!a.contains(u) || !a.contains(v)) continue;
            u128 val = sum ? u128(u) * u + u128(v) * v : u128(std::max(u, v)) * std::max(u, v) -
                                                             u128(std::min(u, v)) * std::min(u, v);
            auto root = integer_sqrt(val);
            if (!root) continue;
            if (sum)
                return PatternWitness{PatternKind::sum_square, {std::min(u, v), std::max(u, v)},
                                      {*root}};
            return PatternWitness{PatternKind::diff_square, {std::max(u, v), std::min(u, v)},
                                  {*root}};
        }
    }
    // general pair scan
    auto mem = a.members();
    for (size_t i = 0; i < mem.size(); ++i)
        for (size_t j = sum ? i : i + 1; j < mem.size(); ++j) {
            uint64_t x = mem[i], y = mem[j];
            u128 val = sum ? u128(x) * x + u128(y) * y : u128(y) * y - u128(x) * x;
            auto root = integer_sqrt(val);
            if (!root) continue;
            if (sum) return PatternWitness{PatternKind::sum_square, {x, y}, {*root}};
            return PatternWitness{PatternKind::diff_square, {y, x}, {*root}};
        }
    return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> find_sum_square(const IntegerSet& a) {
    return square_pair_scan(a, true);
}

std::optional<PatternWitness> find_diff_square(const IntegerSet& a) {
    return square_pair_scan(a, false);
}

std::optional<PatternWitness> find_ap(const IntegerSet& a, unsigned k) {
    if (k < 3) throw precondition_error("progressions need k >= 3");
    uint64_t n = a.horizon();
    auto mem = a.members();
    if (mem.empty()) return std::nullopt;
    uint64_t d_max = (n - 1) / (k - 1);
    for (uint64_t d = 1; d <= d_max; ++d) {
        for (uint64_t start : mem) {
            if (start + u128(d) * (k - 1) > n) break;
            bool ok = true;
            for (unsigned j = 1; j < k && ok; ++j)
                if (!a.contains(start + d * j)) ok = false;
            if (ok) {
                PatternWitness w{PatternKind::ap, {}, {start, d}};
                for (unsigned j = 0; j < k; ++j) w.elements.push_back(start + d * j);
                return w;
            }
        }
    }
    return std::nullopt;
}

namespace {

struct IpSearch {
    const IntegerSet& a;
    const IpOptions& opt;
    uint64_t nodes = 0;
    std::vector<uint64_t> gens;

    bool dfs(const IntegerSet& current, unsigned remaining) {
        if (remaining == 0) return true;
        uint64_t prev_sum = 0;
        for (uint64_t g : gens) prev_sum += g;

        // candidates: members of the current intersection set, preferring
        // values above the running sum so that all finite sums are distinct;
        // ranked by the density of the next intersection set
        std::vector<uint64_t> cand;
        auto mem = current.members();
        for (uint64_t s : mem) {
            if (s <= prev_sum) continue;
            if (prev_sum + s > a.horizon()) break;
            cand.push_back(s);
            if (cand.size() >= opt.probe_budget) break;
        }
        if (cand.empty())
            for (uint64_t s : mem) {
                if (prev_sum + s > a.horizon()) break;
                cand.push_back(s);
                if (cand.size() >= opt.probe_budget) break;
            }

        std::vector<std::pair<uint64_t, uint64_t>> ranked;  // (count, s)
        for (uint64_t s : cand) {
            if (++nodes > opt.node_budget) throw budget_error("ip search budget exhausted");
            if (remaining == 1) {
                ranked.push_back({1, s});  // no further intersection needed
                continue;
            }
            if (s >= current.horizon()) continue;
            IntegerSet next = shift_intersect(current, s);
            uint64_t c = next.count();
            if (c > 0) ranked.push_back({c, s});
        }
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& l, const auto& r) { return l.first > r.first; });
        for (auto [cnt, s] : ranked) {
            gens.push_back(s);
            if (remaining == 1) return true;
            IntegerSet next = shift_intersect(current, s);
            if (dfs(next, remaining - 1)) return true;
            gens.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<PatternWitness> ip_prefix(const IntegerSet& a, unsigned m, const IpOptions& opt) {
    if (m == 0) throw precondition_error("need at least one generator");
    if (m > 20) throw budget_error("2^m - 1 sums out of range for m > 20");
    IpSearch search{a, opt};
    if (!search.dfs(a, m)) return std::nullopt;
    PatternWitness w{PatternKind::ip_prefix, search.gens, {}};
    if (!witness_holds(w, a)) throw error("ip generator validation failed");
    return w;
}

std::optional<PatternWitness> recurrence_witness(const IntegerSet& s, const IntegerSet& e) {
    for (uint64_t cand : s.members()) {
        if (cand >= e.horizon()) break;
        // first n with n in E and n + cand in E
        const BitVec& bits = e.bits();
        uint64_t limit = e.horizon() - cand;
        for (uint64_t start = 0; start < limit; start += 64) {
            uint64_t w1 = bits.window(int64_t(start));
            if (!w1) continue;
            uint64_t w2 = bits.window(int64_t(start + cand));
            uint64_t both = w1 & w2;
            if (start + 64 > limit) {
                uint64_t keep = limit - start;
                both &= keep >= 64 ? ~uint64_t(0) : ((uint64_t(1) << keep) - 1);
            }
            if (both) {
                uint64_t n = start + uint64_t(std::countr_zero(both)) + 1;
                return PatternWitness{PatternKind::recurrence, {cand}, {n}};
            }
        }
    }
    return std::nullopt;
}

std::optional<PatternWitness> additive_poly_witness(const IntegerSet& a,
                                                    const std::vector<IntPolynomial>& polys,
                                                    uint64_t z_max, bool require_z_in_set) {
    if (polys.empty()) throw precondition_error("need at least one polynomial");
    for (const auto& p : polys)
        if (p.leading() <= 0) throw precondition_error("leading coefficients must be positive");
    for (const auto& p : polys)
        if (p.eval(z_max) > __int128(a.horizon()))
            throw horizon_error("polynomial value at z_max exceeds horizon");

    auto mem = a.members();
    for (uint64_t z = 1; z <= z_max; ++z) {
        if (require_z_in_set && !a.contains(z)) continue;
        __int128 pmin = polys[0].eval(z);
        std::vector<__int128> vals(polys.size());
        for (size_t i = 0; i < polys.size(); ++i) {
            vals[i] = polys[i].eval(z);
            pmin = std::min(pmin, vals[i]);
        }
        if (pmin < 2) continue;  // need x >= 1 and y >= 1
        for (uint64_t x : mem) {
            if (__int128(x) >= pmin) break;
            bool ok = true;
            for (size_t i = 0; i < polys.size() && ok; ++i) {
                __int128 y = vals[i] - x;
                if (y < 1 || y > __int128(a.horizon()) || !a.contains(uint64_t(y))) ok = false;
            }
            if (ok) {
                PatternWitness w{PatternKind::poly_system, {x}, {}};
                for (size_t i = 0; i < polys.size(); ++i)
                    w.elements.push_back(uint64_t(vals[i] - x));
                w.elements.push_back(z);
                return w;
            }
        }
    }
    return std::nullopt;
}

bool essentially_distinct(const std::vector<IntPolynomial>& polys) {
    if (polys.size() < 2) throw precondition_error("need at least two polynomials");
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = i + 1; j < polys.size(); ++j)
            if ((polys[i] - polys[j]).degree() < 1) return false;
    return true;
}

}  // namespace wm
