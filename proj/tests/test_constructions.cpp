#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracle_chain.hpp"
#include "wm/chain_family.hpp"
#include "wm/correlation.hpp"
#include "wm/errors.hpp"
#include "wm/generators.hpp"
#include "wm/interval_removal.hpp"
#include "wm/liouville.hpp"
#include "wm/ll_property.hpp"

using namespace wm;
using wm_test::IterativeOracle;

namespace {

uint64_t count_solutions(const IntegerSet& a, const EquationABC& eq, uint64_t n) {
    // all (x, y) in A^2 with a x = b y + c, scanned over y
    uint64_t bad = 0;
    for (uint64_t y = 1; y <= n; ++y) {
        if (!a.contains(y)) continue;
        __int128 t = __int128(eq.b) * y + eq.c;
        if (t < 1 || t % eq.a) continue;
        uint64_t x = uint64_t(t / eq.a);
        if (x <= n && a.contains(x)) ++bad;
    }
    return bad;
}

}  // namespace

TEST_CASE("equation normalization") {
    EquationABC eq = EquationABC::make(4, 6, 2);
    CHECK(eq.a == 2);
    CHECK(eq.b == 3);
    CHECK(eq.c == 1);
    CHECK_FALSE(eq.vacuous);

    EquationABC vac = EquationABC::make(4, 6, 3);  // gcd 2 does not divide 3
    CHECK(vac.vacuous);

    CHECK(EquationABC::make(2, 2, 0).degenerate());
}

TEST_CASE("shift residue ladder for 2x = 3y + 1") {
    ChainContext ctx(EquationABC::make(2, 3, 1));
    auto l = ctx.shift_residues(2);
    CHECK(l == std::vector<uint64_t>{2, 8, 26});
}

TEST_CASE("shift residue ladder for x = 2y") {
    ChainContext ctx(EquationABC::make(1, 2, 0));
    auto l = ctx.shift_residues(5);
    CHECK(l == std::vector<uint64_t>{0, 0, 0, 0, 0, 0});
}

TEST_CASE("residue towers nest") {
    for (auto [a, b, c] : std::vector<std::tuple<uint64_t, uint64_t, long long>>{
             {2, 3, 1}, {1, 2, 0}, {3, 5, 2}, {5, 2, -3}, {4, 7, 9}}) {
        ChainContext ctx(EquationABC::make(a, b, c));
        auto l = ctx.shift_residues(5);
        // n in H_{i+1} implies n in H_i, probed across a sample of members
        for (uint64_t t = 0; t < 1000; ++t) {
            uint64_t mod2 = 1;
            for (int j = 0; j < 3; ++j) mod2 *= b;  // b^3: members of H_3
            uint64_t n = l[2] + t * mod2;
            if (n == 0) continue;
            CHECK(n % b == l[0]);
            CHECK(n % (b * b) == l[1]);
        }
    }
}

TEST_CASE("chain of 8 under 2x = 3y + 1") {
    ChainRecord rec = chain(8, EquationABC::make(2, 3, 1));
    CHECK(rec.chain == std::vector<uint64_t>{8, 5, 3});
    CHECK(rec.level == 2);
    CHECK(rec.ancestor == 3);
    CHECK(rec.parity == +1);
    // consecutive elements satisfy the equation exactly
    CHECK(2 * 8 == 3 * 5 + 1);
    CHECK(2 * 5 == 3 * 3 + 1);
}

TEST_CASE("level-0 chains stop immediately") {
    ChainContext ctx(EquationABC::make(2, 3, 1));
    for (uint64_t n = 1; n <= 100; ++n) {
        if (ctx.level(n) != 0) continue;
        ChainRecord rec = chain(n, ctx);
        CHECK(rec.chain == std::vector<uint64_t>{n});
        CHECK(rec.ancestor == n);
    }
}

TEST_CASE("chain algebra exhaustive to 1e5") {
    ChainContext ctx(EquationABC::make(2, 3, 1));
    for (uint64_t n = 1; n <= 100000; ++n) {
        ChainRecord rec = chain(n, ctx);
        for (size_t t = 0; t + 1 < rec.chain.size(); ++t) {
            REQUIRE(__int128(2) * rec.chain[t] == __int128(3) * rec.chain[t + 1] + 1);
            REQUIRE(ctx.level(rec.chain[t]) == ctx.level(rec.chain[t + 1]) + 1);
        }
    }
}

TEST_CASE("fixed point detection") {
    // 3x = 2y + 1 fixes n = 1
    ChainContext ctx(EquationABC::make(3, 2, 1));
    CHECK(ctx.fixpoint() == 1);
    CHECK(chain(1, ctx).transfinite);
    CHECK_FALSE(chain(5, ctx).transfinite);

    ChainContext no_fix(EquationABC::make(2, 3, 1));
    CHECK_FALSE(no_fix.fixpoint().has_value());
}

TEST_CASE("parity formula equals the iterative definition") {
    std::vector<EquationABC> eqs = {EquationABC::make(2, 3, 1), EquationABC::make(1, 2, 0),
                                    EquationABC::make(3, 5, 2), EquationABC::make(5, 3, -2),
                                    EquationABC::make(3, 2, 1)};
    for (const auto& eq : eqs) {
        for (uint64_t seed = 0; seed < 5; ++seed) {
            IntegerSet s = random_normal(10000, Seed{seed, 31});
            ChainSetResult built = build_chain_set(s, eq);
            IterativeOracle oracle(s, eq);
            for (uint64_t n = 1; n <= 10000; ++n)
                REQUIRE(built.set.contains(n) == oracle.member(n));
        }
    }
}

TEST_CASE("chain set kills its equation") {
    for (auto [a, b, c] : std::vector<std::tuple<uint64_t, uint64_t, long long>>{
             {2, 3, 1}, {1, 2, 0}, {3, 5, 2}}) {
        EquationABC eq = EquationABC::make(a, b, c);
        IntegerSet s = random_normal(100000, Seed{17, 5});
        ChainSetResult r = build_chain_set(s, eq);
        CHECK(count_solutions(r.set, eq, 100000) == 0);
    }
}

TEST_CASE("chain set with b = 1 kills the equation too") {
    EquationABC eq = EquationABC::make(3, 1, 2);  // 3x = y + 2
    IntegerSet s = random_normal(30000, Seed{23, 2});
    ChainSetResult r = build_chain_set(s, eq);
    CHECK(count_solutions(r.set, eq, 30000) == 0);
}

TEST_CASE("chain set on the empty base set") {
    EquationABC eq = EquationABC::make(2, 3, 1);
    IntegerSet empty(2000);
    ChainSetResult r = build_chain_set(empty, eq);
    // membership is still well-defined: exactly the even-length chains
    ChainContext ctx(eq);
    for (uint64_t n = 1; n <= 2000; ++n)
        CHECK(r.set.contains(n) == (chain(n, ctx).chain.size() % 2 == 0));
}

TEST_CASE("vacuous equations pass the set through") {
    EquationABC vac = EquationABC::make(4, 6, 3);
    IntegerSet s = random_normal(500, Seed{9, 9});
    ChainSetResult r = build_chain_set(s, vac);
    CHECK(r.vacuously_unsolvable);
    CHECK(r.set == s);
}

TEST_CASE("chain set stays normal-looking on a coin-flip base") {
    IntegerSet s = random_normal(1000000, Seed{77, 0});
    ChainSetResult r = build_chain_set(s, EquationABC::make(2, 3, 1));
    NormalityOptions opt;
    opt.max_order = 3;
    opt.max_shift = 8;
    opt.n = 1000000 - 8;
    CHECK(normality_test(r.set, opt).pass);
}

// ---- modified Liouville ---------------------------------------------------

TEST_CASE("multiplicative signs for an explicit Q") {
    auto r = mult_liouville(16, QSignAssignment::from_primes({2}));
    CHECK(r.values.sign(1) == +1);
    CHECK(r.values.sign(2) == -1);
    CHECK(r.values.sign(4) == +1);
    CHECK(r.values.sign(6) == -1);
    CHECK(r.values.sign(12) == +1);
    CHECK(r.values.sign(3) == +1);
    CHECK(r.negatives.contains(2));
    CHECK_FALSE(r.negatives.contains(4));
}

TEST_CASE("complete multiplicativity, exhaustive") {
    auto r = mult_liouville(100000, QSignAssignment::from_seed(Seed{5, 1}));
    for (uint64_t m = 2; m * m <= 100000; ++m)
        for (uint64_t n = m; m * n <= 100000; ++n)
            REQUIRE(r.values.sign(m) * r.values.sign(n) == r.values.sign(m * n));
}

TEST_CASE("negative set blocks x*y = z") {
    auto r = mult_liouville(100000, QSignAssignment::from_seed(Seed{11, 3}));
    const IntegerSet& a = r.negatives;
    for (uint64_t x = 2; x * x <= 100000; ++x) {
        if (!a.contains(x)) continue;
        for (uint64_t y = x; x * y <= 100000; ++y)
            if (a.contains(y)) REQUIRE_FALSE(a.contains(x * y));
    }
}

TEST_CASE("classical Liouville signs are deterministic") {
    auto r1 = mult_liouville(1000, QSignAssignment::all_primes());
    auto r2 = mult_liouville(1000, QSignAssignment::all_primes());
    for (uint64_t n = 1; n <= 1000; ++n) REQUIRE(r1.values.sign(n) == r2.values.sign(n));
    // spot values of the classical function
    CHECK(r1.values.sign(2) == -1);
    CHECK(r1.values.sign(4) == +1);
    CHECK(r1.values.sign(8) == -1);
    CHECK(r1.values.sign(12) == -1);  // 2^2 * 3
}

TEST_CASE("explicit Q rejects composites") {
    CHECK_THROWS_AS(mult_liouville(100, QSignAssignment::from_primes({6})), precondition_error);
}

TEST_CASE("second moment at N = 1 is exactly 1") {
    auto rep = second_moment_mc({}, 1, 4, Seed{3, 0});
    CHECK(rep.mean_square == 1);
    for (const Rat& t : rep.per_trial) CHECK(t == 1);
}

TEST_CASE("second moment is deterministic per seed") {
    std::vector<uint64_t> shifts = {1};
    auto r1 = second_moment_mc(shifts, 2000, 10, Seed{8, 8});
    auto r2 = second_moment_mc(shifts, 2000, 10, Seed{8, 8});
    CHECK(r1.mean_square == r2.mean_square);
    CHECK(r1.per_trial == r2.per_trial);
}

TEST_CASE("second moment trend decreases") {
    auto r3 = second_moment_mc({}, 1000, 60, Seed{1, 0});
    auto r4 = second_moment_mc({}, 10000, 60, Seed{1, 0});
    auto r5 = second_moment_mc({}, 100000, 60, Seed{1, 0});
    CHECK(r4.mean_square < r3.mean_square + make_rat(1, 100));
    CHECK(r5.mean_square < r4.mean_square + make_rat(1, 1000));
}

// ---- interval removal ------------------------------------------------------

TEST_CASE("polynomial interval removal example") {
    IntegerSet a(100);
    for (uint64_t n = 1; n <= 100; ++n) a.insert(n);
    IntPolynomial p1({0, 1});     // n
    IntPolynomial p2({0, 0, 0, 1});  // n^3
    IntegerSet out = remove_poly_intervals(a, p1, p2);
    std::vector<uint64_t> removed;
    for (uint64_t n = 1; n <= 100; ++n)
        if (!out.contains(n)) removed.push_back(n);
    // [0,1] u [6,8] u [24,27] u [60,64], clipped to >= 1
    CHECK(removed == std::vector<uint64_t>{1, 6, 7, 8, 24, 25, 26, 27, 60, 61, 62, 63, 64});
}

TEST_CASE("degree gap enforced") {
    IntegerSet a(10);
    CHECK_THROWS_AS(remove_poly_intervals(a, IntPolynomial({0, 1}), IntPolynomial({0, 0, 1})),
                    precondition_error);
}

TEST_CASE("removal preserves density at scale") {
    IntegerSet a = random_normal(1000000, Seed{4, 4});
    Rat before = density(a);
    IntegerSet out = remove_poly_intervals(a, IntPolynomial({0, 1}), IntPolynomial({0, 0, 0, 1}));
    Rat after = density(out);
    CHECK(before - after >= 0);
    CHECK(before - after <= make_rat(1, 100));
}

// ---- (l, L) windows --------------------------------------------------------

TEST_CASE("window property on canonical sequences") {
    IntegerSet empty(100);
    CHECK(ll_window(empty, 3) == 3);

    IntegerSet full(100);
    for (uint64_t n = 1; n <= 100; ++n) full.insert(n);
    CHECK_FALSE(ll_window(full, 1).has_value());

    IntegerSet ev = periodic_set(100, 2, {0});
    CHECK(ll_window(ev, 1) == 2);
}

TEST_CASE("window answer is minimal and correct") {
    IntegerSet a = random_normal(4000, Seed{21, 4}, make_rat(2, 3));
    uint64_t l = 2;
    auto res = ll_window(a, l);
    auto window_ok = [&](uint64_t len) {
        for (uint64_t k = 1; k + len - 1 <= a.horizon(); ++k) {
            uint64_t run = 0;
            bool found = false;
            for (uint64_t p = k; p < k + len; ++p) {
                run = a.contains(p) ? 0 : run + 1;
                if (run >= l) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };
    if (res) {
        CHECK(window_ok(*res));
        CHECK_FALSE(window_ok(*res - 1));
    } else {
        CHECK_FALSE(window_ok(a.horizon() / 2));
    }
}
