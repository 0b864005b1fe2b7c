#include "wm/chain_family.hpp"

#include <numeric>

#include "wm/errors.hpp"

namespace wm {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr uint64_t kModCap = uint64_t(1) << 62;

uint64_t mod_inverse(uint64_t a, uint64_t m) {
    // extended gcd; gcd(a, m) must be 1
    long long old_r = (long long)(a % m), r = (long long)m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    long long inv = old_s % (long long)m;
    if (inv < 0) inv += (long long)m;
    return uint64_t(inv);
}

uint64_t mod_pos(i128 v, uint64_t m) {
    i128 r = v % i128(m);
    if (r < 0) r += m;
    return uint64_t(r);
}

}  // namespace

EquationABC EquationABC::make(uint64_t a, uint64_t b, long long c) {
    if (a == 0 || b == 0) throw precondition_error("a and b must be positive");
    uint64_t g = std::gcd(a, b);
    EquationABC eq;
    if (c % (long long)g != 0) {
        eq.a = a;
        eq.b = b;
        eq.c = c;
        eq.vacuous = true;
        return eq;
    }
    eq.a = a / g;
    eq.b = b / g;
    eq.c = c / (long long)g;
    eq.vacuous = false;
    return eq;
}

ChainContext::ChainContext(const EquationABC& eq) : eq_(eq) {
    if (eq.vacuous) throw precondition_error("vacuous equation has no residue towers");
    if (eq.degenerate()) throw precondition_error("a = b is outside the chain construction");
    if (eq.b == 1)
        throw precondition_error(
            "b = 1 towers are trivial; swap the equation orientation (see build_chain_set)");
    // fixed point of n -> (a*n - c)/b: the solution of (a - b) * n = c
    long long diff = (long long)eq_.a - (long long)eq_.b;
    if (eq_.c % diff == 0) {
        long long fp = eq_.c / diff;
        if (fp >= 1) fixpoint_ = uint64_t(fp);
    }
    // l_0 = a^{-1} c (mod b)
    uint64_t b0 = eq_.b;
    uint64_t inv = mod_inverse(eq_.a % b0, b0);
    residue_.push_back(mod_pos(i128(inv) * mod_pos(eq_.c, b0), b0));
    modulus_.push_back(b0);
    // The full ladder up to the 2^62 cap is at most ~62 entries; building it
    // here keeps every later query read-only and freely parallel.
    extend_to(kModCap);
}

void ChainContext::extend_to(uint64_t need_mod) {
    while (modulus_.back() < need_mod && modulus_.back() <= kModCap / eq_.b) {
        uint64_t m = modulus_.back() * eq_.b;  // b^{i+2}
        uint64_t inv = mod_inverse(eq_.a % m, m);
        // l_i = a^{-1} (b l_{i-1} + c) mod b^{i+1}
        uint64_t rhs = mod_pos(i128(eq_.b) * residue_.back() + eq_.c, m);
        residue_.push_back(mod_pos(i128(inv) * rhs, m));
        modulus_.push_back(m);
    }
}

std::vector<uint64_t> ChainContext::shift_residues(unsigned i_max) const {
    if (residue_.size() < i_max + 1) throw budget_error("residue modulus exceeds 2^62");
    return std::vector<uint64_t>(residue_.begin(), residue_.begin() + i_max + 1);
}

unsigned ChainContext::level(uint64_t n) const {
    unsigned lvl = 0;
    while (lvl < residue_.size() && n % modulus_[lvl] == residue_[lvl]) ++lvl;
    return lvl;
}

std::optional<uint64_t> ChainContext::parent(uint64_t n) const {
    i128 t = i128(eq_.a) * n - eq_.c;
    if (t <= 0) return std::nullopt;
    if (t % eq_.b != 0) return std::nullopt;
    u128 y = u128(t / eq_.b);
    if (y > u128(~uint64_t(0))) return std::nullopt;
    return uint64_t(y);
}

ChainRecord chain(uint64_t n, const ChainContext& ctx) {
    if (n == 0) throw precondition_error("n must be positive");
    ChainRecord rec;
    rec.n = n;
    if (ctx.fixpoint() && n == *ctx.fixpoint()) {
        rec.chain = {n};
        rec.ancestor = n;
        rec.parity = +1;
        rec.transfinite = true;
        return rec;
    }
    rec.level = ctx.level(n);
    uint64_t cur = n;
    unsigned lvl = rec.level;
    for (;;) {
        rec.chain.push_back(cur);
        if (lvl == 0) break;
        auto y = ctx.parent(cur);
        if (!y) break;  // no positive-integer parent: the chain stops here
        cur = *y;
        --lvl;  // parent of an exact-level-i element sits at exact level i-1
    }
    rec.ancestor = rec.chain.back();
    rec.parity = (rec.chain.size() % 2 == 1) ? +1 : -1;
    return rec;
}

ChainRecord chain(uint64_t n, const EquationABC& eq) {
    ChainContext ctx(eq);
    return chain(n, ctx);
}

ChainSetResult build_chain_set(const IntegerSet& s, const EquationABC& eq) {
    if (eq.vacuous) return ChainSetResult{s, true};
    if (eq.degenerate())
        throw precondition_error("a = b equations are not handled by the chain construction");
    // b = 1: a*x = y + c has the same solution pairs as y' = a*x' - c with
    // roles swapped, and the swapped orientation has a proper residue tower.
    EquationABC oriented = eq;
    if (eq.b == 1) {
        oriented.a = 1;
        oriented.b = eq.a;
        oriented.c = -eq.c;
    }
    ChainContext ctx(oriented);
    IntegerSet out(s.horizon());
    for (uint64_t n = 1; n <= s.horizon(); ++n) {
        if (ctx.fixpoint() && n == *ctx.fixpoint()) continue;  // level-infinity element
        ChainRecord rec = chain(n, ctx);
        bool anc_in_s = s.contains(rec.ancestor);
        bool member = (rec.parity == +1) ? anc_in_s : !anc_in_s;
        if (member) out.insert(n);
    }
    return ChainSetResult{out, false};
}

}  // namespace wm
