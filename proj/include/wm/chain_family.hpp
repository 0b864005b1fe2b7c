#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wm/integer_set.hpp"

namespace wm {

// The equation a*x = b*y + c, normalized so that gcd(a, b) = 1.  When the
// original gcd does not divide c the equation has no integer solutions at
// all and `vacuous` is set; the chain construction then has nothing to do.
struct EquationABC {
    uint64_t a = 1;
    uint64_t b = 1;
    long long c = 0;
    bool vacuous = false;

    bool degenerate() const { return a == b; }  // x - y = c/... cases, out of scope here

    static EquationABC make(uint64_t a, uint64_t b, long long c);
};

// Residue ladder behind the chain construction.  Solutions x of
// a*x = b*y + c force x ≡ l_0 (mod b); if additionally y ≡ l_{i-1}
// (mod b^i) then x ≡ l_i (mod b^{i+1}).  H_i = {x : x ≡ l_{i-1} mod b^i}
// are nested, B_i = H_i \ H_{i+1}, and level(n) = the i with n in B_i.
//
// The single possible element of the intersection of every H_i is the fixed
// point of n -> (a*n - c)/b, i.e. n = c/(a-b) when that is a positive
// integer; it gets level "infinity" and is excluded from the output set.
class ChainContext {
  public:
    explicit ChainContext(const EquationABC& eq);

    const EquationABC& eq() const { return eq_; }

    // l_0 .. l_{i_max}; l_i lives modulo b^{i+1}
    std::vector<uint64_t> shift_residues(unsigned i_max) const;

    // max j with n ≡ l_{j-1} (mod b^j); 0 when none
    unsigned level(uint64_t n) const;

    std::optional<uint64_t> fixpoint() const { return fixpoint_; }

    // parent y = (a*n - c)/b when it is a positive integer, else nullopt
    std::optional<uint64_t> parent(uint64_t n) const;

  private:
    void extend_to(uint64_t need_mod);

    EquationABC eq_;
    std::optional<uint64_t> fixpoint_;
    std::vector<uint64_t> residue_;  // residue_[i] = l_i
    std::vector<uint64_t> modulus_;  // modulus_[i] = b^{i+1}
};

struct ChainRecord {
    uint64_t n = 0;
    std::vector<uint64_t> chain;  // n = n_0, n_1, ..., ancestor
    unsigned level = 0;           // n in B_level
    uint64_t ancestor = 0;
    int parity = +1;  // (-1)^(chain length - 1)
    bool transfinite = false;  // n is the fixed point; level is infinite
};

ChainRecord chain(uint64_t n, const ChainContext& ctx);
ChainRecord chain(uint64_t n, const EquationABC& eq);

// The chain-parity set built from S: n is a member iff the chain of n has
// odd length and its ancestor is in S, or even length and the ancestor is
// not in S.  By construction a*x = b*y + c has no solution with both x and
// y in the output.  Ancestors above S's horizon count as non-members.
struct ChainSetResult {
    IntegerSet set;
    bool vacuously_unsolvable = false;  // equation had no integer solutions at all
};

ChainSetResult build_chain_set(const IntegerSet& s, const EquationABC& eq);

}  // namespace wm
