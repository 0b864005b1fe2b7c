#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wm/integer_set.hpp"
#include "wm/poly.hpp"

namespace wm {

enum class PatternKind {
    schur,        // x + y = z
    mult_schur,   // x * y = z
    mult_square,  // x * y = z^2, x != y
    sum_square,   // x^2 + y^2 = r^2
    diff_square,  // u^2 - v^2 = r^2
    ap,           // arithmetic progression
    ip_prefix,    // generators with every finite sum in the set
    recurrence,   // s in S with E and E - s intersecting
    poly_system,  // x + y_i = p_i(z)
};

std::string kind_str(PatternKind k);

struct PatternWitness {
    PatternKind kind;
    std::vector<uint64_t> elements;
    std::vector<uint64_t> auxiliary;  // instantiated values: square root, AP difference, ...
};

// Re-checks the defining equation and all memberships from scratch.  The
// second set is only read for `recurrence` (E) and `polys` only for
// `poly_system`.
bool witness_holds(const PatternWitness& w, const IntegerSet& a,
                   const IntegerSet* second = nullptr,
                   const std::vector<IntPolynomial>* polys = nullptr);

// least-z witness of x + y = z, x <= y, all in A
std::optional<PatternWitness> find_schur(const IntegerSet& a);

// least-z witness of x * y = z, x <= y; x = 1 degenerates the equation to
// membership and is excluded unless allow_one is set
std::optional<PatternWitness> find_mult_schur(const IntegerSet& a, bool allow_one = false);

// witness of x * y = z^2 with x < y and x, y, z in A.  Every solution has
// the shape (m r^2, m s^2, m r s), so a scan over (s, r, m) is complete;
// for sparse sets a divisor walk per z in A is used instead.
std::optional<PatternWitness> find_mult_square(const IntegerSet& a);

// x^2 + y^2 = square / u^2 - v^2 = square; the fast path multiplies the
// known mutual triples (44,117,240) and (153,185,697) into the set before
// the general pair scan.
std::optional<PatternWitness> find_sum_square(const IntegerSet& a);
std::optional<PatternWitness> find_diff_square(const IntegerSet& a);

// lexicographically least (difference, start) k-term progression
std::optional<PatternWitness> find_ap(const IntegerSet& a, unsigned k);

struct IpOptions {
    unsigned probe_budget = 64;    // candidate generators examined per level
    uint64_t node_budget = 20000;  // total candidate expansions before giving up
};

// Greedy-with-backtracking generator search: at each level candidates are
// drawn from the current intersection set (preferring values above the sum
// of the chosen generators, so sums stay distinct) and ranked by how dense
// the next intersection set would be.  All 2^m - 1 sums are validated.
std::optional<PatternWitness> ip_prefix(const IntegerSet& a, unsigned m,
                                        const IpOptions& opt = {});

// least s in S with E and (E - s) intersecting; auxiliary carries one n
// with n and n + s in E
std::optional<PatternWitness> recurrence_witness(const IntegerSet& s, const IntegerSet& e);

// first witness of x + y_i = p_i(z) for all i, scanning z upward (members
// of A only when require_z_in_set) and x through A below min p_i(z)
std::optional<PatternWitness> additive_poly_witness(const IntegerSet& a,
                                                    const std::vector<IntPolynomial>& polys,
                                                    uint64_t z_max, bool require_z_in_set);

// pairwise differences all have degree >= 1
bool essentially_distinct(const std::vector<IntPolynomial>& polys);

}  // namespace wm
