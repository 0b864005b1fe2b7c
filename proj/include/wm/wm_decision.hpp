#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wm/integer_set.hpp"
#include "wm/ratlin.hpp"

namespace wm {

// Witness that B x = d is solvable inside every weakly-mixing set of
// positive density: two strictly positive integer kernel vectors x1, x2, an
// integer shift f with B f = d, and a partition of the coordinates into
// "generic" singletons E plus constant groups F_p such that
//   a) det[[x1_i, x2_i], [x1_j, x2_j]] != 0 for distinct i, j in E,
//   b) x1, x2 are constant on each group, and the group's constant pair is
//      non-proportional to (x1_j, x2_j) for every j outside the group,
//   c) f is constant (an integer) on each group,
//   d) every n*x1 + m*x2 + f solves the system.
// All conditions are machine-checkable; verify_certificate re-checks them
// from scratch.
struct SolvabilityCertificate {
    std::vector<Int> x1, x2, f;
    std::vector<size_t> e;                       // 0-based coordinates
    std::vector<std::vector<size_t>> groups;     // 0-based, each of size >= 2
    struct GroupConstants {
        Int c1, c2, f;
    };
    std::vector<GroupConstants> group_constants;
};

enum class NotSolvableReason {
    inconsistent_system,
    no_positive_direction,
    group_ratio_not_one,
    no_integer_shift,
    no_generic_pair,
};

std::string reason_str(NotSolvableReason r);

struct Verdict {
    bool solvable = false;
    std::optional<SolvabilityCertificate> certificate;
    std::optional<NotSolvableReason> reason;
};

// Decision procedure:
//   1. no rational solution -> inconsistent-system
//   2. kernel admits no strictly positive vector -> no-positive-direction
//   3. group coordinates whose pairwise kernel projection is a line
//   4. a group line with slope != 1 -> group-ratio-not-one
//   5. constrain the kernel to equal coordinates inside groups; repeat 2-4
//      until the grouping is stable
//   6. no integer shift constant on the groups -> no-integer-shift
//   7. pick x1 from the positive witness and x2 = (1+s) x1 + w for a kernel
//      direction w avoiding every required vanishing determinant
//   8. assemble and self-verify the certificate
Verdict decide_wm_solvable(const RatMatrix& b, const RatVector& d);

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> failures;
};

CertificateCheck verify_certificate(const RatMatrix& b, const RatVector& d,
                                    const SolvabilityCertificate& cert);

// Scan n <= n_max, m <= m_max for n*x1 + m*x2 + f landing inside A^k; the
// witness vector is returned alongside (n, m).
std::optional<std::tuple<uint64_t, uint64_t, std::vector<uint64_t>>> find_solution_in_set(
    const IntegerSet& a, const SolvabilityCertificate& cert, uint64_t n_max, uint64_t m_max);

}  // namespace wm
