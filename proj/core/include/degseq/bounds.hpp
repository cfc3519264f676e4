#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "degseq/erdos_gallai.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class Predicate {
    ZzGeneral,
    ZzSimplified,
    ZzCorollary,
    ImprovedFloor,
    Bhjw,
};

std::string_view predicate_name(Predicate p);

// Outcome of one sufficiency predicate. lhs/rhs are the cross-multiplied
// integer comparison actually performed; the predicate holds iff the sum is
// even and lhs >= rhs. min_n is the least length at which the inequality
// would hold for the same d1, dn (or a, b).
struct BoundVerdict {
    Predicate predicate;
    bool applicable = false;  // even sum
    bool holds = false;       // applicable && lhs >= rhs
    u128 lhs = 0;
    u128 rhs = 0;
    u128 min_n = 0;
    std::optional<int> epsilon_prime;     // Bhjw only: 0 if d1+dn odd, else 1
    std::optional<std::uint64_t> a, b;    // ZzGeneral only: the parameters used

    friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

// holds iff sum even and 4*b*n >= (1+a+b)^2. Requires a >= d1, 1 <= b <= dn.
BoundVerdict zz_general(const DegreeSequence& seq, std::uint64_t a, std::uint64_t b);

// zz_general at a = d1, b = dn: holds iff sum even and 4*dn*n >= (1+d1+dn)^2.
BoundVerdict zz_simplified(const DegreeSequence& seq);

// holds iff sum even and 4n >= d1^2 + 4*d1 + 4.
BoundVerdict zz_corollary(const DegreeSequence& seq);

// holds iff sum even and n >= floor(d1^2/4) + d1.
BoundVerdict improved_bound(const DegreeSequence& seq);

// holds iff sum even and 4*dn*n >= (1+d1+dn)^2 - eps', eps' = 0 when d1+dn
// is odd and 1 otherwise.
BoundVerdict bhjw_bound(const DegreeSequence& seq);

struct BoundsSummary {
    std::vector<BoundVerdict> verdicts;  // fixed order: general, simplified,
                                         // corollary, improved, bhjw
    EgReport eg;
};

BoundsSummary bounds_summary(const DegreeSequence& seq);

// Minimal qualifying lengths at d1 = 2x+1, dn = 1:
// (x^2+3x+3, x^2+3x+2, x^2+3x+1) for the simplified, bhjw and improved
// predicates respectively. Cross-checked against min_n in tests.
struct RemarkThresholds {
    u128 t_simplified;
    u128 t_bhjw;
    u128 t_improved;

    friend bool operator==(const RemarkThresholds&, const RemarkThresholds&) = default;
};

RemarkThresholds remark_thresholds(std::uint64_t x);

// Pure inequality probes, independent of any concrete sequence. For
// ZzGeneral, d1/dn play the role of a/b.
bool bound_inequality_holds(Predicate p, std::uint64_t d1, std::uint64_t dn, u128 n);
u128 min_required_n(Predicate p, std::uint64_t d1, std::uint64_t dn);

}  // namespace degseq
