#include "degseq/bounds.hpp"

#include <stdexcept>

namespace degseq {

std::string_view predicate_name(Predicate p) {
    switch (p) {
        case Predicate::ZzGeneral: return "zz_general";
        case Predicate::ZzSimplified: return "zz_simplified";
        case Predicate::ZzCorollary: return "zz_corollary";
        case Predicate::ImprovedFloor: return "improved_floor";
        case Predicate::Bhjw: return "bhjw";
    }
    return "unknown";
}

namespace {

int bhjw_epsilon(std::uint64_t d1, std::uint64_t dn) {
    return (d1 + dn) % 2 == 1 ? 0 : 1;
}

// Right side of the cross-multiplied comparison.
u128 bound_rhs(Predicate p, std::uint64_t d1, std::uint64_t dn) {
    const u128 s = u128(1) + d1 + dn;
    switch (p) {
        case Predicate::ZzGeneral:
        case Predicate::ZzSimplified:
            return s * s;
        case Predicate::ZzCorollary:
            return u128(d1) * d1 + u128(4) * d1 + 4;
        case Predicate::ImprovedFloor:
            return u128(d1) * d1 / 4 + d1;
        case Predicate::Bhjw:
            return s * s - bhjw_epsilon(d1, dn);
    }
    throw std::logic_error("unhandled predicate");
}

// Left side as a function of length.
u128 bound_lhs(Predicate p, std::uint64_t dn, u128 n) {
    switch (p) {
        case Predicate::ZzGeneral:
        case Predicate::ZzSimplified:
        case Predicate::Bhjw:
            return u128(4) * dn * n;
        case Predicate::ZzCorollary:
            return u128(4) * n;
        case Predicate::ImprovedFloor:
            return n;
    }
    throw std::logic_error("unhandled predicate");
}

u128 lhs_multiplier(Predicate p, std::uint64_t dn) {
    switch (p) {
        case Predicate::ZzGeneral:
        case Predicate::ZzSimplified:
        case Predicate::Bhjw:
            return u128(4) * dn;
        case Predicate::ZzCorollary:
            return 4;
        case Predicate::ImprovedFloor:
            return 1;
    }
    throw std::logic_error("unhandled predicate");
}

BoundVerdict make_verdict(Predicate p, const DegreeSequence& seq, std::uint64_t d1,
                          std::uint64_t dn) {
    BoundVerdict v;
    v.predicate = p;
    v.applicable = seq.sum() % 2 == 0;
    v.lhs = bound_lhs(p, dn, seq.n());
    v.rhs = bound_rhs(p, d1, dn);
    v.holds = v.applicable && v.lhs >= v.rhs;
    v.min_n = min_required_n(p, d1, dn);
    if (p == Predicate::Bhjw) v.epsilon_prime = bhjw_epsilon(d1, dn);
    return v;
}

}  // namespace

bool bound_inequality_holds(Predicate p, std::uint64_t d1, std::uint64_t dn, u128 n) {
    return bound_lhs(p, dn, n) >= bound_rhs(p, d1, dn);
}

u128 min_required_n(Predicate p, std::uint64_t d1, std::uint64_t dn) {
    const u128 m = ceil_div(bound_rhs(p, d1, dn), lhs_multiplier(p, dn));
    // Self-check the ceiling arithmetic against the raw inequality.
    if (!bound_inequality_holds(p, d1, dn, m) ||
        (m > 0 && bound_inequality_holds(p, d1, dn, m - 1)))
        throw std::logic_error("min_n probe failed for " +
                               std::string(predicate_name(p)));
    return m;
}

BoundVerdict zz_general(const DegreeSequence& seq, std::uint64_t a, std::uint64_t b) {
    if (a > kMaxEntryValue)
        throw BadParameters("a exceeds 2^63-1");
    if (a < seq.d1())
        throw BadParameters("a must be at least d1");
    if (b < 1 || b > seq.dn())
        throw BadParameters("b must satisfy 1 <= b <= dn");
    BoundVerdict v = make_verdict(Predicate::ZzGeneral, seq, a, b);
    v.a = a;
    v.b = b;
    return v;
}

BoundVerdict zz_simplified(const DegreeSequence& seq) {
    return make_verdict(Predicate::ZzSimplified, seq, seq.d1(), seq.dn());
}

BoundVerdict zz_corollary(const DegreeSequence& seq) {
    return make_verdict(Predicate::ZzCorollary, seq, seq.d1(), seq.dn());
}

BoundVerdict improved_bound(const DegreeSequence& seq) {
    return make_verdict(Predicate::ImprovedFloor, seq, seq.d1(), seq.dn());
}

BoundVerdict bhjw_bound(const DegreeSequence& seq) {
    return make_verdict(Predicate::Bhjw, seq, seq.d1(), seq.dn());
}

BoundsSummary bounds_summary(const DegreeSequence& seq) {
    BoundsSummary s;
    s.verdicts.push_back(zz_general(seq, seq.d1(), seq.dn()));
    s.verdicts.push_back(zz_simplified(seq));
    s.verdicts.push_back(zz_corollary(seq));
    s.verdicts.push_back(improved_bound(seq));
    s.verdicts.push_back(bhjw_bound(seq));
    s.eg = erdos_gallai_check(seq);
    return s;
}

RemarkThresholds remark_thresholds(std::uint64_t x) {
    if (x < 1) throw BadParameters("x must be positive");
    if (x > (kMaxEntryValue - 1) / 2)
        throw BadParameters("x too large: d1 = 2x+1 would exceed 2^63-1");
    const u128 base = u128(x) * x + u128(3) * x;
    return RemarkThresholds{base + 3, base + 2, base + 1};
}

}  // namespace degseq
