#include "degseq/extremal.hpp"

#include <stdexcept>

#include "degseq/bounds.hpp"
#include "degseq/erdos_gallai.hpp"

namespace degseq {

FamilyParams family_params(std::uint64_t d) {
    if (d < 2) throw BadParameters("family parameter requires d >= 2");
    return FamilyParams{d, d / 2};
}

namespace {

// Builds (head^{head_count}, 1^{ones}) with the 1-run omitted when empty.
DegreeSequence head_plus_ones(std::uint64_t head, std::uint64_t head_count,
                              std::uint64_t ones) {
    std::vector<Run> runs;
    if (head == 1) {
        runs.push_back({1, head_count + ones});
    } else {
        runs.push_back({head, head_count});
        if (ones > 0) runs.push_back({1, ones});
    }
    return DegreeSequence::from_runs(std::move(runs));
}

}  // namespace

DegreeSequence witness_nongraphic(std::uint64_t d) {
    const auto [dd, x] = family_params(d);
    if (x > 3'000'000'000ULL)
        throw BadParameters("witness length would exceed 2^63-1");
    const std::uint64_t ones = d % 2 == 0 ? x * x + x - 2 : x * x + 2 * x - 1;
    DegreeSequence seq = head_plus_ones(d, x + 1, ones);

    // The constructor doubles as a regression check of the EG engine.
    const u128 want_n = u128(d) * d / 4 + d - 1;
    if (u128(seq.n()) != want_n)
        throw std::logic_error("witness length mismatch at d=" + std::to_string(d));
    if (seq.sum() % 2 != 0)
        throw std::logic_error("witness sum odd at d=" + std::to_string(d));
    if (erdos_gallai_check(seq).graphic)
        throw std::logic_error("witness unexpectedly graphic at d=" + std::to_string(d));
    return seq;
}

DegreeSequence gap_example(std::uint64_t x) {
    if (x < 1) throw BadParameters("gap example requires x >= 1");
    if (x > 3'000'000'000ULL)
        throw BadParameters("gap example length would exceed 2^63-1");
    const std::uint64_t d = 2 * x;
    DegreeSequence seq = x % 2 == 1 ? head_plus_ones(d, 1, x * x + 2 * x - 1)
                                    : head_plus_ones(d, 2, x * x + 2 * x - 2);

    if (u128(seq.n()) != u128(x) * x + 2 * x)
        throw std::logic_error("gap example length mismatch at x=" + std::to_string(x));
    if (seq.sum() % 2 != 0)
        throw std::logic_error("gap example sum odd at x=" + std::to_string(x));
    if (!improved_bound(seq).holds)
        throw std::logic_error("gap example misses the floor bound at x=" +
                               std::to_string(x));
    if (zz_corollary(seq).holds)
        throw std::logic_error("gap example satisfies the corollary at x=" +
                               std::to_string(x));
    if (!erdos_gallai_check(seq).graphic)
        throw std::logic_error("gap example not graphic at x=" + std::to_string(x));
    return seq;
}

DegreeSequence proof_extremal_form(std::uint64_t d1, std::uint64_t n, std::uint64_t k) {
    if (d1 < 1) throw BadParameters("d1 must be positive");
    if (k < 1 || k > n)
        throw IndexOutOfRange("k = " + std::to_string(k) + " outside 1.." +
                              std::to_string(n));
    return head_plus_ones(d1, k, n - k);
}

}  // namespace degseq
