#pragma once

#include <optional>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

// Both sides of one Erdos-Gallai inequality:
//   lhs = d_1 + ... + d_k,   rhs = k(k-1) + sum_{i>k} min(k, d_i).
struct EgTerms {
    std::uint64_t k = 0;
    u128 lhs = 0;
    u128 rhs = 0;

    bool violated() const { return lhs > rhs; }

    friend bool operator==(const EgTerms&, const EgTerms&) = default;
};

struct EgReport {
    bool parity_even = false;
    std::optional<EgTerms> first_violation;  // least violating k
    bool graphic = false;                    // parity_even && no violation

    friend bool operator==(const EgReport&, const EgReport&) = default;
};

enum class EgEngine {
    Rle,    // run-boundary / Durfee-index scan on the run-length encoding
    Naive,  // per-index scan over every k in 1..n
};

// Exact graphicality test. The inequality scan runs regardless of parity,
// so first_violation may be populated even for odd-sum input.
EgReport erdos_gallai_check(const DegreeSequence& seq, EgEngine engine = EgEngine::Rle);

// Terms of the single inequality at index k (1 <= k <= n).
EgTerms eg_terms_at(const DegreeSequence& seq, std::uint64_t k);

// Every violated index in ascending order (diagnostic mode).
std::vector<EgTerms> eg_all_violations(const DegreeSequence& seq);

// Largest k with d_k >= k. The least violating index never exceeds it,
// which is why the run-length engine only scans up to here.
std::uint64_t durfee_index(const DegreeSequence& seq);

}  // namespace degseq
