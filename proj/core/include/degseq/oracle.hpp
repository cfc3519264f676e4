#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

struct Finding {
    std::string sequence;  // canonical text
    std::string check;     // which property failed
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

// Exhaustive desk-scale verification results. All three lists are empty on
// a correct build.
struct ViolationReport {
    std::uint64_t sequences_checked = 0;
    std::uint64_t graphic_count = 0;
    std::uint64_t realizations_checked = 0;
    std::vector<Finding> violations;          // predicate soundness, flatten
                                              // preservation, realization sanity
    std::vector<Finding> eg_hh_mismatches;
    std::vector<Finding> rle_naive_mismatches;

    bool clean() const {
        return violations.empty() && eg_hh_mismatches.empty() &&
               rle_naive_mismatches.empty();
    }

    friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

// Checks every decreasing sequence with 1 <= n <= nmax and entries <= dmax:
// predicate soundness against the exact EG verdict, EG vs Havel-Hakimi
// agreement, RLE vs naive EG agreement, flatten violation preservation, and
// realization validity. Deterministic for any jobs >= 1.
ViolationReport cross_check(std::uint64_t nmax, std::uint64_t dmax, unsigned jobs = 1);

struct SharpnessResult {
    std::uint64_t d1 = 0;
    std::uint64_t threshold = 0;  // floor(d1^2/4) + d1
    std::optional<DegreeSequence> witness_at_threshold_minus_1;
    std::vector<std::uint64_t> lengths_confirmed;  // all-graphic lengths
    std::vector<std::uint64_t> sequences_per_length;
    std::vector<Finding> counterexamples;  // expected empty
    bool confirmed = false;

    friend bool operator==(const SharpnessResult&, const SharpnessResult&) = default;
};

class Refused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kSharpnessGuardMaxD1 = 12;

// Confirms the floor threshold empirically for one d1: the witness at
// length threshold-1 is non-graphic, and every even-sum sequence with
// maximum exactly d1 and length in threshold..threshold+extra_lengths is
// graphic. Refuses d1 > 12 unless force is set. Deterministic for any
// jobs >= 1.
SharpnessResult sharpness_scan(std::uint64_t d1, std::uint64_t extra_lengths,
                               bool force = false, unsigned jobs = 1);

}  // namespace degseq
