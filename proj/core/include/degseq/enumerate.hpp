#pragma once

#include <cstdint>
#include <optional>

#include "degseq/sequence.hpp"

namespace degseq {

// Streams every decreasing sequence of length n with entries in 1..dmax,
// each exactly once, in lexicographically decreasing order, starting at
// (dmax^n) and ending at (1^n). even_only restricts the stream to even
// sums. The current sequence doubles as a resumable cursor.
class SequenceEnumerator {
public:
    SequenceEnumerator(std::uint64_t n, std::uint64_t dmax, bool even_only = false);

    // Resumes from (and including) cursor; entries must not exceed dmax.
    SequenceEnumerator(const DegreeSequence& cursor, std::uint64_t dmax,
                       bool even_only = false);

    // Next sequence in order, nullopt when exhausted.
    std::optional<DegreeSequence> next();

    // Unfiltered stream size: C(n + dmax - 1, dmax - 1). Throws
    // std::overflow_error when it does not fit 128 bits.
    static u128 count(std::uint64_t n, std::uint64_t dmax);

private:
    bool advance();
    u128 current_sum() const;

    std::vector<Run> runs_;
    bool even_only_;
    bool first_ = true;
    bool exhausted_ = false;
};

inline SequenceEnumerator enumerate_sequences(std::uint64_t n, std::uint64_t dmax,
                                              bool even_only = false) {
    return SequenceEnumerator(n, dmax, even_only);
}

// v prepended to rest; requires v >= rest.d1().
DegreeSequence prepend_value(std::uint64_t v, const DegreeSequence& rest);

}  // namespace degseq
