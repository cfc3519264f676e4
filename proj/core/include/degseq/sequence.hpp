#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/int128.hpp"

namespace degseq {

// Largest entry value (and largest total length) a sequence may carry.
inline constexpr std::uint64_t kMaxEntryValue = (std::uint64_t{1} << 63) - 1;

class ParseError : public std::runtime_error {
public:
    enum class Kind { Empty, Malformed, ZeroEntry, Overflow };

    ParseError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class BadParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct Run {
    std::uint64_t value;
    std::uint64_t count;

    friend bool operator==(const Run&, const Run&) = default;
};

// A decreasing sequence of positive integers, stored run-length encoded.
// Run values are strictly decreasing, all values and counts are >= 1, and
// the total length n = sum of counts is at least 1.
class DegreeSequence {
public:
    // Validates the run invariants; throws BadParameters on violation.
    static DegreeSequence from_runs(std::vector<Run> runs);
    // Sorts descending and re-encodes; input order is irrelevant.
    static DegreeSequence from_values(std::vector<std::uint64_t> values);

    const std::vector<Run>& runs() const { return runs_; }
    std::uint64_t n() const { return n_; }
    u128 sum() const { return sum_; }
    std::uint64_t d1() const { return runs_.front().value; }
    std::uint64_t dn() const { return runs_.back().value; }

    // d_k with 1-based k; throws IndexOutOfRange.
    std::uint64_t value_at(std::uint64_t k) const;

    // Expanded per-vertex degrees, descending. Guarded against absurd n.
    std::vector<std::uint64_t> expand() const;

    // Canonical text: runs as "V^C" (count omitted when 1), comma separated.
    std::string print() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    DegreeSequence() = default;

    std::vector<Run> runs_;
    std::uint64_t n_ = 0;
    u128 sum_ = 0;
};

// Text grammar: comma-separated terms, each "V" or "V^C" with V and C decimal
// positive integers; ASCII whitespace is allowed around tokens. Terms are
// expanded, sorted descending and re-encoded as runs.
DegreeSequence parse_sequence(std::string_view text);

// The proof reduction: replace the first k entries by d1 and the remaining
// n-k entries by dn. Length, d1 and dn are preserved. 1 <= k <= n.
DegreeSequence flatten_at(const DegreeSequence& seq, std::uint64_t k);

}  // namespace degseq
