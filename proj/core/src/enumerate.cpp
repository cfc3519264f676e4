#include "degseq/enumerate.hpp"

#include <limits>
#include <stdexcept>

namespace degseq {

SequenceEnumerator::SequenceEnumerator(std::uint64_t n, std::uint64_t dmax,
                                       bool even_only)
    : even_only_(even_only) {
    if (n < 1 || dmax < 1)
        throw BadParameters("enumeration requires n >= 1 and dmax >= 1");
    if (dmax > kMaxEntryValue || n > kMaxEntryValue)
        throw BadParameters("enumeration bounds exceed 2^63-1");
    runs_.push_back({dmax, n});
}

SequenceEnumerator::SequenceEnumerator(const DegreeSequence& cursor,
                                       std::uint64_t dmax, bool even_only)
    : even_only_(even_only) {
    if (cursor.d1() > dmax)
        throw BadParameters("cursor entries exceed dmax");
    runs_ = cursor.runs();
}

u128 SequenceEnumerator::current_sum() const {
    u128 s = 0;
    for (const Run& r : runs_) s += u128(r.value) * r.count;
    return s;
}

// Successor in lexicographically decreasing order: decrement the last
// position holding a value > 1, then refill everything to its right with
// the new value (the largest admissible tail).
bool SequenceEnumerator::advance() {
    const std::uint64_t trailing_ones =
        runs_.back().value == 1 ? runs_.back().count : 0;
    if (trailing_ones > 0) {
        if (runs_.size() == 1) return false;  // (1^n) is last
        runs_.pop_back();
    }
    const std::uint64_t new_value = runs_.back().value - 1;
    if (runs_.back().count == 1)
        runs_.pop_back();
    else
        --runs_.back().count;
    runs_.push_back({new_value, trailing_ones + 1});
    return true;
}

std::optional<DegreeSequence> SequenceEnumerator::next() {
    while (!exhausted_) {
        if (first_)
            first_ = false;
        else if (!advance()) {
            exhausted_ = true;
            break;
        }
        if (!even_only_ || current_sum() % 2 == 0)
            return DegreeSequence::from_runs(runs_);
    }
    return std::nullopt;
}

u128 SequenceEnumerator::count(std::uint64_t n, std::uint64_t dmax) {
    if (n < 1 || dmax < 1)
        throw BadParameters("enumeration requires n >= 1 and dmax >= 1");
    // C(n + dmax - 1, dmax - 1), computed as a running exact product.
    const u128 top = u128(n) + dmax - 1;
    u128 k = dmax - 1;
    if (k > top - k) k = top - k;
    u128 result = 1;
    constexpr u128 kMax = ~u128(0);
    for (u128 i = 1; i <= k; ++i) {
        const u128 factor = top - k + i;
        if (result > kMax / factor)
            throw std::overflow_error("multiset count exceeds 128 bits");
        result = result * factor / i;  // divisible at every step
    }
    return result;
}

DegreeSequence prepend_value(std::uint64_t v, const DegreeSequence& rest) {
    if (v < rest.d1())
        throw BadParameters("prepended value smaller than the sequence head");
    std::vector<Run> runs = rest.runs();
    if (runs.front().value == v)
        ++runs.front().count;
    else
        runs.insert(runs.begin(), Run{v, 1});
    return DegreeSequence::from_runs(std::move(runs));
}

}  // namespace degseq
