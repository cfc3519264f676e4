#include "degseq/sequence.hpp"

#include <algorithm>
#include <cctype>

namespace degseq {

namespace {

void check_run_invariants(const std::vector<Run>& runs) {
    if (runs.empty())
        throw BadParameters("sequence must contain at least one entry");
    std::uint64_t prev = 0;
    bool first = true;
    for (const Run& r : runs) {
        if (r.value == 0 || r.count == 0)
            throw BadParameters("run values and counts must be positive");
        if (r.value > kMaxEntryValue)
            throw BadParameters("entry value exceeds 2^63-1");
        if (!first && r.value >= prev)
            throw BadParameters("run values must be strictly decreasing");
        prev = r.value;
        first = false;
    }
}

}  // namespace

DegreeSequence DegreeSequence::from_runs(std::vector<Run> runs) {
    check_run_invariants(runs);
    DegreeSequence seq;
    u128 n = 0;
    u128 sum = 0;
    for (const Run& r : runs) {
        n += r.count;
        sum += u128(r.value) * r.count;
    }
    if (n > kMaxEntryValue)
        throw BadParameters("total length exceeds 2^63-1");
    seq.runs_ = std::move(runs);
    seq.n_ = static_cast<std::uint64_t>(n);
    seq.sum_ = sum;
    return seq;
}

DegreeSequence DegreeSequence::from_values(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    std::vector<Run> runs;
    for (std::uint64_t v : values) {
        if (!runs.empty() && runs.back().value == v)
            ++runs.back().count;
        else
            runs.push_back({v, 1});
    }
    return from_runs(std::move(runs));
}

std::uint64_t DegreeSequence::value_at(std::uint64_t k) const {
    if (k < 1 || k > n_)
        throw IndexOutOfRange("index " + std::to_string(k) + " outside 1.." +
                              std::to_string(n_));
    std::uint64_t seen = 0;
    for (const Run& r : runs_) {
        seen += r.count;
        if (k <= seen) return r.value;
    }
    throw IndexOutOfRange("unreachable");  // runs cover 1..n
}

std::vector<std::uint64_t> DegreeSequence::expand() const {
    constexpr std::uint64_t kMaxExpand = 100'000'000;
    if (n_ > kMaxExpand)
        throw std::length_error("refusing to expand a sequence of length " +
                                std::to_string(n_));
    std::vector<std::uint64_t> out;
    out.reserve(n_);
    for (const Run& r : runs_)
        out.insert(out.end(), r.count, r.value);
    return out;
}

std::string DegreeSequence::print() const {
    std::string out;
    bool first = true;
    for (const Run& r : runs_) {
        if (!first) out.push_back(',');
        out += std::to_string(r.value);
        if (r.count > 1) {
            out.push_back('^');
            out += std::to_string(r.count);
        }
        first = false;
    }
    return out;
}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Parses a decimal unsigned integer capped at 2^63-1; advances pos.
std::uint64_t parse_number(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(ParseError::Kind::Malformed,
                         "expected a decimal integer at position " + std::to_string(pos));
    u128 value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > kMaxEntryValue)
            throw ParseError(ParseError::Kind::Overflow, "value exceeds 2^63-1");
        ++pos;
    }
    return static_cast<std::uint64_t>(value);
}

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
}

}  // namespace

DegreeSequence parse_sequence(std::string_view text) {
    std::size_t pos = 0;
    skip_space(text, pos);
    if (pos == text.size())
        throw ParseError(ParseError::Kind::Empty, "no terms in input");

    std::vector<Run> terms;
    u128 total = 0;
    while (true) {
        skip_space(text, pos);
        std::uint64_t value = parse_number(text, pos);
        std::uint64_t count = 1;
        skip_space(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_space(text, pos);
            count = parse_number(text, pos);
            skip_space(text, pos);
        }
        if (value == 0 || count == 0)
            throw ParseError(ParseError::Kind::ZeroEntry,
                             "entries must be positive integers");
        total += count;
        if (total > kMaxEntryValue)
            throw ParseError(ParseError::Kind::Overflow, "total length exceeds 2^63-1");
        terms.push_back({value, count});
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError(ParseError::Kind::Malformed,
                             "unexpected character at position " + std::to_string(pos));
        ++pos;  // consume ','
        skip_space(text, pos);
        if (pos == text.size())
            throw ParseError(ParseError::Kind::Malformed, "trailing comma");
    }

    // Sort descending and merge equal values.
    std::sort(terms.begin(), terms.end(),
              [](const Run& a, const Run& b) { return a.value > b.value; });
    std::vector<Run> runs;
    for (const Run& t : terms) {
        if (!runs.empty() && runs.back().value == t.value) {
            runs.back().count += t.count;  // counts sum to <= 2^63-1, no overflow
        } else {
            runs.push_back(t);
        }
    }
    return DegreeSequence::from_runs(std::move(runs));
}

DegreeSequence flatten_at(const DegreeSequence& seq, std::uint64_t k) {
    const std::uint64_t n = seq.n();
    if (k < 1 || k > n)
        throw IndexOutOfRange("flatten index " + std::to_string(k) + " outside 1.." +
                              std::to_string(n));
    const std::uint64_t top = seq.d1();
    const std::uint64_t bottom = seq.dn();
    std::vector<Run> runs;
    if (k == n || top == bottom) {
        runs.push_back({top, n});  // head covers everything
    } else {
        runs.push_back({top, k});
        runs.push_back({bottom, n - k});
    }
    return DegreeSequence::from_runs(std::move(runs));
}

}  // namespace degseq
