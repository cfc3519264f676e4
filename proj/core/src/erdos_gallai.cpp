#include "degseq/erdos_gallai.hpp"

#include <algorithm>
#include <cassert>

namespace degseq {

namespace {

// Prefix/suffix aggregates over the runs. Positions are 1-based; run j
// covers positions (end[j-1], end[j]].
struct Aggregates {
    const std::vector<Run>& runs;
    std::vector<std::uint64_t> end;      // end[j] = c_0 + ... + c_j
    std::vector<u128> prefix;            // prefix[j] = sum of v*c through run j
    std::vector<std::uint64_t> suf_cnt;  // suf_cnt[j] = c_j + ... + c_{r-1}
    std::vector<u128> suf_sum;           // suf_sum[j] = v_j*c_j + ... (size r+1)

    explicit Aggregates(const DegreeSequence& seq) : runs(seq.runs()) {
        const std::size_t r = runs.size();
        end.resize(r);
        prefix.resize(r);
        suf_cnt.assign(r + 1, 0);
        suf_sum.assign(r + 1, 0);
        std::uint64_t cnt = 0;
        u128 sum = 0;
        for (std::size_t j = 0; j < r; ++j) {
            cnt += runs[j].count;
            sum += u128(runs[j].value) * runs[j].count;
            end[j] = cnt;
            prefix[j] = sum;
        }
        for (std::size_t j = r; j-- > 0;) {
            suf_cnt[j] = suf_cnt[j + 1] + runs[j].count;
            suf_sum[j] = suf_sum[j + 1] + u128(runs[j].value) * runs[j].count;
        }
    }

    std::uint64_t n() const { return end.back(); }

    std::uint64_t start_of(std::size_t j) const { return j == 0 ? 1 : end[j - 1] + 1; }

    // Run containing position k.
    std::size_t run_of(std::uint64_t k) const {
        return static_cast<std::size_t>(
            std::lower_bound(end.begin(), end.end(), k) - end.begin());
    }

    u128 lhs_at(std::uint64_t k, std::size_t j) const {
        const u128 before = j == 0 ? 0 : prefix[j - 1];
        return before + u128(runs[j].value) * (k - (start_of(j) - 1));
    }

    // sum_{i>k} min(k, d_i)
    u128 tail_min_at(std::uint64_t k, std::size_t j) const {
        const std::uint64_t v = runs[j].value;
        u128 total = u128(std::min(k, v)) * (end[j] - k);  // rest of run j
        // Later runs split at value k: values > k contribute k each,
        // values <= k contribute themselves.
        std::size_t lo = j + 1;
        const std::size_t r = runs.size();
        std::size_t split = lo;
        {
            // first index >= lo with value <= k (values strictly decreasing)
            std::size_t a = lo, b = r;
            while (a < b) {
                const std::size_t mid = a + (b - a) / 2;
                if (runs[mid].value <= k)
                    b = mid;
                else
                    a = mid + 1;
            }
            split = a;
        }
        total += u128(k) * (suf_cnt[lo] - suf_cnt[split]);
        total += suf_sum[split];
        return total;
    }

    EgTerms terms_at(std::uint64_t k) const {
        const std::size_t j = run_of(k);
        EgTerms t;
        t.k = k;
        t.lhs = lhs_at(k, j);
        t.rhs = u128(k) * (k - 1) + tail_min_at(k, j);
        return t;
    }

    std::uint64_t durfee() const {
        std::uint64_t m = 1;  // d_1 >= 1 always
        for (std::size_t j = 0; j < runs.size(); ++j) {
            const std::uint64_t a = start_of(j);
            const std::uint64_t v = runs[j].value;
            if (v < a) break;
            m = std::min(end[j], v);
        }
        return m;
    }
};

// Least violating k, or nullopt. Only k <= durfee need checking. Within one
// run, restricted to k <= m, the slack lhs(k)-rhs(k) is convex piecewise
// linear in k with kinks only at later run values, so a violation exists in
// a run interval iff one of its endpoints is violated, and the least
// violating k sits at the first crossing of a linear piece.
std::optional<EgTerms> rle_first_violation(const Aggregates& agg) {
    const std::uint64_t m = agg.durfee();
    const std::size_t r = agg.runs.size();
    for (std::size_t j = 0; j < r && agg.start_of(j) <= m; ++j) {
        const std::uint64_t lo = agg.start_of(j);
        const std::uint64_t hi = std::min(agg.end[j], m);
        const EgTerms at_lo = agg.terms_at(lo);
        if (at_lo.violated()) return at_lo;
        if (lo == hi) continue;
        const EgTerms at_hi = agg.terms_at(hi);
        if (!at_hi.violated()) continue;  // convex: no interior violation either

        // Walk the linear pieces between kinks; the first piece whose right
        // end is violated contains the first crossing.
        std::vector<std::uint64_t> kinks;
        for (std::size_t l = j + 1; l < r; ++l) {
            const std::uint64_t v = agg.runs[l].value;
            if (v > lo && v < hi) kinks.push_back(v);
        }
        std::reverse(kinks.begin(), kinks.end());  // run values descend; want ascending
        kinks.push_back(hi);
        std::uint64_t piece_lo = lo;
        for (std::uint64_t q : kinks) {
            if (agg.terms_at(q).violated()) {
                // Linear on [piece_lo, q] with slack <= 0 at piece_lo:
                // binary search the first violated index.
                std::uint64_t a = piece_lo, b = q;
                while (a + 1 < b) {
                    const std::uint64_t mid = a + (b - a) / 2;
                    if (agg.terms_at(mid).violated())
                        b = mid;
                    else
                        a = mid;
                }
                return agg.terms_at(b);
            }
            piece_lo = q;
        }
        assert(false && "right endpoint was violated but no piece crossed");
    }
    return std::nullopt;
}

std::optional<EgTerms> naive_first_violation(const Aggregates& agg) {
    const std::uint64_t n = agg.n();
    for (std::uint64_t k = 1; k <= n; ++k) {
        const EgTerms t = agg.terms_at(k);
        if (t.violated()) return t;
    }
    return std::nullopt;
}

}  // namespace

EgReport erdos_gallai_check(const DegreeSequence& seq, EgEngine engine) {
    const Aggregates agg(seq);
    EgReport rep;
    rep.parity_even = seq.sum() % 2 == 0;
    rep.first_violation = engine == EgEngine::Rle ? rle_first_violation(agg)
                                                  : naive_first_violation(agg);
    rep.graphic = rep.parity_even && !rep.first_violation;
    return rep;
}

EgTerms eg_terms_at(const DegreeSequence& seq, std::uint64_t k) {
    if (k < 1 || k > seq.n())
        throw IndexOutOfRange("inequality index " + std::to_string(k) + " outside 1.." +
                              std::to_string(seq.n()));
    return Aggregates(seq).terms_at(k);
}

std::vector<EgTerms> eg_all_violations(const DegreeSequence& seq) {
    const Aggregates agg(seq);
    std::vector<EgTerms> out;
    const std::uint64_t n = agg.n();
    for (std::uint64_t k = 1; k <= n; ++k) {
        const EgTerms t = agg.terms_at(k);
        if (t.violated()) out.push_back(t);
    }
    return out;
}

std::uint64_t durfee_index(const DegreeSequence& seq) {
    return Aggregates(seq).durfee();
}

}  // namespace degseq
