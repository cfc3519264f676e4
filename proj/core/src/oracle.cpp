#include "degseq/oracle.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "degseq/bounds.hpp"
#include "degseq/enumerate.hpp"
#include "degseq/erdos_gallai.hpp"
#include "degseq/extremal.hpp"
#include "degseq/realize.hpp"

namespace degseq {

namespace {

// Runs fn(i) for every partition index on `jobs` workers. Workers claim
// indices from a shared counter; results must be written to per-index
// slots so the merge order never depends on scheduling.
void run_partitions(std::size_t partitions, unsigned jobs,
                    const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || partitions <= 1) {
        for (std::size_t i = 0; i < partitions; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < partitions; i = next.fetch_add(1))
            fn(i);
    };
    std::vector<std::thread> pool;
    const std::size_t count = std::min<std::size_t>(jobs, partitions);
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

void check_one_sequence(const DegreeSequence& seq, ViolationReport& rep) {
    ++rep.sequences_checked;

    const EgReport rle = erdos_gallai_check(seq, EgEngine::Rle);
    const EgReport naive = erdos_gallai_check(seq, EgEngine::Naive);
    if (!(rle == naive)) {
        std::string detail = "rle graphic=" + std::to_string(rle.graphic) +
                             " naive graphic=" + std::to_string(naive.graphic);
        if (rle.first_violation && naive.first_violation &&
            rle.first_violation->k != naive.first_violation->k)
            detail += " first k " + std::to_string(rle.first_violation->k) + " vs " +
                      std::to_string(naive.first_violation->k);
        rep.rle_naive_mismatches.push_back({seq.print(), "rle_vs_naive", detail});
    }
    if (rle.graphic) ++rep.graphic_count;

    const auto realization = havel_hakimi_realize(seq);
    if (realization.has_value() != rle.graphic) {
        rep.eg_hh_mismatches.push_back(
            {seq.print(), "eg_vs_hh",
             "eg graphic=" + std::to_string(rle.graphic) +
                 " hh realized=" + std::to_string(realization.has_value())});
    }
    if (realization) {
        ++rep.realizations_checked;
        if (auto err = validate_realization(*realization, seq))
            rep.violations.push_back({seq.print(), "realization", *err});
    }

    const BoundVerdict predicate_verdicts[] = {
        zz_general(seq, seq.d1(), seq.dn()), zz_simplified(seq), zz_corollary(seq),
        improved_bound(seq), bhjw_bound(seq)};
    for (const BoundVerdict& v : predicate_verdicts) {
        if (v.holds && !rle.graphic)
            rep.violations.push_back(
                {seq.print(), std::string(predicate_name(v.predicate)),
                 "predicate holds but sequence is not graphic"});
    }

    // Flatten preservation: a violation at k must survive flatten_at(seq, k).
    for (const EgTerms& viol : eg_all_violations(seq)) {
        const DegreeSequence flat = flatten_at(seq, viol.k);
        const EgTerms after = eg_terms_at(flat, viol.k);
        if (!after.violated())
            rep.violations.push_back(
                {seq.print(), "flatten_preservation",
                 "violation at k=" + std::to_string(viol.k) + " lost after flatten to " +
                     flat.print()});
    }
}

void merge_into(ViolationReport& total, const ViolationReport& part) {
    total.sequences_checked += part.sequences_checked;
    total.graphic_count += part.graphic_count;
    total.realizations_checked += part.realizations_checked;
    auto append = [](std::vector<Finding>& dst, const std::vector<Finding>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    };
    append(total.violations, part.violations);
    append(total.eg_hh_mismatches, part.eg_hh_mismatches);
    append(total.rle_naive_mismatches, part.rle_naive_mismatches);
}

}  // namespace

ViolationReport cross_check(std::uint64_t nmax, std::uint64_t dmax, unsigned jobs) {
    if (nmax < 1 || dmax < 1)
        throw BadParameters("cross_check requires nmax >= 1 and dmax >= 1");

    // One partition per (length, first value), matching enumeration order:
    // lengths ascending, first value descending within a length.
    struct Partition {
        std::uint64_t n;
        std::uint64_t first;
    };
    std::vector<Partition> parts;
    for (std::uint64_t n = 1; n <= nmax; ++n)
        for (std::uint64_t v = dmax; v >= 1; --v) parts.push_back({n, v});

    std::vector<ViolationReport> results(parts.size());
    run_partitions(parts.size(), jobs, [&](std::size_t i) {
        const auto [n, v] = parts[i];
        ViolationReport& rep = results[i];
        if (n == 1) {
            check_one_sequence(DegreeSequence::from_runs({{v, 1}}), rep);
            return;
        }
        SequenceEnumerator rest(n - 1, v);
        while (auto tail = rest.next()) check_one_sequence(prepend_value(v, *tail), rep);
    });

    ViolationReport total;
    for (const ViolationReport& part : results) merge_into(total, part);
    return total;
}

SharpnessResult sharpness_scan(std::uint64_t d1, std::uint64_t extra_lengths,
                               bool force, unsigned jobs) {
    if (d1 < 2) throw BadParameters("sharpness scan requires d1 >= 2");
    if (d1 > kSharpnessGuardMaxD1 && !force)
        throw Refused("d1 = " + std::to_string(d1) +
                      " exceeds the exhaustive-scan guard (" +
                      std::to_string(kSharpnessGuardMaxD1) + "); pass force to override");
    const u128 wide_threshold = u128(d1) * d1 / 4 + d1;
    if (wide_threshold + extra_lengths > kMaxEntryValue)
        throw BadParameters("scan lengths exceed 2^63-1");
    const std::uint64_t threshold = static_cast<std::uint64_t>(wide_threshold);

    SharpnessResult res;
    res.d1 = d1;
    res.threshold = threshold;

    // The witness constructor already asserts non-graphicality; record it.
    DegreeSequence witness = witness_nongraphic(d1);
    const bool witness_ok = witness.n() == threshold - 1 &&
                            !erdos_gallai_check(witness).graphic;
    if (!witness_ok)
        res.counterexamples.push_back(
            {witness.print(), "witness", "expected non-graphic at threshold-1"});
    res.witness_at_threshold_minus_1 = std::move(witness);

    // One partition per (length, second value); the first entry is pinned
    // to d1 itself.
    struct Partition {
        std::uint64_t length;
        std::uint64_t second;
    };
    std::vector<Partition> parts;
    for (std::uint64_t len = threshold; len <= threshold + extra_lengths; ++len)
        for (std::uint64_t w = d1; w >= 1; --w) parts.push_back({len, w});

    struct Slot {
        std::uint64_t checked = 0;
        std::vector<Finding> bad;
    };
    std::vector<Slot> slots(parts.size());
    run_partitions(parts.size(), jobs, [&](std::size_t i) {
        const auto [len, w] = parts[i];
        Slot& slot = slots[i];
        auto consider = [&](const DegreeSequence& seq) {
            if (seq.sum() % 2 != 0) return;
            ++slot.checked;
            if (!erdos_gallai_check(seq).graphic)
                slot.bad.push_back({seq.print(), "sharpness",
                                    "even-sum sequence at or above the threshold is "
                                    "not graphic"});
        };
        // length >= threshold >= 3 for d1 >= 2, so there are always at
        // least two entries after the pinned head.
        SequenceEnumerator rest(len - 2, w);
        while (auto tail = rest.next())
            consider(prepend_value(d1, prepend_value(w, *tail)));
    });

    for (std::uint64_t len = threshold, i = 0; len <= threshold + extra_lengths; ++len) {
        std::uint64_t checked = 0;
        bool all_ok = true;
        for (std::uint64_t w = d1; w >= 1; --w, ++i) {
            checked += slots[i].checked;
            if (!slots[i].bad.empty()) {
                all_ok = false;
                res.counterexamples.insert(res.counterexamples.end(),
                                           slots[i].bad.begin(), slots[i].bad.end());
            }
        }
        res.sequences_per_length.push_back(checked);
        if (all_ok) res.lengths_confirmed.push_back(len);
    }

    res.confirmed = witness_ok && res.counterexamples.empty() &&
                    res.lengths_confirmed.size() == extra_lengths + 1;
    return res;
}

}  // namespace degseq
