#include "degseq/realize.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace degseq {

std::optional<Realization> havel_hakimi_realize(const DegreeSequence& seq) {
    constexpr std::uint64_t kMaxVertices = 10'000'000;
    constexpr u128 kMaxEdges = 50'000'000;
    if (seq.n() > kMaxVertices)
        throw std::length_error("refusing to realize " + std::to_string(seq.n()) +
                                " vertices");
    if (seq.sum() % 2 == 0 && seq.sum() / 2 > kMaxEdges)
        throw std::length_error("refusing to realize " + to_string(seq.sum() / 2) +
                                " edges");

    std::vector<std::uint64_t> rem = seq.expand();
    const std::uint32_t n = static_cast<std::uint32_t>(rem.size());

    Realization out;
    out.n = n;

    // Vertices with remaining degree > 0, kept sorted by
    // (remaining degree descending, original index ascending).
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);

    while (!order.empty()) {
        const std::uint32_t pivot = order.front();
        const std::uint64_t d = rem[pivot];
        if (d > order.size() - 1) return std::nullopt;  // not enough live targets
        for (std::uint64_t i = 1; i <= d; ++i) {
            const std::uint32_t t = order[i];
            out.edges.emplace_back(std::min(pivot, t), std::max(pivot, t));
            --rem[t];
        }
        rem[pivot] = 0;
        order.erase(order.begin());
        std::erase_if(order, [&](std::uint32_t v) { return rem[v] == 0; });
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return rem[a] != rem[b] ? rem[a] > rem[b] : a < b;
        });
    }
    return out;
}

std::optional<std::string> validate_realization(const Realization& g,
                                                const DegreeSequence& seq) {
    if (g.n != seq.n())
        return "vertex count " + std::to_string(g.n) + " != sequence length " +
               std::to_string(seq.n());
    std::vector<std::uint64_t> deg(g.n, 0);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& [u, v] : g.edges) {
        if (u >= g.n || v >= g.n)
            return "edge endpoint out of range";
        if (u == v)
            return "self-loop at vertex " + std::to_string(u);
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            return "duplicate edge " + std::to_string(u) + "-" + std::to_string(v);
        ++deg[u];
        ++deg[v];
    }
    std::vector<std::uint64_t> want = seq.expand();
    std::sort(deg.begin(), deg.end(), std::greater<>());
    if (deg != want)
        return "degree multiset differs from the input sequence";
    return std::nullopt;
}

}  // namespace degseq
