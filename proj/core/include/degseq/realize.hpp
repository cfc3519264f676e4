#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

// A simple graph on vertices 0..n-1 witnessing graphicality. Vertex i has
// degree d_{i+1} of the expanded input sequence.
struct Realization {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v
};

// Havel-Hakimi with deterministic tie-breaking: the pivot is the first
// vertex in the current order (remaining degree descending, original index
// ascending) and its degree is distributed to the next vertices in that
// order. Returns nullopt exactly on non-graphic input.
std::optional<Realization> havel_hakimi_realize(const DegreeSequence& seq);

// nullopt when the realization satisfies every invariant against seq
// (no loops, no duplicate edges, endpoints in range, exact degrees);
// otherwise a description of the first broken invariant.
std::optional<std::string> validate_realization(const Realization& g,
                                                const DegreeSequence& seq);

}  // namespace degseq
