#pragma once

#include <cstdint>

#include "degseq/sequence.hpp"

namespace degseq {

// Family parameter: x = d/2 for even d, (d-1)/2 for odd d.
struct FamilyParams {
    std::uint64_t d;
    std::uint64_t x;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

FamilyParams family_params(std::uint64_t d);  // requires d >= 2

// The sharpness witness one below the floor threshold:
//   even d = 2x:   (d^{x+1}, 1^{x^2+x-2})
//   odd  d = 2x+1: (d^{x+1}, 1^{x^2+2x-1})
// Length floor(d^2/4)+d-1, even sum, non-graphic; all three are checked at
// construction and a std::logic_error is thrown on violation. The empty
// 1-run at d = 2 is omitted.
DegreeSequence witness_nongraphic(std::uint64_t d);

// Graphic sequences that meet the floor bound exactly but miss the d1^2/4 +
// d1 + 1 corollary:
//   odd  x: (2x, 1^{x^2+2x-1})
//   even x: (2x, 2x, 1^{x^2+2x-2})
// Length x^2+2x, even sum, graphic; checked at construction.
DegreeSequence gap_example(std::uint64_t x);

// (d1^k, 1^{n-k}) with 1 <= k <= n; the flattened shape the proof reduces
// candidate counterexamples to.
DegreeSequence proof_extremal_form(std::uint64_t d1, std::uint64_t n, std::uint64_t k);

}  // namespace degseq
