#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

static_assert(sizeof(__int128) == 16, "degseq requires 128-bit integer support");

namespace degseq {

// All comparisons run on 128-bit unsigned integers. With entry values and
// lengths capped at 2^63-1, every intermediate quantity (prefix sums,
// k*(k-1), (1+a+b)^2, 4*b*n) stays strictly below 2^128.
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// ceil(a / b), b > 0
constexpr u128 ceil_div(u128 a, u128 b) {
    return a / b + (a % b != 0 ? 1 : 0);
}

}  // namespace degseq
