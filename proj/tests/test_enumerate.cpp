#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include <degseq/enumerate.hpp>

#include "brute_oracle.hpp"

using namespace degseq;

namespace {

std::vector<std::string> drain(SequenceEnumerator en) {
    std::vector<std::string> out;
    while (auto s = en.next()) out.push_back(s->print());
    return out;
}

}  // namespace

TEST_CASE("length 3 over {1,2} in order") {
    CHECK(drain(enumerate_sequences(3, 2)) ==
          std::vector<std::string>{"2^3", "2^2,1", "2,1^2", "1^3"});
}

TEST_CASE("even-only filter") {
    CHECK(drain(enumerate_sequences(2, 2, true)) ==
          std::vector<std::string>{"2^2", "1^2"});
    std::uint64_t even_count = 0;
    SequenceEnumerator en(4, 3, true);
    while (auto s = en.next()) {
        CHECK(s->sum() % 2 == 0);
        ++even_count;
    }
    CHECK(even_count == 9);
}

TEST_CASE("stream matches brute recursion exactly") {
    for (std::uint64_t n = 1; n <= 6; ++n) {
        for (std::uint64_t dmax = 1; dmax <= 5; ++dmax) {
            const auto want = brute::desc_sequences(n, dmax);
            SequenceEnumerator en(n, dmax);
            std::size_t i = 0;
            while (auto s = en.next()) {
                REQUIRE(i < want.size());
                CHECK(s->expand() == want[i]);
                ++i;
            }
            CHECK(i == want.size());
        }
    }
}

TEST_CASE("stream size equals the multiset count, no duplicates") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (std::uint64_t dmax = 1; dmax <= 6; ++dmax) {
            std::set<std::string> seen;
            std::uint64_t count = 0;
            SequenceEnumerator en(n, dmax);
            while (auto s = en.next()) {
                ++count;
                CHECK(seen.insert(s->print()).second);
            }
            CHECK(u128(count) == SequenceEnumerator::count(n, dmax));
        }
    }
}

TEST_CASE("binomial count values") {
    CHECK(SequenceEnumerator::count(3, 2) == 4);
    CHECK(SequenceEnumerator::count(12, 8) == 50388);  // C(19,7)
    CHECK(SequenceEnumerator::count(1, 1) == 1);
    CHECK(SequenceEnumerator::count(5, 1) == 1);
}

TEST_CASE("cursor resumes mid-stream") {
    SequenceEnumerator full(5, 4);
    std::vector<DegreeSequence> all;
    while (auto s = full.next()) all.push_back(*s);
    const std::size_t mid = all.size() / 2;

    SequenceEnumerator resumed(all[mid], 4);
    for (std::size_t i = mid; i < all.size(); ++i) {
        auto s = resumed.next();
        REQUIRE(s);
        CHECK(*s == all[i]);
    }
    CHECK(!resumed.next());
}

TEST_CASE("prepend merges runs") {
    const DegreeSequence rest = parse_sequence("3,1");
    CHECK(prepend_value(3, rest).print() == "3^2,1");
    CHECK(prepend_value(5, rest).print() == "5,3,1");
    CHECK_THROWS_AS(prepend_value(2, rest), BadParameters);
}

TEST_CASE("partitioning by first element covers the stream in order") {
    const std::uint64_t n = 6, dmax = 4;
    std::vector<std::string> by_parts;
    for (std::uint64_t v = dmax; v >= 1; --v) {
        SequenceEnumerator rest(n - 1, v);
        while (auto tail = rest.next())
            by_parts.push_back(prepend_value(v, *tail).print());
    }
    CHECK(by_parts == drain(enumerate_sequences(n, dmax)));
}

TEST_CASE("enumerator rejects bad arguments") {
    CHECK_THROWS_AS(SequenceEnumerator(0, 3), BadParameters);
    CHECK_THROWS_AS(SequenceEnumerator(3, 0), BadParameters);
    CHECK_THROWS_AS(SequenceEnumerator(parse_sequence("5,1"), 4), BadParameters);
}
