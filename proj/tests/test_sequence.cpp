#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <degseq/enumerate.hpp>
#include <degseq/sequence.hpp>

using namespace degseq;

TEST_CASE("parse expands terms into descending runs") {
    const DegreeSequence a = parse_sequence("3,3,1,1");
    CHECK(a.runs() == std::vector<Run>{{3, 2}, {1, 2}});
    CHECK(a.n() == 4);
    CHECK(a.sum() == 8);

    const DegreeSequence b = parse_sequence("4^2,1^6");
    CHECK(b.runs() == std::vector<Run>{{4, 2}, {1, 6}});
    CHECK(b.n() == 8);
    CHECK(b.sum() == 14);
    CHECK(b.d1() == 4);
    CHECK(b.dn() == 1);
}

TEST_CASE("parse sorts unsorted input") {
    const DegreeSequence s = parse_sequence("2,3,1");
    CHECK(s.runs() == std::vector<Run>{{3, 1}, {2, 1}, {1, 1}});
}

TEST_CASE("parse merges repeated values across terms") {
    const DegreeSequence s = parse_sequence("2,2^3,5,2");
    CHECK(s.runs() == std::vector<Run>{{5, 1}, {2, 5}});
}

TEST_CASE("parse accepts whitespace around tokens") {
    CHECK(parse_sequence(" 3 , 3 ,1, 1 ") == parse_sequence("3,3,1,1"));
    CHECK(parse_sequence("4 ^ 2, 1^6") == parse_sequence("4^2,1^6"));
}

TEST_CASE("parse rejects zero entries") {
    CHECK_THROWS_WITH_AS(parse_sequence("0,1"), "entries must be positive integers",
                         ParseError);
    try {
        parse_sequence("0,1");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::ZeroEntry);
    }
    CHECK_THROWS_AS(parse_sequence("3^0"), ParseError);
}

TEST_CASE("parse rejects empty and malformed input") {
    auto kind_of = [](const char* text) {
        try {
            parse_sequence(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("no error raised for ", text);
        return ParseError::Kind::Empty;
    };
    CHECK(kind_of("") == ParseError::Kind::Empty);
    CHECK(kind_of("   ") == ParseError::Kind::Empty);
    CHECK(kind_of(",1") == ParseError::Kind::Malformed);
    CHECK(kind_of("1,") == ParseError::Kind::Malformed);
    CHECK(kind_of("1,,2") == ParseError::Kind::Malformed);
    CHECK(kind_of("3^") == ParseError::Kind::Malformed);
    CHECK(kind_of("3^^2") == ParseError::Kind::Malformed);
    CHECK(kind_of("a,1") == ParseError::Kind::Malformed);
    CHECK(kind_of("3 3") == ParseError::Kind::Malformed);
    CHECK(kind_of("-1") == ParseError::Kind::Malformed);
}

TEST_CASE("parse rejects values beyond 2^63-1") {
    CHECK_NOTHROW(parse_sequence("9223372036854775807"));
    auto kind_of = [](const char* text) {
        try {
            parse_sequence(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("no error raised for ", text);
        return ParseError::Kind::Empty;
    };
    CHECK(kind_of("9223372036854775808") == ParseError::Kind::Overflow);
    CHECK(kind_of("1^9223372036854775808") == ParseError::Kind::Overflow);
    // total length overflows even though each count fits
    CHECK(kind_of("2^9223372036854775807,1^2") == ParseError::Kind::Overflow);
}

TEST_CASE("canonical print omits unit counts") {
    CHECK(parse_sequence("5,5,5,1^7").print() == "5^3,1^7");
    CHECK(parse_sequence("2,1,1").print() == "2,1^2");
    CHECK(parse_sequence("7").print() == "7");
}

TEST_CASE("parse/print round trip over enumerated sequences") {
    for (std::uint64_t n = 1; n <= 7; ++n) {
        SequenceEnumerator en(n, 5);
        while (auto s = en.next()) {
            CAPTURE(s->print());
            CHECK(parse_sequence(s->print()) == *s);
        }
    }
}

TEST_CASE("value_at walks the expansion") {
    const DegreeSequence s = parse_sequence("5,3^2,1^4");
    CHECK(s.value_at(1) == 5);
    CHECK(s.value_at(2) == 3);
    CHECK(s.value_at(3) == 3);
    CHECK(s.value_at(4) == 1);
    CHECK(s.value_at(7) == 1);
    CHECK_THROWS_AS(s.value_at(0), IndexOutOfRange);
    CHECK_THROWS_AS(s.value_at(8), IndexOutOfRange);
}

TEST_CASE("from_runs validates invariants") {
    CHECK_THROWS_AS(DegreeSequence::from_runs({}), BadParameters);
    CHECK_THROWS_AS(DegreeSequence::from_runs({{3, 1}, {3, 1}}), BadParameters);
    CHECK_THROWS_AS(DegreeSequence::from_runs({{1, 1}, {3, 1}}), BadParameters);
    CHECK_THROWS_AS(DegreeSequence::from_runs({{0, 2}}), BadParameters);
    CHECK_THROWS_AS(DegreeSequence::from_runs({{2, 0}}), BadParameters);
}

TEST_CASE("from_values sorts and encodes") {
    const auto s = DegreeSequence::from_values({1, 3, 2, 3, 1});
    CHECK(s.print() == "3^2,2,1^2");
    CHECK(s.expand() == std::vector<std::uint64_t>{3, 3, 2, 1, 1});
}

TEST_CASE("flatten_at produces the proof shape") {
    const DegreeSequence s = parse_sequence("3,2,2,1");
    CHECK(flatten_at(s, 2) == parse_sequence("3,3,1,1"));

    CHECK(flatten_at(parse_sequence("4,4,1,1"), 2) == parse_sequence("4,4,1,1"));
    CHECK(flatten_at(parse_sequence("5,3,2,2,1"), 1) == parse_sequence("5,1,1,1,1"));

    CHECK_THROWS_AS(flatten_at(s, 0), IndexOutOfRange);
    CHECK_THROWS_AS(flatten_at(s, 5), IndexOutOfRange);
}

TEST_CASE("flatten_at preserves length and extremes") {
    SequenceEnumerator en(6, 5);
    while (auto s = en.next()) {
        for (std::uint64_t k = 1; k <= s->n(); ++k) {
            const DegreeSequence flat = flatten_at(*s, k);
            CAPTURE(s->print());
            CAPTURE(k);
            CHECK(flat.n() == s->n());
            CHECK(flat.d1() == s->d1());
            CHECK(flat.value_at(k) == s->d1());
            if (k < s->n()) {
                // the tail (when any) is all dn
                CHECK(flat.dn() == s->dn());
                CHECK(flat.value_at(k + 1) == s->dn());
            }
        }
    }
}

TEST_CASE("flatten_at merges when the sequence is constant") {
    CHECK(flatten_at(parse_sequence("2^4"), 2) == parse_sequence("2^4"));
    CHECK(flatten_at(parse_sequence("3,1"), 2) == parse_sequence("3^2"));
}
