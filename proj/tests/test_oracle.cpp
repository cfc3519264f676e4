#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <degseq/enumerate.hpp>
#include <degseq/oracle.hpp>

using namespace degseq;

TEST_CASE("cross_check on the single odd singleton") {
    const ViolationReport r = cross_check(1, 1);
    CHECK(r.sequences_checked == 1);
    CHECK(r.graphic_count == 0);  // (1) has odd sum
    CHECK(r.clean());
}

TEST_CASE("cross_check(8,5) is clean with the closed-form count") {
    const ViolationReport r = cross_check(8, 5);
    u128 want = 0;
    for (std::uint64_t n = 1; n <= 8; ++n) want += SequenceEnumerator::count(n, 5);
    CHECK(u128(r.sequences_checked) == want);
    CHECK(r.sequences_checked == 1286);
    CHECK(r.clean());
    CHECK(r.graphic_count > 0);
    CHECK(r.realizations_checked == r.graphic_count);
}

TEST_CASE("cross_check is deterministic across worker counts") {
    const ViolationReport serial = cross_check(7, 5, 1);
    const ViolationReport threaded = cross_check(7, 5, 4);
    CHECK(serial == threaded);
}

TEST_CASE("cross_check validates arguments") {
    CHECK_THROWS_AS(cross_check(0, 3), BadParameters);
    CHECK_THROWS_AS(cross_check(3, 0), BadParameters);
}

TEST_CASE("sharpness scan at d1=2") {
    const SharpnessResult r = sharpness_scan(2, 2);
    CHECK(r.threshold == 3);
    REQUIRE(r.witness_at_threshold_minus_1);
    CHECK(r.witness_at_threshold_minus_1->print() == "2^2");
    CHECK(r.lengths_confirmed == std::vector<std::uint64_t>{3, 4, 5});
    CHECK(r.confirmed);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("sharpness scan at d1=4") {
    const SharpnessResult r = sharpness_scan(4, 1);
    CHECK(r.threshold == 8);
    REQUIRE(r.witness_at_threshold_minus_1);
    CHECK(r.witness_at_threshold_minus_1->print() == "4^3,1^4");
    CHECK(r.witness_at_threshold_minus_1->n() == 7);
    CHECK(r.lengths_confirmed == std::vector<std::uint64_t>{8, 9});
    CHECK(r.confirmed);
}

TEST_CASE("sharpness scan at d1=5 with no extra lengths") {
    const SharpnessResult r = sharpness_scan(5, 0);
    CHECK(r.threshold == 11);
    REQUIRE(r.witness_at_threshold_minus_1);
    CHECK(r.witness_at_threshold_minus_1->print() == "5^3,1^7");
    CHECK(r.witness_at_threshold_minus_1->n() == 10);
    CHECK(r.lengths_confirmed == std::vector<std::uint64_t>{11});
    CHECK(r.confirmed);
}

TEST_CASE("sharpness scan is deterministic across worker counts") {
    CHECK(sharpness_scan(5, 1, false, 1) == sharpness_scan(5, 1, false, 3));
}

TEST_CASE("sharpness guard refuses large d1 without force") {
    CHECK(kSharpnessGuardMaxD1 == 12);
    CHECK_THROWS_AS(sharpness_scan(13, 0), Refused);
    CHECK_THROWS_AS(sharpness_scan(100, 0), Refused);
    CHECK_THROWS_AS(sharpness_scan(1, 0), BadParameters);
}
