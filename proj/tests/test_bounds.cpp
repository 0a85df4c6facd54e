#include <catch2/catch_amalgamated.hpp>

#include "mgonal/bounds.hpp"

using namespace mgonal;

TEST_CASE("ell piecewise values") {
    CHECK(ell(3) == 3);
    CHECK(ell(4) == 4);
    CHECK(ell(5) == 3);
    CHECK(ell(6) == 3);
    CHECK(ell(8) == 4);
    CHECK(ell(10) == 6);
    CHECK(ell(14) == 10);
    CHECK(ell(100) == 96);
    CHECK_THROWS_AS(ell(7), std::domain_error);
    CHECK_THROWS_AS(ell(9), std::domain_error);
}

TEST_CASE("escalation rank bound is the base-2 ceiling") {
    CHECK(min_rank_escalation(8) == 3);
    CHECK(min_rank_escalation(12) == 4);
    CHECK(min_rank_escalation(19) == 4);   // m-3 = 16 lands exactly
    CHECK(min_rank_escalation(20) == 5);
    CHECK(min_rank_escalation(1027) == 10);
    CHECK_THROWS_AS(min_rank_escalation(7), std::invalid_argument);

    SECTION("matches the smallest nonempty enumeration rank") {
        for (i64 m = 12; m <= 40; ++m) {
            const int k = min_rank_escalation(m);
            CHECK(enumerate_escalations(m, k).size() > 0);
            CHECK(enumerate_escalations(m, k - 1).empty());
        }
    }
}

TEST_CASE("universal rank bound branches") {
    const auto b17 = min_rank_universal(17);
    CHECK((b17.lower == 5 && b17.upper == 5 && b17.exact));
    const auto b19 = min_rank_universal(19);  // d = -3 boundary
    CHECK((b19.lower == 5 && b19.upper == 5 && b19.exact));
    const auto b12 = min_rank_universal(12);  // d = 4
    CHECK((b12.lower == 4 && b12.upper == 5 && !b12.exact));
    CHECK_THROWS_AS(min_rank_universal(11), std::invalid_argument);

    SECTION("partition, consistency and the +1 linkage on a sample") {
        for (i64 m = 12; m <= 5000; ++m) {
            const auto bound = min_rank_universal(m);
            const int k = min_rank_escalation(m);
            const i64 d = (i64{1} << k) - m;
            CAPTURE(m, d);
            REQUIRE(bound.lower >= k);
            REQUIRE(bound.upper == k + 1);
            REQUIRE(bound.lower <= bound.upper);
            REQUIRE(bound.exact == (bound.lower == bound.upper));
            if (d <= 1) {
                REQUIRE(bound.exact);
            } else {
                REQUIRE_FALSE(bound.exact);
            }
        }
    }
}

TEST_CASE("no smaller rank can cover 1..m-4") {
    CHECK(check_rank_lower_bound(12, 3, 8));
    CHECK(check_rank_lower_bound(20, 4, 16));
    CHECK(check_rank_lower_bound(12, 2, 8));
    CHECK_THROWS_AS(check_rank_lower_bound(12, 4, 8), std::invalid_argument);
}
