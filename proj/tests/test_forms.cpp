#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mgonal/forms.hpp"
#include "oracles.hpp"

using namespace mgonal;

TEST_CASE("form construction sorts and validates") {
    const Form f(12, {4, 1, 2, 1});
    CHECK(f.coeffs() == std::vector<i64>{1, 1, 2, 4});
    CHECK(f.rank() == 4);
    CHECK(f.name() == "<1,1,2,4>_12");
    CHECK_THROWS_AS(Form(12, {}), std::invalid_argument);
    CHECK_THROWS_AS(Form(12, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Form(2, {1}), std::invalid_argument);
}

TEST_CASE("represents finds deterministic witnesses") {
    SECTION("unary form hits m-3 at x = -1") {
        const auto w = represents(Form(12, {1}), 9);
        REQUIRE(w.has_value());
        CHECK(*w == Witness{-1});
    }
    SECTION("small values force 0/1 indices") {
        CHECK_FALSE(represents(Form(12, {1, 1, 2}), 7).has_value());
    }
    SECTION("pinned search order") {
        const auto w = represents(Form(12, {1, 1, 1, 1}), 11);
        REQUIRE(w.has_value());
        CHECK(*w == Witness{-1, 1, 1, 0});
    }
}

TEST_CASE("witnesses substitute back exactly") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<i64> pick_m(5, 30), pick_n(1, 400), pick_a(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const i64 m = pick_m(rng);
        std::vector<i64> coeffs;
        const int rank = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < rank; ++i) coeffs.push_back(pick_a(rng));
        const Form form(m, coeffs);
        const i64 n = pick_n(rng);
        if (const auto w = represents(form, n)) {
            REQUIRE(apply(form, *w) == n);
        }
    }
}

TEST_CASE("represents agrees with the naive nested-loop oracle") {
    for (i64 m = 12; m <= 16; ++m) {
        for (int rank = 1; rank <= 3; ++rank) {
            for (const auto& coeffs : oracle::sorted_tuples(rank, 4)) {
                const Form form(m, coeffs);
                for (i64 n = 1; n <= 200; ++n) {
                    const bool fast = represents(form, n).has_value();
                    const bool slow = oracle::naive_represents(m, coeffs, n);
                    CAPTURE(m, form.name(), n);
                    REQUIRE(fast == slow);
                }
            }
        }
    }
}

TEST_CASE("below m-3 every witness index is 0 or 1") {
    for (i64 m = 12; m <= 20; ++m) {
        const Form form(m, {1, 1, 2, 4, 8});
        for (i64 n = 1; n < m - 3; ++n) {
            const auto w = represents(form, n);
            if (!w) continue;
            for (i64 x : *w) {
                CAPTURE(m, n);
                REQUIRE((x == 0 || x == 1));
            }
        }
    }
}

TEST_CASE("check_coverage lists exactly the unrepresented values") {
    SECTION("binary subset sums cover 1..8") {
        CHECK(check_coverage(Form(12, {1, 1, 2, 4}), 8).missing.empty());
    }
    SECTION("short form misses the top of the window") {
        CHECK(check_coverage(Form(12, {1, 1, 2}), 8).missing ==
              std::vector<i64>{5, 6, 7, 8});
    }
    SECTION("generalized triangular numbers") {
        CHECK(check_coverage(Form(3, {1}), 10).missing ==
              std::vector<i64>{2, 4, 5, 7, 8, 9});
    }
    SECTION("matches per-value search on random forms") {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 40; ++trial) {
            const i64 m = 5 + static_cast<i64>(rng() % 12);
            std::vector<i64> coeffs;
            const int rank = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < rank; ++i) coeffs.push_back(1 + static_cast<i64>(rng() % 4));
            const Form form(m, coeffs);
            const auto report = check_coverage(form, 60);
            for (i64 n = 1; n <= 60; ++n) {
                const bool missing = std::binary_search(report.missing.begin(),
                                                        report.missing.end(), n);
                CAPTURE(form.name(), n);
                REQUIRE(missing == !represents(form, n).has_value());
            }
        }
    }
}

TEST_CASE("first_gap") {
    CHECK(first_gap(Form(12, {1}), 100) == 2);
    CHECK(first_gap(Form(12, {1, 1, 2}), 100) == 5);
    CHECK_FALSE(first_gap(Form(12, {1, 1, 2, 3, 4}), 100000).has_value());
}

TEST_CASE("attainable_values includes zero and every represented value") {
    const auto vals = attainable_values(Form(12, {1, 1}), 25);
    CHECK(vals == std::vector<i64>{0, 1, 2, 9, 10, 12, 13, 18, 21, 24});
}

TEST_CASE("coverage guards") {
    CHECK_THROWS_AS(check_coverage(Form(12, {1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(check_coverage(Form(12, {1}), detail::max_coverage_span + 1),
                    overflow_error);
}
