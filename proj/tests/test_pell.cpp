#include <doctest.h>

#include "pell.hpp"

using namespace catalan;

namespace {

// Brute-force oracle: scan y and keep exact squares. Word-size arithmetic is
// enough below 2^31.
std::vector<std::pair<uint64_t, uint64_t>> brute_pell(uint64_t d, uint64_t x_bound) {
    std::vector<std::pair<uint64_t, uint64_t>> out{{1, 0}};
    for (uint64_t y = 1;; ++y) {
        Int t = Int(static_cast<unsigned long>(d)) * y * y + 1;
        if (t > Int(static_cast<unsigned long>(x_bound)) * x_bound) break;
        Int x;
        if (is_square(t, &x)) out.emplace_back(x.get_ui(), y);
    }
    return out;
}

} // namespace

TEST_CASE("minimal solutions") {
    CHECK(pell_minimal(3).x == 2);
    CHECK(pell_minimal(3).y == 1);
    CHECK(pell_minimal(2).x == 3);
    CHECK(pell_minimal(2).y == 2);
    CHECK(pell_minimal(5).x == 9);
    CHECK(pell_minimal(5).y == 4);
    CHECK(pell_minimal(61).x == Int("1766319049"));
    CHECK(pell_minimal(61).y == Int("226153980"));
}

TEST_CASE("degenerate d rejected") {
    CHECK_THROWS_AS(pell_minimal(4), rejected_input);
    CHECK_THROWS_AS(pell_minimal(1), rejected_input);
    CHECK_THROWS_AS(pell_minimal(0), rejected_input);
    CHECK_THROWS_AS(pell_minimal(49), rejected_input);
}

TEST_CASE("power family for d = 3") {
    CHECK(pell_nth(3, 0).x == 1);
    CHECK(pell_nth(3, 0).y == 0);
    CHECK(pell_nth(3, 2).x == 7);
    CHECK(pell_nth(3, 2).y == 4);
    CHECK(pell_nth(3, 3).x == 26);
    CHECK(pell_nth(3, 3).y == 15);
}

TEST_CASE("enumeration against the brute-force oracle") {
    for (uint64_t d : {2ull, 3ull, 5ull, 6ull, 7ull, 8ull, 10ull}) {
        auto got = pell_enumerate(d, Int(1000000));
        auto want = brute_pell(d, 1000000);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].x == want[i].first);
            CHECK(got[i].y == want[i].second);
            CHECK(got[i].index == i);
        }
    }
}

TEST_CASE("enumeration bounds") {
    auto sols = pell_enumerate(3, Int(30));
    REQUIRE(sols.size() == 4);
    CHECK(sols[3].x == 26);
    auto tiny = pell_enumerate(3, Int(1));
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].x == 1);
    auto d2 = pell_enumerate(2, Int(20));
    REQUIRE(d2.size() == 3);
    CHECK(d2[2].x == 17);
    CHECK(d2[2].y == 12);
}

TEST_CASE("doubling identities for d = 3") {
    CHECK(sqrt3_identity_check(0).pass);
    CHECK(sqrt3_identity_check(1).pass);
    CHECK(sqrt3_identity_check(25).pass);
}
