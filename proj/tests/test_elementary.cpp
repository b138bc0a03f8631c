#include <doctest.h>

#include "diophantine.hpp"

using namespace catalan;

TEST_CASE("pythagorean parametrization") {
    auto [u1, v1] = pythagorean_parametrize(Int(3), Int(4), Int(5));
    CHECK(u1 == 2);
    CHECK(v1 == 1);
    auto [u2, v2] = pythagorean_parametrize(Int(1), Int(0), Int(1));
    CHECK(u2 == 1);
    CHECK(v2 == 0);
    auto [u3, v3] = pythagorean_parametrize(Int(5), Int(12), Int(13));
    CHECK(u3 == 3);
    CHECK(v3 == 2);
    CHECK_THROWS_AS(pythagorean_parametrize(Int(6), Int(8), Int(10)), rejected_input);
    CHECK_THROWS_AS(pythagorean_parametrize(Int(3), Int(4), Int(6)), rejected_input);
}

TEST_CASE("decomposition of 2x^2 - y^2 = 1") {
    auto [a1, b1] = onab_decompose(Int(1), Int(1));
    CHECK(a1 == 1);
    CHECK(b1 == 0);
    auto [a2, b2] = onab_decompose(Int(5), Int(7));
    CHECK(a2 == 3);
    CHECK(b2 == 2);
    auto [a3, b3] = onab_decompose(Int(29), Int(41));
    CHECK(a3 * a3 - 2 * b3 * b3 == 1);
    CHECK((Int(29) == 2 * a3 * a3 - 1 + 2 * a3 * b3 ||
           Int(29) == 2 * a3 * a3 - 1 - 2 * a3 * b3));
    CHECK_THROWS_AS(onab_decompose(Int(2), Int(2)), rejected_input);
}

TEST_CASE("quartic searches find only the trivial pair") {
    for (QuarticKind kind : {QuarticKind::minus_two, QuarticKind::minus_three}) {
        SolutionReport rep = quartic_search(kind, Int(1000));
        CHECK(rep.solutions_equal(quartic_known_solutions()));
    }
    SolutionReport tiny = quartic_search(QuarticKind::minus_three, Int(1));
    CHECK(tiny.solutions_equal(quartic_known_solutions()));
}

TEST_CASE("mordell search matches the classified set") {
    SolutionReport rep = mordell_search(Int(1000));
    CHECK(rep.solutions_equal(mordell_known_solutions()));
    SolutionReport tiny = mordell_search(Int(3));
    CHECK(tiny.solutions_equal(mordell_known_solutions()));
    CHECK_THROWS_AS(mordell_search(Int(2)), rejected_input);
}

TEST_CASE("mordell search against a direct x-scan") {
    std::vector<std::vector<Int>> direct;
    for (long x = -300; x <= 300; ++x) {
        Int y;
        if (exact_root(Int(x) * x - 1, 3, &y)) direct.push_back({Int(x), y});
    }
    SolutionReport rep = mordell_search(Int(300));
    CHECK(rep.solutions_equal(direct));
}

TEST_CASE("classification traces of the five solutions") {
    CHECK(mordell_classify(Int(1), Int(0)).gcd_branch == 1);
    CHECK(mordell_classify(Int(-1), Int(0)).gcd_branch == 1);
    CHECK(mordell_classify(Int(0), Int(-1)).gcd_branch == 3);
    CHECK(mordell_classify(Int(3), Int(2)).gcd_branch == 3);
    CHECK(mordell_classify(Int(-3), Int(2)).gcd_branch == 3);
    CHECK_THROWS_AS(mordell_classify(Int(2), Int(1)), rejected_input);
}

TEST_CASE("descent-target quartic has only the unit solution") {
    SolutionReport rep = conrad_quartic_search(Int(500));
    CHECK(rep.solutions_equal({{Int(1), Int(1), Int(1)}}));
    SolutionReport tiny = conrad_quartic_search(Int(1));
    CHECK(tiny.solutions_equal({{Int(1), Int(1), Int(1)}}));
    SolutionReport pairs = conrad_square_pair_search(Int(500));
    CHECK(pairs.solutions_equal({{Int(1), Int(1)}}));
}

TEST_CASE("cube sum search stays inside the trivial families") {
    SolutionReport rep = wakulicz_search(Int(60));
    CHECK(!rep.solutions().empty());
    for (const auto& t : rep.solutions()) CHECK(wakulicz_trivial_family(t));

    SolutionReport one = wakulicz_search(Int(1));
    std::vector<std::vector<Int>> expected = {{Int(-1), Int(-1), Int(-1)},
                                              {Int(-1), Int(1), Int(0)},
                                              {Int(0), Int(0), Int(0)},
                                              {Int(1), Int(-1), Int(0)},
                                              {Int(1), Int(1), Int(1)}};
    CHECK(one.solutions_equal(expected));
}

TEST_CASE("derived cube pair equation") {
    SolutionReport rep = cube_pair_search(Int(1000));
    CHECK(rep.solutions_equal(cube_pair_known_solutions()));
}

TEST_CASE("consecutive powers up to small bounds") {
    SolutionReport rep = consecutive_power_search(10000, 1);
    CHECK(rep.solutions_equal({{Int(8), Int(9)}}));
    SolutionReport four = consecutive_power_search(4, 1);
    CHECK(four.solutions().empty());
}

TEST_CASE("thread count never changes the power enumeration") {
    SolutionReport base = consecutive_power_search(2000000, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        SolutionReport rep = consecutive_power_search(2000000, threads);
        CHECK(rep.solutions() == base.solutions());
        CHECK(rep.notes().front() == base.notes().front());
    }
}

TEST_CASE("perfect power predicate") {
    CHECK(is_perfect_power(Int(1)));
    CHECK(is_perfect_power(Int(8)));
    CHECK(is_perfect_power(Int(9)));
    CHECK(is_perfect_power(Int(64)));
    CHECK_FALSE(is_perfect_power(Int(2)));
    CHECK_FALSE(is_perfect_power(Int(10)));
    CHECK(power_form(8) == "2^3");
    CHECK(power_form(9) == "3^2");
    CHECK(power_form(64) == "2^6");
}

TEST_CASE("square condition at the rational points") {
    CHECK(euler_square_condition(Rat(0)));
    CHECK(euler_square_condition(Rat(2)));
    CHECK(euler_square_condition(Rat(-1)));
    CHECK_FALSE(euler_square_condition(Rat(3))); // 27 + 1 = 28 is no square
}

TEST_CASE("solution reports reject tuples that fail their equation") {
    SolutionReport rep("x^2 - y^3 = 1", "test",
                       [](const std::vector<Int>& t) {
                           return t[0] * t[0] - t[1] * t[1] * t[1] == 1;
                       });
    rep.add({Int(3), Int(2)});
    CHECK_THROWS_AS(rep.add({Int(3), Int(3)}), verification_error);
}
