#include <doctest.h>

#include "padic.hpp"

using namespace catalan;

TEST_CASE("order of zero is infinite") {
    CHECK(ord(Int(3), Rat(0)).is_infinite());
    CHECK(ord(Int(2), Int(0)).is_infinite());
}

TEST_CASE("order of integers and rationals") {
    CHECK(ord(Int(2), Int(12)) == PadicOrder::finite(2));
    CHECK(ord(Int(5), make_rat(7, 50)) == PadicOrder::finite(-2));
    CHECK(ord(Int(3), make_rat(9, 2)) == PadicOrder::finite(2));
    CHECK(ord(Int(7), Int(1)) == PadicOrder::finite(0));
}

TEST_CASE("order rejects composite p") {
    CHECK_THROWS_AS(ord(Int(6), Rat(3)), rejected_input);
    CHECK_THROWS_AS(ord(Int(1), Rat(3)), rejected_input);
}

TEST_CASE("infinite order absorbs and dominates") {
    PadicOrder inf = PadicOrder::infinity();
    PadicOrder two = PadicOrder::finite(2);
    CHECK((inf + two).is_infinite());
    CHECK(two < inf);
    CHECK_FALSE(inf < two);
    CHECK(PadicOrder::min(inf, two) == two);
}

TEST_CASE("factorial valuation") {
    CHECK(ord_factorial(Int(7), 6) == 0);
    CHECK(ord_factorial(Int(2), 4) == 3);
    CHECK(ord_factorial(Int(3), 9) == 4);
    // against a directly factored factorial
    Int fact(1);
    for (unsigned long i = 1; i <= 30; ++i) fact *= i;
    CHECK(ord(Int(3), fact) == PadicOrder::finite(ord_factorial(Int(3), 30)));
}

TEST_CASE("progression product valuation") {
    CHECK(ord_progression_product(Int(1), Int(1), 6, Int(7)) == 0);
    CHECK(ord_progression_product(Int(2), Int(3), 4, Int(5)) == 1); // 2*5*8*11 = 880
    CHECK(ord_progression_product(Int(1), Int(1), 9, Int(3)) == 4);
    CHECK_THROWS_AS(ord_progression_product(Int(1), Int(5), 3, Int(5)), rejected_input);
    CHECK_THROWS_AS(ord_progression_product(Int(-2), Int(1), 5, Int(3)), rejected_input);
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(rational_binomial(make_rat(9, 4), 0) == Rat(1));
    CHECK(rational_binomial(make_rat(5, 3), 2) == make_rat(5, 9));
    CHECK(rational_binomial(make_rat(7, 5), 3) == make_rat(-7, 125));
    CHECK(rational_binomial(Rat(4), 2) == Rat(6)); // integer case agrees with C(4,2)
}

TEST_CASE("dominant term criterion") {
    CHECK(dominant_term_nonzero({make_rat(1, 2), make_rat(1, 4)}, Int(2)));
    CHECK_FALSE(dominant_term_nonzero({Rat(1), Rat(1)}, Int(2)));
    CHECK(dominant_term_nonzero({Rat(4), Rat(2), Rat(1)}, Int(2)));
    CHECK_THROWS_AS(dominant_term_nonzero({Rat(1)}, Int(2)), rejected_input);
}
