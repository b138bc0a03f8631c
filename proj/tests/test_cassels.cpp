#include <doctest.h>

#include "cassels.hpp"
#include "series_oracle.hpp"

using namespace catalan;

TEST_CASE("gcd of split factors") {
    CHECK(gcd_quotient(Int(2), Int(1), Int(7)) == 1);
    CHECK(gcd_quotient(Int(4), Int(1), Int(3)) == 3);
    CHECK(gcd_quotient(Int(3), Int(1), Int(5)) == 1);
    CHECK_THROWS_AS(gcd_quotient(Int(2), Int(2), Int(3)), rejected_input);
    CHECK_THROWS_AS(gcd_quotient(Int(4), Int(2), Int(3)), rejected_input);
    CHECK_THROWS_AS(gcd_quotient(Int(4), Int(1), Int(6)), rejected_input);
}

TEST_CASE("decomposition at the only nonzero instance") {
    CheinDecomposition d = chein_decompose(Int(3), Int(2), 3);
    CHECK(d.sign == -1);
    CHECK(d.a == -1);
    CHECK(d.b == -1);
    CheinDecomposition d2 = chein_decompose(Int(-3), Int(2), 3);
    CHECK(d2.sign == 1);
    CHECK(d2.a == -1);
    CHECK(d2.b == -1);
    CHECK_THROWS_AS(chein_decompose(Int(1), Int(0), 3), rejected_input);
    CHECK_THROWS_AS(chein_decompose(Int(3), Int(2), 4), rejected_input);
    CHECK_THROWS_AS(chein_decompose(Int(5), Int(2), 3), rejected_input);
}

TEST_CASE("congruence replay reaches x = +-3 (mod q)") {
    std::vector<std::string> lines = chein_congruence_replay(Int(3), Int(2), 3);
    bool reached = false;
    for (const std::string& l : lines)
        if (l.find("x = 3 (mod q)") != std::string::npos) reached = true;
    CHECK(reached);
}

TEST_CASE("taylor coefficients") {
    FmnCoefficients a = fmn_coefficients(5, 3, 0);
    REQUIRE(a.coeff.size() == 1);
    CHECK(a.coeff[0] == Rat(1));

    FmnCoefficients b = fmn_coefficients(5, 3, 2);
    CHECK(b.coeff == std::vector<Rat>{Rat(1), make_rat(5, 3), make_rat(5, 9)});

    FmnCoefficients c = fmn_coefficients(7, 3, 1);
    CHECK(c.coeff == std::vector<Rat>{Rat(1), make_rat(7, 3)});

    CHECK_THROWS_AS(fmn_coefficients(5, 2, 1), rejected_input);
    CHECK_THROWS_AS(fmn_coefficients(5, 3, 5), rejected_input);
}

TEST_CASE("taylor coefficients equal the series-root oracle") {
    for (unsigned m = 1; m <= 11; ++m) {
        for (unsigned n = 1; n <= 7; n += 2) {
            unsigned l = std::min(8u, m - 1);
            FmnCoefficients got = fmn_coefficients(m, n, l);
            auto oracle = series::nth_root(series::one_plus_x_pow_minus_x_pow(m, l), n, l);
            CHECK(got.coeff == oracle);
        }
    }
}

TEST_CASE("series utilities") {
    // (1+X)^3 - X^3 = 1 + 3X + 3X^2
    auto h = series::one_plus_x_pow_minus_x_pow(3, 3);
    CHECK(h == std::vector<Rat>{Rat(1), Rat(3), Rat(3), Rat(0)});
    // cube root of (1+X)^3 truncated: exactly 1 + X
    std::vector<Rat> cube{Rat(1), Rat(3), Rat(3), Rat(1)};
    auto g = series::nth_root(cube, 3, 3);
    CHECK(g == std::vector<Rat>{Rat(1), Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("monotonicity probe") {
    CHECK(monotonicity_probe(Rat(2), MonotoneKind::plus_one, {Rat(1), Rat(2), Rat(3)}));
    CHECK(monotonicity_probe(Rat(2), MonotoneKind::minus_one, {Rat(1), Rat(2), Rat(3)}));
    CHECK(monotonicity_probe(Rat(1), MonotoneKind::plus_one, {Rat(1), Rat(2)}));
    CHECK(monotonicity_probe(make_rat(5, 2), MonotoneKind::minus_one,
                             {make_rat(1, 2), Rat(1), Rat(2)}));
    CHECK_THROWS_AS(monotonicity_probe(Rat(1), MonotoneKind::minus_one, {Rat(1), Rat(2)}),
                    rejected_input);
    CHECK_THROWS_AS(monotonicity_probe(Rat(2), MonotoneKind::plus_one, {Rat(2), Rat(1)}),
                    rejected_input);
    CHECK_THROWS_AS(
        monotonicity_probe(Rat(2), MonotoneKind::plus_one, {Rat(-1), Rat(1)}),
        rejected_input);
}

TEST_CASE("inseparable samples are reported, not guessed") {
    // adjacent sample points 2^-5000 apart cannot be told apart at the
    // maximum working precision
    Int big = pow_int(Int(2), 5000);
    Rat x1(1);
    Rat x2 = make_rat(big + 1, big);
    CHECK_THROWS_AS(monotonicity_probe(Rat(2), MonotoneKind::plus_one, {x1, x2}),
                    precision_error);
}

TEST_CASE("exponent-pair scans stay empty and checked") {
    SolutionReport a = catalan_pq_search(5, 3, Int(500), 1);
    CHECK(a.solutions().empty());
    SolutionReport b = catalan_pq_search(7, 3, Int(500), 2);
    CHECK(b.solutions().empty());
    SolutionReport c = catalan_pq_search(7, 5, Int(100), 1);
    CHECK(c.solutions().empty());
    CHECK_THROWS_AS(catalan_pq_search(3, 5, Int(10), 1), rejected_input);
    CHECK_THROWS_AS(catalan_pq_search(9, 5, Int(10), 1), rejected_input);
}

TEST_CASE("square-exponent scans") {
    SolutionReport a = chao_ko_search(5, Int(10000));
    CHECK(a.solutions_equal(chao_ko_known_solutions()));
    SolutionReport b = lebesgue_search(3, Int(1000));
    CHECK(b.solutions_equal(lebesgue_known_solutions()));
    CHECK_THROWS_AS(chao_ko_search(4, Int(100)), rejected_input);
    CHECK_THROWS_AS(lebesgue_search(4, Int(100)), rejected_input);
}

TEST_CASE("scaled expansion divisibility pattern") {
    DzReport r = cassels_dz_check(7, 5, Int(2));
    CHECK(r.m == 2);
    CHECK(r.pattern_holds);
    REQUIRE(r.summands.size() == 3);
    CHECK(r.summands[0].divisible_by_q);
    CHECK(r.summands[1].divisible_by_q);
    CHECK_FALSE(r.summands[2].divisible_by_q);
    CHECK_THROWS_AS(cassels_dz_check(7, 5, Int(1)), rejected_input);
}
