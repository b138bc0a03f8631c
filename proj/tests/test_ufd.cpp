#include <doctest.h>

#include "domain.hpp"
#include "gaussian.hpp"
#include "int_domain.hpp"

using namespace catalan;

TEST_CASE("factorization over Z") {
    Factorization<IntDomain> f = factorize<IntDomain>(Int(-12));
    CHECK(f.unit == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors.at(Int(2)) == 2);
    CHECK(f.factors.at(Int(3)) == 1);
    CHECK(reconstruct<IntDomain>(f) == -12);
    CHECK_THROWS_AS(factorize<IntDomain>(Int(0)), rejected_input);
}

TEST_CASE("factorization of units") {
    Factorization<GaussianDomain> f = factorize<GaussianDomain>(GaussianInt(0, 1));
    CHECK(f.factors.empty());
    CHECK(f.unit == GaussianInt(0, 1));
}

TEST_CASE("factorization of 5 in Z[i]") {
    Factorization<GaussianDomain> f = factorize<GaussianDomain>(GaussianInt(5, 0));
    REQUIRE(f.factors.size() == 2);
    for (const auto& [irr, mult] : f.factors) {
        CHECK(norm(irr) == 5);
        CHECK(mult == 1);
    }
    CHECK(reconstruct<GaussianDomain>(f) == GaussianInt(5, 0));
}

TEST_CASE("divisibility of factorizations") {
    auto f6 = factorize<IntDomain>(Int(6));
    auto f12 = factorize<IntDomain>(Int(12));
    auto f4 = factorize<IntDomain>(Int(4));
    CHECK(divides(f6, f12));
    CHECK(divides(f6, f6));
    CHECK_FALSE(divides(f4, f6));
}

TEST_CASE("gcd on factorizations") {
    auto g = gcd_fact(factorize<IntDomain>(Int(12)), factorize<IntDomain>(Int(18)));
    CHECK(reconstruct<IntDomain>(g) == 6);
    auto same = gcd_fact(factorize<IntDomain>(Int(-15)), factorize<IntDomain>(Int(-15)));
    CHECK(reconstruct<IntDomain>(same) == 15); // canonical associate
    auto cop = gcd_fact(factorize<IntDomain>(Int(8)), factorize<IntDomain>(Int(9)));
    CHECK(cop.factors.empty());
    CHECK(reconstruct<IntDomain>(cop) == 1);
}

TEST_CASE("coprime power extraction") {
    CHECK(pp1_extract<IntDomain>({Int(4), Int(9)}, 2) == std::vector<Int>{Int(2), Int(3)});
    CHECK(pp1_extract<IntDomain>({Int(1)}, 5) == std::vector<Int>{Int(1)});
    CHECK(pp1_extract<IntDomain>({Int(-8), Int(27)}, 3) ==
          std::vector<Int>{Int(-2), Int(3)});
    CHECK_THROWS_AS(pp1_extract<IntDomain>({Int(4), Int(3)}, 2), rejected_input);
    CHECK_THROWS_AS(pp1_extract<IntDomain>({Int(4), Int(2)}, 2), rejected_input);
}

TEST_CASE("power extraction with a zero part") {
    auto roots = pp1_extract<IntDomain>({Int(0), Int(-1)}, 3);
    CHECK(roots == std::vector<Int>{Int(0), Int(-1)});
    CHECK_THROWS_AS(pp1_extract<IntDomain>({Int(0), Int(0)}, 2), rejected_input);
}

TEST_CASE("gcd-p power extraction") {
    Pp2Result<IntDomain> r1 = pp2_extract<IntDomain>(Int(2), Int(4), Int(2), 3);
    CHECK(r1.d == 1);
    CHECK(r1.e == 1);
    CHECK(r1.a_carries_single_p);

    Pp2Result<IntDomain> r2 = pp2_extract<IntDomain>(Int(3), Int(27), Int(3), 2);
    CHECK(r2.d == 1);
    CHECK(r2.e == 3);
    CHECK(r2.a_carries_single_p);

    // zero branch: 0 = p^{k-1} 0^k and p = p 1^k
    Pp2Result<IntDomain> r3 = pp2_extract<IntDomain>(Int(0), Int(5), Int(5), 4);
    CHECK(r3.d == 1);
    CHECK(r3.e == 0);
    CHECK_FALSE(r3.a_carries_single_p);

    CHECK_THROWS_AS(pp2_extract<IntDomain>(Int(4), Int(8), Int(2), 2), rejected_input);
    CHECK_THROWS_AS(pp2_extract<IntDomain>(Int(2), Int(4), Int(2), 2), rejected_input);
}

TEST_CASE("factorization divisibility matches element divisibility") {
    Rng rng(314159);
    for (int i = 0; i < 1000; ++i) {
        Int a = rng.next_nonzero(Int(50000));
        Int b = rng.next_nonzero(Int(50000));
        if (i % 4 == 0) b = a * rng.next_nonzero(Int(50)); // force some divisors
        bool via_fact = divides(factorize<IntDomain>(a), factorize<IntDomain>(b));
        bool via_divrem = divides_elem<IntDomain>(a, b);
        CHECK(via_fact == via_divrem);
    }
    Rng grng(265358);
    for (int i = 0; i < 200; ++i) {
        GaussianInt a(grng.next_range(Int(-40), Int(40)),
                      grng.next_range(Int(-40), Int(40)));
        GaussianInt b(grng.next_range(Int(-40), Int(40)),
                      grng.next_range(Int(-40), Int(40)));
        if (a == GaussianInt(0, 0) || b == GaussianInt(0, 0)) continue;
        if (i % 4 == 0) b = a * b;
        bool via_fact = divides(factorize<GaussianDomain>(a), factorize<GaussianDomain>(b));
        bool via_divrem = divides_elem<GaussianDomain>(a, b);
        CHECK(via_fact == via_divrem);
    }
}

TEST_CASE("bachet certificates") {
    auto [c1, d1] = bachet<IntDomain>(Int(3), Int(5));
    CHECK(c1 == 2);
    CHECK(d1 == -1);
    auto [c2, d2] = bachet<IntDomain>(Int(1), Int(7));
    CHECK(c2 == 1);
    CHECK(d2 == 0);
    auto [c3, d3] = bachet<GaussianDomain>(GaussianInt(2, 1), GaussianInt(2, -1));
    CHECK(GaussianInt(2, 1) * c3 + GaussianInt(2, -1) * d3 == GaussianInt(1, 0));
    CHECK_THROWS_AS(bachet<IntDomain>(Int(4), Int(6)), rejected_input);
    CHECK_THROWS_AS(bachet<IntDomain>(Int(0), Int(0)), rejected_input);
}

TEST_CASE("canonical associates in Z[i]") {
    CHECK(GaussianDomain::canonical_associate(GaussianInt(0, 1)) == GaussianInt(1, 0));
    CHECK(GaussianDomain::canonical_associate(GaussianInt(-2, 0)) == GaussianInt(2, 0));
    CHECK(GaussianDomain::canonical_associate(GaussianInt(-1, 1)) == GaussianInt(1, 1));
    CHECK(GaussianDomain::canonical_associate(GaussianInt(0, 0)) == GaussianInt(0, 0));
}

TEST_CASE("unit roots") {
    CHECK(IntDomain::unit_nth_root(Int(-1), 3) == Int(-1));
    CHECK_FALSE(IntDomain::unit_nth_root(Int(-1), 2).has_value());
    auto v = GaussianDomain::unit_nth_root(GaussianInt(0, 1), 5);
    REQUIRE(v.has_value());
    CHECK(pow_elem<GaussianDomain>(*v, 5) == GaussianInt(0, 1));
}
