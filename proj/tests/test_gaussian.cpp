#include <doctest.h>

#include "gaussian.hpp"

using namespace catalan;

TEST_CASE("norms") {
    CHECK(norm(GaussianInt(0, 0)) == 0);
    CHECK(norm(GaussianInt(0, 1)) == 1);
    CHECK(norm(GaussianInt(1, 2)) == 5);
}

TEST_CASE("division with small remainder") {
    auto [q1, r1] = gaussian_divrem(GaussianInt(41, -7), GaussianInt(1, 0));
    CHECK(q1 == GaussianInt(41, -7));
    CHECK(r1 == GaussianInt(0, 0));

    auto [q2, r2] = gaussian_divrem(GaussianInt(7, 2), GaussianInt(2, -1));
    CHECK(q2 == GaussianInt(2, 2));
    CHECK(r2 == GaussianInt(1, 0));

    auto [q3, r3] = gaussian_divrem(GaussianInt(5, 0), GaussianInt(2, 1));
    CHECK(q3 == GaussianInt(2, -1));
    CHECK(r3 == GaussianInt(0, 0));

    CHECK_THROWS_AS(gaussian_divrem(GaussianInt(1, 1), GaussianInt(0, 0)), rejected_input);
}

TEST_CASE("gcds") {
    CHECK(gaussian_gcd(GaussianInt(1, 4), GaussianInt(1, -4)) == GaussianInt(1, 0));
    CHECK(gaussian_gcd(GaussianInt(-3, 4), GaussianInt(0, 0)) ==
          GaussianDomain::canonical_associate(GaussianInt(-3, 4)));
    GaussianInt g = gaussian_gcd(GaussianInt(6, 0), GaussianInt(4, 2));
    CHECK(norm(g) == 4); // associate of 2
    CHECK_THROWS_AS(gaussian_gcd(GaussianInt(0, 0), GaussianInt(0, 0)), rejected_input);
}

TEST_CASE("units") {
    CHECK(gaussian_units().size() == 4);
    CHECK(is_gaussian_unit(GaussianInt(0, 1)));
    CHECK(is_gaussian_unit(GaussianInt(-1, 0)));
    CHECK_FALSE(is_gaussian_unit(GaussianInt(1, 1)));
}

TEST_CASE("quadratic-irrational powers with coordinate reduction") {
    // (u + sqrt(y))^1 mod y
    QuadInt base = make_quad(Int(4), Int(1), 15);
    QuadInt p1 = quad_pow_mod(base, Int(1), Int(15));
    CHECK(p1.a == 4);
    CHECK(p1.b == 1);

    QuadInt p2 = quad_pow_mod(base, Int(2), Int(15));
    CHECK(p2.a == 1); // 31 mod 15
    CHECK(p2.b == 8);

    QuadInt cube = quad_pow_mod(make_quad(Int(2), Int(1), 3), Int(3), Int(5));
    CHECK(cube.a == 1); // 26 mod 5
    CHECK(cube.b == 0); // 15 mod 5
}

TEST_CASE("binomial congruence of quadratic powers") {
    // (u + sqrt(y))^m = u^m + m u^{m-1} sqrt(y) (mod y)
    Rng rng(55);
    for (int i = 0; i < 200; ++i) {
        Int u = rng.next_range(Int(1), Int(50));
        uint64_t y = 2 + rng.next_range(Int(0), Int(60)).get_ui();
        if (is_square(Int(static_cast<unsigned long>(y)))) continue;
        unsigned long m = 1 + rng.next_range(Int(0), Int(20)).get_ui();
        Int mod(static_cast<unsigned long>(y));
        QuadInt got = quad_pow_mod(make_quad(u, Int(1), y), Int(m), mod);
        Int a_want = powmod(u, Int(m), mod);
        Int b_want = (Int(m) * powmod(u, Int(m - 1), mod)) % mod;
        CHECK(got.a == a_want);
        CHECK(got.b == b_want);
    }
}

TEST_CASE("distinct radicands never mix") {
    QuadInt a = make_quad(Int(1), Int(1), 2);
    QuadInt b = make_quad(Int(1), Int(1), 3);
    CHECK_THROWS_AS(quad_mul(a, b), rejected_input);
    CHECK_THROWS_AS(make_quad(Int(1), Int(1), 9), rejected_input);
    CHECK_THROWS_AS(make_quad(Int(1), Int(1), 1), rejected_input);
}

TEST_CASE("division bound on random pairs") {
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        GaussianInt z(rng.next_range(Int(-1000000), Int(1000000)),
                      rng.next_range(Int(-1000000), Int(1000000)));
        GaussianInt w(rng.next_range(Int(-1000000), Int(1000000)),
                      rng.next_range(Int(-1000000), Int(1000000)));
        if (w == GaussianInt(0, 0)) continue;
        auto [q, r] = gaussian_divrem(z, w);
        CHECK(z == w * q + r);
        CHECK(2 * norm(r) <= norm(w));
    }
}

TEST_CASE("norm multiplicativity on random pairs") {
    Rng rng(100);
    for (int i = 0; i < 10000; ++i) {
        GaussianInt a(rng.next_range(Int(-100000), Int(100000)),
                      rng.next_range(Int(-100000), Int(100000)));
        GaussianInt b(rng.next_range(Int(-100000), Int(100000)),
                      rng.next_range(Int(-100000), Int(100000)));
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}
