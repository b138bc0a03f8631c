#include <doctest.h>

#include "cyclotomic.hpp"
#include "groupring.hpp"

using namespace catalan;

TEST_CASE("group ring identity and small products") {
    FiniteAbelianGroup c2({2});
    GroupRingElement one = GroupRingElement::one(c2);
    GroupRingElement f(c2);
    f.add_term({0}, 3);
    f.add_term({1}, -2);
    CHECK(gr_mul(one, f) == f);

    // (1 + g)^2 = 2 + 2g in Z[C2]
    GroupRingElement e(c2);
    e.add_term({0}, 1);
    e.add_term({1}, 1);
    GroupRingElement sq = gr_mul(e, e);
    CHECK(sq.coefficient({0}) == 2);
    CHECK(sq.coefficient({1}) == 2);
}

TEST_CASE("telescoping product in Z[C3]") {
    FiniteAbelianGroup c3({3});
    GroupRingElement all(c3);
    all.add_term({0}, 1);
    all.add_term({1}, 1);
    all.add_term({2}, 1);
    GroupRingElement diff(c3);
    diff.add_term({0}, 1);
    diff.add_term({1}, -1);
    CHECK(gr_mul(all, diff).is_zero());
}

TEST_CASE("group mismatch is rejected") {
    FiniteAbelianGroup c2({2}), c3({3});
    CHECK_THROWS_AS(gr_add(GroupRingElement::one(c2), GroupRingElement::one(c3)),
                    rejected_input);
    GroupRingElement x(c2);
    CHECK_THROWS_AS(x.add_term({2}, 1), rejected_input);
}

TEST_CASE("zero coefficients are pruned") {
    FiniteAbelianGroup c2({2});
    GroupRingElement x(c2);
    x.add_term({1}, 5);
    x.add_term({1}, -5);
    CHECK(x.is_zero());
    CHECK(x.coefficients().empty());
}

TEST_CASE("cyclotomic multiplication at p = 3") {
    CyclotomicInt one = CyclotomicInt::integer(3, Int(1));
    CyclotomicInt z = CyclotomicInt::zeta(3);
    CyclotomicInt x(3, {Int(4), Int(-1)});
    CHECK(cyc_mul(x, one) == x);

    // (1 + z)(1 + z^2) = 1 since z^2 = -1 - z
    CyclotomicInt a = cyc_add(one, z);
    CyclotomicInt z2 = cyc_mul(z, z);
    CyclotomicInt b = cyc_add(one, z2);
    CHECK(cyc_mul(a, b) == one);

    // (1 - z)(1 - z^2) = 3
    CyclotomicInt c = cyc_sub(one, z);
    CyclotomicInt d = cyc_sub(one, z2);
    CHECK(cyc_mul(c, d) == CyclotomicInt::integer(3, Int(3)));
}

TEST_CASE("cyclotomic norms") {
    CHECK(cyc_norm(CyclotomicInt::integer(3, Int(1))) == 1);
    CyclotomicInt one_minus_zeta(3, {Int(1), Int(-1)});
    CHECK(cyc_norm(one_minus_zeta) == 3);
    CHECK(cyc_norm(CyclotomicInt::integer(3, Int(2))) == 4);
    CHECK(cyc_norm(CyclotomicInt::integer(5, Int(2))) == 16);
    CHECK(cyc_norm(CyclotomicInt(5, {Int(0), Int(0), Int(0), Int(0)})) == 0);
}

TEST_CASE("p mismatch and bad p are rejected") {
    CHECK_THROWS_AS(cyc_add(CyclotomicInt(3), CyclotomicInt(5)), rejected_input);
    CHECK_THROWS_AS(CyclotomicInt(7), rejected_input);
}

TEST_CASE("cyclotomic division basics") {
    CyclotomicInt z(3, {Int(41), Int(-17)});
    CycDivRem qr = cyc_divrem(z, CyclotomicInt::integer(3, Int(1)));
    CHECK(qr.quotient == z);
    CHECK(qr.remainder.is_zero());

    // 3 = (1 - z)(1 - z^2): exact divisibility
    CyclotomicInt three = CyclotomicInt::integer(3, Int(3));
    CyclotomicInt omz(3, {Int(1), Int(-1)});
    CycDivRem qr2 = cyc_divrem(three, omz);
    CHECK(qr2.remainder.is_zero());
    CHECK(cyc_mul(omz, qr2.quotient) == three);

    CHECK_THROWS_AS(cyc_divrem(three, CyclotomicInt(3)), rejected_input);
}

TEST_CASE("cyclotomic division bound on random pairs, both fields") {
    Rng rng(4242);
    for (unsigned p : {3u, 5u}) {
        for (int i = 0; i < 500; ++i) {
            std::vector<Int> zc, wc;
            for (unsigned k = 0; k + 1 < p; ++k) {
                zc.push_back(rng.next_range(Int(-5000), Int(5000)));
                wc.push_back(rng.next_range(Int(-40), Int(40)));
            }
            CyclotomicInt z(p, zc), w(p, wc);
            if (w.is_zero()) continue;
            CycDivRem qr = cyc_divrem(z, w);
            CHECK(cyc_add(cyc_mul(w, qr.quotient), qr.remainder) == z);
            CHECK(abs(cyc_norm(qr.remainder)) < abs(cyc_norm(w)));
        }
    }
}

TEST_CASE("conjugation fixes the norm") {
    Rng rng(777);
    for (int i = 0; i < 200; ++i) {
        CyclotomicInt x(5, {rng.next_range(Int(-30), Int(30)),
                            rng.next_range(Int(-30), Int(30)),
                            rng.next_range(Int(-30), Int(30)),
                            rng.next_range(Int(-30), Int(30))});
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(cyc_norm(cyc_conjugate(x, k)) == cyc_norm(x));
    }
}
