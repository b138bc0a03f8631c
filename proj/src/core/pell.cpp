#include "pell.hpp"

namespace catalan {

namespace {

PellSolution checked(uint64_t d, Int x, Int y, unsigned long index) {
    verify(x * x - Int(static_cast<unsigned long>(d)) * y * y == 1,
           "pell solution failed x^2 - d y^2 = 1");
    verify((index == 0) == (x == 1 && y == 0), "index 0 must be exactly (1, 0)");
    return PellSolution{std::move(x), std::move(y), index};
}

} // namespace

void validate_pell_d(uint64_t d) {
    require(d >= 2, "d must be at least 2");
    Int root;
    require(!is_square(Int(static_cast<unsigned long>(d)), &root),
            "d = " + std::to_string(d) + " is a perfect square");
}

PellSolution pell_minimal(uint64_t d) {
    validate_pell_d(d);
    Int D(static_cast<unsigned long>(d));
    Int a0 = isqrt_floor(D);

    // Convergents of the continued fraction of sqrt(d); the first one with
    // p^2 - d q^2 = 1 is the minimal solution.
    Int m = 0, den = 1, a = a0;
    Int p_prev = 1, p = a0, q_prev = 0, q = 1;
    for (;;) {
        if (p * p - D * q * q == 1) return checked(d, p, q, 1);
        m = den * a - m;
        den = (D - m * m) / den;
        a = (a0 + m) / den;
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
}

PellSolution pell_combine(uint64_t d, const PellSolution& s, const PellSolution& t) {
    Int D(static_cast<unsigned long>(d));
    Int x = s.x * t.x + D * s.y * t.y;
    Int y = s.x * t.y + t.x * s.y;
    return checked(d, std::move(x), std::move(y), s.index + t.index);
}

PellSolution pell_nth(uint64_t d, unsigned long n) {
    validate_pell_d(d);
    PellSolution acc = checked(d, 1, 0, 0);
    PellSolution base = pell_minimal(d);
    unsigned long e = n;
    while (e > 0) {
        if (e & 1) acc = pell_combine(d, acc, base);
        e >>= 1;
        if (e > 0) base = pell_combine(d, base, base);
    }
    verify(acc.index == n, "index bookkeeping broke in pell_nth");
    return acc;
}

std::vector<PellSolution> pell_enumerate(uint64_t d, const Int& x_bound) {
    validate_pell_d(d);
    std::vector<PellSolution> out;
    PellSolution s = checked(d, 1, 0, 0);
    PellSolution fundamental = pell_minimal(d);
    while (s.x <= x_bound) {
        out.push_back(s);
        s = pell_combine(d, s, fundamental);
    }
    return out;
}

Sqrt3IdentityReport sqrt3_identity_check(unsigned long n) {
    Sqrt3IdentityReport rep;
    rep.n = n;
    auto fail = [&](const std::string& what) {
        rep.pass = false;
        rep.violation = what;
        return rep;
    };

    PellSolution sn = pell_nth(3, n);
    PellSolution sn1 = pell_nth(3, n + 1);
    PellSolution s2n = pell_nth(3, 2 * n);
    PellSolution s2n1 = pell_nth(3, 2 * n + 1);

    if (s2n.x != 2 * sn.x * sn.x - 1) return fail("x_{2n} = 2 x_n^2 - 1");
    if (s2n.y != 2 * sn.x * sn.y) return fail("y_{2n} = 2 x_n y_n");
    Int ysum = sn.y + sn1.y;
    if (s2n1.x != ysum * ysum + 1) return fail("x_{2n+1} = (y_n + y_{n+1})^2 + 1");
    if (s2n1.y != 2 * sn.x * sn1.y - 1) return fail("y_{2n+1} = 2 x_n y_{n+1} - 1");
    if (sn1.x != 2 * sn.x + 3 * sn.y) return fail("x_{n+1} = 2 x_n + 3 y_n");
    if (sn1.y != sn.x + 2 * sn.y) return fail("y_{n+1} = x_n + 2 y_n");

    bool xn_odd = mpz_odd_p(sn.x.get_mpz_t()) != 0;
    if (xn_odd != (n % 2 == 0)) return fail("x_n odd iff n even");
    bool xn1_odd = mpz_odd_p(sn1.x.get_mpz_t()) != 0;
    if (xn1_odd != ((n + 1) % 2 == 0)) return fail("x_{n+1} odd iff n+1 even");
    bool yn_odd = mpz_odd_p(sn.y.get_mpz_t()) != 0;
    if (xn_odd == yn_odd) return fail("x_n and y_n have different parity");

    return rep;
}

} // namespace catalan
