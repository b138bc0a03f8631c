#pragma once

#include "domain.hpp"

namespace catalan {

// The rational integers as a Euclidean domain. Canonical associates are the
// positive elements; factoring uses trial division below 10^6 and Pollard's
// rho (Brent variant, fixed parameters) above.
struct IntDomain {
    using Element = Int;

    static std::string name() { return "Z"; }
    static Element zero() { return Int(0); }
    static Element one() { return Int(1); }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element negate(const Element& a) { return -a; }
    static Element mul(const Element& a, const Element& b) { return a * b; }

    static std::pair<Element, Element> divrem(const Element& a, const Element& b) {
        require(b != 0, "division by zero in Z");
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {std::move(q), std::move(r)};
    }

    static bool is_zero(const Element& a) { return a == 0; }
    static bool is_unit(const Element& a) { return a == 1 || a == -1; }
    static bool equal(const Element& a, const Element& b) { return a == b; }
    static bool less(const Element& a, const Element& b) { return a < b; }
    static Element canonical_associate(const Element& a) { return abs(a); }

    static std::vector<Element> factor(const Element& a);

    static std::optional<Element> unit_nth_root(const Element& u, unsigned long k) {
        require(is_unit(u), "unit root of a non-unit");
        if (u == 1) return Int(1);
        if (k % 2 == 1) return Int(-1);
        return std::nullopt;
    }

    static std::string to_string(const Element& a) { return a.get_str(); }
};

// Factors |n| > 1 into primes with repetition.
std::vector<Int> factor_natural(Int n);

} // namespace catalan
