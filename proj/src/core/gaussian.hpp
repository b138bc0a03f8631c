#pragma once

#include "domain.hpp"

namespace catalan {

// Gaussian integer a + b i with exact coordinates.
struct GaussianInt {
    Int re;
    Int im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInt& o) const { return !(*this == o); }
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);
GaussianInt conj(const GaussianInt& a);

// re^2 + im^2; multiplicative.
Int norm(const GaussianInt& z);

// z = w q + r with 2 norm(r) <= norm(w). Rounds each coordinate of the exact
// rational quotient to the nearest integer, ties toward -infinity.
std::pair<GaussianInt, GaussianInt> gaussian_divrem(const GaussianInt& z,
                                                    const GaussianInt& w);

// Canonical-associate gcd via the Euclidean algorithm.
GaussianInt gaussian_gcd(const GaussianInt& z, const GaussianInt& w);

// Exactly {1, -1, i, -i}.
std::vector<GaussianInt> gaussian_units();
bool is_gaussian_unit(const GaussianInt& z);

std::string gaussian_str(const GaussianInt& z);

// Z[i] as a Euclidean domain for the generic factorization layer. Canonical
// associates live in the half-open first quadrant (re > 0, im >= 0).
struct GaussianDomain {
    using Element = GaussianInt;

    static std::string name() { return "Z[i]"; }
    static Element zero() { return GaussianInt(0, 0); }
    static Element one() { return GaussianInt(1, 0); }
    static Element add(const Element& a, const Element& b) { return a + b; }
    static Element negate(const Element& a) { return -a; }
    static Element mul(const Element& a, const Element& b) { return a * b; }
    static std::pair<Element, Element> divrem(const Element& a, const Element& b) {
        return gaussian_divrem(a, b);
    }
    static bool is_zero(const Element& a) { return a.re == 0 && a.im == 0; }
    static bool is_unit(const Element& a) { return is_gaussian_unit(a); }
    static bool equal(const Element& a, const Element& b) { return a == b; }
    static bool less(const Element& a, const Element& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
    static Element canonical_associate(const Element& a);
    static std::vector<Element> factor(const Element& a);
    static std::optional<Element> unit_nth_root(const Element& u, unsigned long k);
    static std::string to_string(const Element& a) { return gaussian_str(a); }
};

// Element a + b sqrt(d) of Z[sqrt(d)], d >= 2 non-square. Values carry their
// d; combining distinct d is a rejected input.
struct QuadInt {
    Int a;
    Int b;
    uint64_t d = 2;
};

QuadInt make_quad(Int a, Int b, uint64_t d);
QuadInt quad_mul(const QuadInt& x, const QuadInt& y);

// (a + b sqrt(d))^m with both coordinates reduced mod `modulus` after every
// step of the square-and-multiply ladder.
QuadInt quad_pow_mod(const QuadInt& base, const Int& m, const Int& modulus);

std::string quad_str(const QuadInt& x);

} // namespace catalan
