#include "gaussian.hpp"

#include "int_domain.hpp"

namespace catalan {

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re + b.re, a.im + b.im);
}
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re - b.re, a.im - b.im);
}
GaussianInt operator-(const GaussianInt& a) { return GaussianInt(-a.re, -a.im); }
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
GaussianInt conj(const GaussianInt& a) { return GaussianInt(a.re, -a.im); }

Int norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

namespace {

// Nearest integer to x / n (n > 0), ties toward -infinity.
Int round_half_down(const Int& x, const Int& n) {
    Int q;
    Int num = 2 * x - n;
    Int den = 2 * n;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

std::pair<GaussianInt, GaussianInt> gaussian_divrem(const GaussianInt& z,
                                                    const GaussianInt& w) {
    require(!(w.re == 0 && w.im == 0), "division by zero in Z[i]");
    Int n = norm(w);
    GaussianInt numerator = z * conj(w);
    GaussianInt q(round_half_down(numerator.re, n), round_half_down(numerator.im, n));
    GaussianInt r = z - w * q;
    verify(2 * norm(r) <= n, "gaussian remainder bound 2 N(r) <= N(w) violated");
    return {std::move(q), std::move(r)};
}

GaussianInt gaussian_gcd(const GaussianInt& z, const GaussianInt& w) {
    return gcd_elem<GaussianDomain>(z, w);
}

std::vector<GaussianInt> gaussian_units() {
    return {GaussianInt(1, 0), GaussianInt(-1, 0), GaussianInt(0, 1), GaussianInt(0, -1)};
}

bool is_gaussian_unit(const GaussianInt& z) { return norm(z) == 1; }

std::string gaussian_str(const GaussianInt& z) {
    std::string out = z.re.get_str();
    if (z.im >= 0) out += "+";
    out += z.im.get_str() + "i";
    return out;
}

GaussianInt GaussianDomain::canonical_associate(const Element& a) {
    if (is_zero(a)) return a;
    GaussianInt c = a;
    // Rotate by i until re > 0 and im >= 0; exactly one associate qualifies.
    for (int k = 0; k < 4; ++k) {
        if (c.re > 0 && c.im >= 0) return c;
        c = GaussianInt(-c.im, c.re);
    }
    throw verification_error("no canonical associate found");
}

namespace {

// Square root of -1 modulo a prime p = 1 (mod 4): r = n^{(p-1)/4} for the
// smallest quadratic non-residue n.
Int sqrt_minus_one_mod(const Int& p) {
    Int exp = (p - 1) / 2;
    for (Int n = 2;; ++n) {
        if (powmod(n, exp, p) == p - 1) {
            Int r = powmod(n, (p - 1) / 4, p);
            verify((r * r + 1) % p == 0, "square root of -1 failed to verify");
            return r;
        }
    }
}

bool divide_exactly(GaussianInt& z, const GaussianInt& pi) {
    Int n = norm(pi);
    GaussianInt numerator = z * conj(pi);
    if (!mpz_divisible_p(numerator.re.get_mpz_t(), n.get_mpz_t())) return false;
    if (!mpz_divisible_p(numerator.im.get_mpz_t(), n.get_mpz_t())) return false;
    z = GaussianInt(numerator.re / n, numerator.im / n);
    return true;
}

} // namespace

std::vector<GaussianInt> GaussianDomain::factor(const Element& a) {
    require(!is_zero(a), "factorization of zero");
    std::vector<GaussianInt> out;
    GaussianInt w = a;
    Int n = norm(a);
    if (n == 1) return out;

    std::vector<Int> rational = factor_natural(n);
    std::vector<Int> distinct;
    for (const Int& p : rational)
        if (distinct.empty() || distinct.back() != p) distinct.push_back(p);

    for (const Int& p : distinct) {
        std::vector<GaussianInt> candidates;
        if (p == 2) {
            candidates.push_back(GaussianInt(1, 1));
        } else if (p % 4 == 3) {
            candidates.push_back(GaussianInt(p, Int(0)));
        } else {
            Int r = sqrt_minus_one_mod(p);
            GaussianInt pi = gaussian_gcd(GaussianInt(p, Int(0)), GaussianInt(r, Int(1)));
            verify(norm(pi) == p, "split prime lift has wrong norm");
            candidates.push_back(pi);
            candidates.push_back(conj(pi));
        }
        for (const GaussianInt& pi : candidates)
            while (divide_exactly(w, pi)) out.push_back(pi);
    }
    verify(is_gaussian_unit(w), "gaussian factorization left a non-unit cofactor");
    return out;
}

std::optional<GaussianInt> GaussianDomain::unit_nth_root(const Element& u, unsigned long k) {
    require(is_unit(u), "unit root of a non-unit");
    // Units are i^t; solve i^{s k} = i^t over s in {0,1,2,3}.
    GaussianInt v = one();
    for (int s = 0; s < 4; ++s) {
        if (pow_elem<GaussianDomain>(v, k) == u) return v;
        v = GaussianInt(-v.im, v.re);
    }
    return std::nullopt;
}

QuadInt make_quad(Int a, Int b, uint64_t d) {
    require(d >= 2, "quadratic irrational needs d >= 2");
    require(!is_square(Int(static_cast<unsigned long>(d))),
            "d = " + std::to_string(d) + " is a perfect square");
    return QuadInt{std::move(a), std::move(b), d};
}

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
    require(x.d == y.d, "mixing Z[sqrt(d)] values with different d");
    Int d(static_cast<unsigned long>(x.d));
    return QuadInt{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}

QuadInt quad_pow_mod(const QuadInt& base, const Int& m, const Int& modulus) {
    require(modulus >= 1, "modulus must be at least 1");
    require(m >= 0, "exponent must be non-negative");
    auto reduce = [&](QuadInt v) {
        v.a %= modulus;
        if (v.a < 0) v.a += modulus;
        v.b %= modulus;
        if (v.b < 0) v.b += modulus;
        return v;
    };
    QuadInt acc = reduce(QuadInt{1, 0, base.d});
    QuadInt sq = reduce(base);
    Int e = m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = reduce(quad_mul(acc, sq));
        e /= 2;
        if (e > 0) sq = reduce(quad_mul(sq, sq));
    }
    return acc;
}

std::string quad_str(const QuadInt& x) {
    std::string out = x.a.get_str();
    if (x.b >= 0) out += "+";
    out += x.b.get_str() + "*sqrt(" + std::to_string(x.d) + ")";
    return out;
}

} // namespace catalan
