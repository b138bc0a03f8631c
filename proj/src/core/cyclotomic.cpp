#include "cyclotomic.hpp"

namespace catalan {

namespace {

void require_p(unsigned p) { require(p == 3 || p == 5, "p must be 3 or 5"); }

// Reduce a coefficient vector on 1, zeta, ..., zeta^{p-1} (length p, after
// folding exponents mod p) to the integral basis using
// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
std::vector<Int> reduce_full(unsigned p, const std::vector<Int>& full) {
    std::vector<Int> out(p - 1);
    const Int& top = full[p - 1];
    for (unsigned i = 0; i + 1 < p; ++i) out[i] = full[i] - top;
    return out;
}

} // namespace

CyclotomicInt::CyclotomicInt(unsigned p) : p_(p), c_(p - 1, Int(0)) { require_p(p); }

CyclotomicInt::CyclotomicInt(unsigned p, std::vector<Int> coords)
    : p_(p), c_(std::move(coords)) {
    require_p(p);
    require(c_.size() == p - 1, "coordinate vector must have length p-1");
}

CyclotomicInt CyclotomicInt::integer(unsigned p, const Int& n) {
    CyclotomicInt x(p);
    x.c_[0] = n;
    return x;
}

CyclotomicInt CyclotomicInt::zeta(unsigned p) {
    CyclotomicInt x(p);
    x.c_[1] = 1;
    return x;
}

bool CyclotomicInt::is_zero() const {
    for (const Int& v : c_)
        if (v != 0) return false;
    return true;
}

namespace {

void require_same_p(const CyclotomicInt& x, const CyclotomicInt& y) {
    require(x.prime() == y.prime(), "mixing cyclotomic integers with different p");
}

} // namespace

CyclotomicInt cyc_add(const CyclotomicInt& x, const CyclotomicInt& y) {
    require_same_p(x, y);
    std::vector<Int> c(x.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] += y.coords()[i];
    return CyclotomicInt(x.prime(), std::move(c));
}

CyclotomicInt cyc_sub(const CyclotomicInt& x, const CyclotomicInt& y) {
    require_same_p(x, y);
    std::vector<Int> c(x.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] -= y.coords()[i];
    return CyclotomicInt(x.prime(), std::move(c));
}

CyclotomicInt cyc_neg(const CyclotomicInt& x) {
    std::vector<Int> c(x.coords());
    for (Int& v : c) v = -v;
    return CyclotomicInt(x.prime(), std::move(c));
}

CyclotomicInt cyc_mul(const CyclotomicInt& x, const CyclotomicInt& y) {
    require_same_p(x, y);
    unsigned p = x.prime();
    std::vector<Int> full(p, Int(0));
    for (unsigned i = 0; i + 1 < p; ++i) {
        if (x.coords()[i] == 0) continue;
        for (unsigned j = 0; j + 1 < p; ++j) {
            if (y.coords()[j] == 0) continue;
            full[(i + j) % p] += x.coords()[i] * y.coords()[j];
        }
    }
    return CyclotomicInt(p, reduce_full(p, full));
}

CyclotomicInt cyc_conjugate(const CyclotomicInt& x, unsigned k) {
    unsigned p = x.prime();
    require(k >= 1 && k <= p - 1, "conjugation index out of range");
    std::vector<Int> full(p, Int(0));
    for (unsigned j = 0; j + 1 < p; ++j) full[(j * k) % p] += x.coords()[j];
    return CyclotomicInt(p, reduce_full(p, full));
}

Int cyc_norm(const CyclotomicInt& x) {
    if (x.is_zero()) return 0;
    unsigned p = x.prime();
    CyclotomicInt prod = x;
    for (unsigned k = 2; k <= p - 1; ++k) prod = cyc_mul(prod, cyc_conjugate(x, k));
    for (unsigned i = 1; i + 1 < p; ++i)
        verify(prod.coords()[i] == 0, "norm is not a rational integer");
    return prod.coords()[0];
}

CycDivRem cyc_divrem(const CyclotomicInt& z, const CyclotomicInt& w) {
    require_same_p(z, w);
    require(!w.is_zero(), "division by zero in Z[zeta_p]");
    unsigned p = z.prime();

    // z / w = z * prod of the other conjugates of w, divided by N(w).
    CyclotomicInt adj = CyclotomicInt::integer(p, 1);
    for (unsigned k = 2; k <= p - 1; ++k) adj = cyc_mul(adj, cyc_conjugate(w, k));
    CyclotomicInt num = cyc_mul(z, adj);
    Int den = cyc_norm(w);
    verify(den > 0, "cyclotomic norm must be positive for nonzero elements");

    std::vector<Int> q0(p - 1);
    for (unsigned i = 0; i + 1 < p; ++i) {
        // nearest integer, ties toward -infinity
        Int t = 2 * num.coords()[i] - den;
        Int d2 = 2 * den;
        mpz_cdiv_q(q0[i].get_mpz_t(), t.get_mpz_t(), d2.get_mpz_t());
    }

    Int wnorm = den;
    auto remainder_of = [&](const CyclotomicInt& q) {
        return cyc_sub(z, cyc_mul(w, q));
    };

    CyclotomicInt q(p, q0);
    CyclotomicInt r = remainder_of(q);
    Int rnorm = abs(cyc_norm(r));
    if (rnorm < wnorm) return {std::move(q), std::move(r)};

    // Bounded local search around the rounded quotient.
    bool found = false;
    CyclotomicInt best_q(p), best_r(p);
    Int best_norm = 0;
    std::vector<int> offset(p - 1, -1);
    for (;;) {
        std::vector<Int> qc(q0);
        for (unsigned i = 0; i + 1 < p; ++i) qc[i] += offset[i];
        CyclotomicInt cand(p, std::move(qc));
        CyclotomicInt rem = remainder_of(cand);
        Int n = abs(cyc_norm(rem));
        if (!found || n < best_norm) {
            found = true;
            best_q = cand;
            best_r = rem;
            best_norm = n;
        }
        size_t i = offset.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++offset[i] <= 1) {
                done = false;
                break;
            }
            offset[i] = -1;
        }
        if (done) break;
    }
    if (best_norm < wnorm) return {std::move(best_q), std::move(best_r)};
    throw cyclotomic_division_error(
        "no quotient in the offset search satisfies |N(r)| < |N(w)| for z = " + cyc_str(z) +
        ", w = " + cyc_str(w));
}

std::string cyc_str(const CyclotomicInt& x) {
    std::string out = "[";
    for (size_t i = 0; i < x.coords().size(); ++i) {
        if (i) out += ",";
        out += x.coords()[i].get_str();
    }
    return out + "]";
}

} // namespace catalan
