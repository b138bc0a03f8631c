#pragma once

#include <vector>

#include "numeric.hpp"

namespace catalan {

// Element of Z[zeta_p] for p in {3, 5}, stored on the integral basis
// 1, zeta, ..., zeta^{p-2}.
class CyclotomicInt {
public:
    explicit CyclotomicInt(unsigned p);
    CyclotomicInt(unsigned p, std::vector<Int> coords);

    static CyclotomicInt integer(unsigned p, const Int& n);
    static CyclotomicInt zeta(unsigned p);

    unsigned prime() const { return p_; }
    const std::vector<Int>& coords() const { return c_; }
    bool is_zero() const;

    bool operator==(const CyclotomicInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

private:
    unsigned p_;
    std::vector<Int> c_;
};

CyclotomicInt cyc_add(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt cyc_sub(const CyclotomicInt& x, const CyclotomicInt& y);
CyclotomicInt cyc_neg(const CyclotomicInt& x);
CyclotomicInt cyc_mul(const CyclotomicInt& x, const CyclotomicInt& y);

// Galois conjugate zeta -> zeta^k, 1 <= k <= p-1.
CyclotomicInt cyc_conjugate(const CyclotomicInt& x, unsigned k);

// Field norm: the product of all p-1 conjugates, always a rational integer.
Int cyc_norm(const CyclotomicInt& x);

// Division with small remainder: z = w q + r with |N(r)| < |N(w)|. The
// quotient is the coordinate-wise rounding of the exact quotient in the
// fraction field; if the rounded point misses the norm bound, quotient
// offsets in {-1,0,1}^{p-1} are searched for the minimal remainder norm.
struct CycDivRem {
    CyclotomicInt quotient;
    CyclotomicInt remainder;
};
CycDivRem cyc_divrem(const CyclotomicInt& z, const CyclotomicInt& w);

// Thrown when no candidate quotient satisfies the norm bound; never silent.
class cyclotomic_division_error : public verification_error {
public:
    using verification_error::verification_error;
};

std::string cyc_str(const CyclotomicInt& x);

} // namespace catalan
