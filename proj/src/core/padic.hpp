#pragma once

#include <vector>

#include "numeric.hpp"

namespace catalan {

// Order of a rational at a prime: an integer, or +infinity exactly when the
// rational is zero. +infinity absorbs under addition and dominates every
// finite value in comparisons.
class PadicOrder {
public:
    static PadicOrder infinity() { return PadicOrder(true, 0); }
    static PadicOrder finite(long k) { return PadicOrder(false, k); }

    bool is_infinite() const { return infinite_; }
    long value() const {
        require(!infinite_, "value() on infinite order");
        return value_;
    }

    PadicOrder operator+(const PadicOrder& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return finite(value_ + o.value_);
    }

    bool operator==(const PadicOrder& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator!=(const PadicOrder& o) const { return !(*this == o); }
    bool operator<(const PadicOrder& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    bool operator<=(const PadicOrder& o) const { return *this < o || *this == o; }

    static PadicOrder min(const PadicOrder& a, const PadicOrder& b) {
        return a < b ? a : b;
    }

    std::string str() const {
        return infinite_ ? "+inf" : std::to_string(value_);
    }

private:
    PadicOrder(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

// ord_p of a rational; p must be prime.
PadicOrder ord(const Int& p, const Rat& a);
PadicOrder ord(const Int& p, const Int& a);

// ord_q(m!) = sum_{j>=1} floor(m / q^j).
long ord_factorial(const Int& q, unsigned long m);

// ord_p of prod_{j=0}^{m-1} (a + j d), term by term. Requires gcd(p, d) = 1
// and a nonzero product.
long ord_progression_product(const Int& a, const Int& d, unsigned long m, const Int& p);

// Per-level data for the progression product: how many of the m terms are
// divisible by p^j, next to floor(m / p^j). The difference is 0 or 1 at
// every level.
struct ProgressionLevel {
    unsigned long j;
    unsigned long multiples;
    unsigned long floor_quota;
};
std::vector<ProgressionLevel> progression_levels(const Int& a, const Int& d,
                                                 unsigned long m, const Int& p);

// Generalized binomial coefficient: prod_{i=0}^{k-1} (alpha - i) / k!,
// in lowest terms.
Rat rational_binomial(const Rat& alpha, unsigned long k);

// True iff the last term has strictly smaller order at p than every other
// term. When true, the exact sum is additionally verified to be nonzero.
bool dominant_term_nonzero(const std::vector<Rat>& terms, const Int& p);

} // namespace catalan
