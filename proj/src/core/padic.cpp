#include "padic.hpp"

namespace catalan {

namespace {

long ord_nonzero_int(const Int& p, const Int& a) {
    Int reduced;
    return static_cast<long>(
        mpz_remove(reduced.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

void require_prime(const Int& p) {
    require(is_prime(p), "p = " + to_string(p) + " is not prime");
}

} // namespace

PadicOrder ord(const Int& p, const Rat& a) {
    require_prime(p);
    if (a == 0) return PadicOrder::infinity();
    long num = ord_nonzero_int(p, a.get_num());
    long den = ord_nonzero_int(p, a.get_den());
    return PadicOrder::finite(num - den);
}

PadicOrder ord(const Int& p, const Int& a) {
    require_prime(p);
    if (a == 0) return PadicOrder::infinity();
    return PadicOrder::finite(ord_nonzero_int(p, a));
}

long ord_factorial(const Int& q, unsigned long m) {
    require_prime(q);
    long total = 0;
    Int power = q;
    while (power <= m) {
        total += static_cast<long>(Int(Int(m) / power).get_ui());
        power *= q;
    }
    return total;
}

long ord_progression_product(const Int& a, const Int& d, unsigned long m, const Int& p) {
    require_prime(p);
    require(d >= 1, "progression step must be a natural number");
    require(gcd(p, d) == 1, "p divides the progression step");
    long total = 0;
    for (unsigned long j = 0; j < m; ++j) {
        Int term = a + Int(j) * d;
        require(term != 0, "progression product is zero");
        total += ord_nonzero_int(p, term);
    }
    return total;
}

std::vector<ProgressionLevel> progression_levels(const Int& a, const Int& d,
                                                 unsigned long m, const Int& p) {
    require_prime(p);
    require(d >= 1, "progression step must be a natural number");
    require(gcd(p, d) == 1, "p divides the progression step");
    Int largest = 0;
    for (unsigned long j = 0; j < m; ++j) {
        Int term = abs(a + Int(j) * d);
        require(term != 0, "progression product is zero");
        if (term > largest) largest = term;
    }
    std::vector<ProgressionLevel> out;
    Int power = p;
    unsigned long level = 1;
    while (power <= largest) {
        unsigned long count = 0;
        for (unsigned long j = 0; j < m; ++j) {
            Int term = a + Int(j) * d;
            if (mpz_divisible_p(term.get_mpz_t(), power.get_mpz_t())) ++count;
        }
        unsigned long quota =
            power <= m ? static_cast<unsigned long>(Int(Int(m) / power).get_ui()) : 0;
        out.push_back({level, count, quota});
        power *= p;
        ++level;
    }
    return out;
}

Rat rational_binomial(const Rat& alpha, unsigned long k) {
    Rat numerator(1);
    for (unsigned long i = 0; i < k; ++i) numerator *= alpha - Rat(Int(i));
    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    return numerator / Rat(kfact);
}

bool dominant_term_nonzero(const std::vector<Rat>& terms, const Int& p) {
    require(terms.size() >= 2, "need at least two terms");
    PadicOrder last = ord(p, terms.back());
    for (size_t i = 0; i + 1 < terms.size(); ++i) {
        if (!(last < ord(p, terms[i]))) return false;
    }
    Rat sum(0);
    for (const Rat& t : terms) sum += t;
    verify(sum != 0, "dominant term criterion met but the sum vanished");
    return true;
}

} // namespace catalan
