#include "criteria.hpp"

#include <algorithm>

namespace catalan {

namespace {

void require_odd_prime(const Int& p, const char* tag) {
    require(p >= 3 && mpz_odd_p(p.get_mpz_t()) != 0 && is_prime(p),
            std::string(tag) + " must be an odd prime");
}

// base^{e} mod m^2 == 1, along both exponentiation routes when m^2 fits a
// machine word.
bool fermat_quotient_vanishes(const Int& base, const Int& m) {
    Int m2 = m * m;
    bool wide = powmod(base, m - 1, m2) == 1;
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
        uint64_t mm = m.get_ui();
        if (mm < (uint64_t{1} << 32)) {
            uint64_t mod = mm * mm;
            uint64_t b = mpz_fdiv_ui(base.get_mpz_t(), mod);
            bool narrow = powmod_u64(b, mm - 1, mod) == (mod == 1 ? 0 : 1);
            verify(narrow == wide, "word-size and bignum exponentiation disagree");
        }
    }
    return wide;
}

} // namespace

bool wieferich_pair_check(const Int& p, const Int& q) {
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    require(p != q, "p and q must be distinct");
    return fermat_quotient_vanishes(p, q) && fermat_quotient_vanishes(q, p);
}

std::vector<std::pair<uint64_t, uint64_t>> search_double_wieferich(uint64_t limit,
                                                                   unsigned threads) {
    require(limit >= 5, "limit must be at least 5");
    require(limit <= (uint64_t{1} << 31), "limit out of supported range");
    std::vector<uint32_t> primes = primes_up_to(static_cast<uint32_t>(limit));
    if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());

    unsigned chunk_count = threads == 0 ? 1 : threads;
    std::vector<std::vector<std::pair<uint64_t, uint64_t>>> found(chunk_count);
    for_chunks(0, primes.size(), chunk_count, [&](unsigned chunk, uint64_t a, uint64_t b) {
        for (uint64_t i = a; i < b; ++i) {
            uint64_t p = primes[i];
            uint64_t p2 = p * p;
            for (size_t j = i + 1; j < primes.size(); ++j) {
                uint64_t q = primes[j];
                uint64_t q2 = q * q;
                if (powmod_u64(p % q2, q - 1, q2) != 1) continue;
                if (powmod_u64(q % p2, p - 1, p2) != 1) continue;
                found[chunk].emplace_back(p, q);
            }
        }
    });

    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (auto& c : found) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    for (const auto& [p, q] : out)
        verify(wieferich_pair_check(Int(static_cast<unsigned long>(p)),
                                    Int(static_cast<unsigned long>(q))),
               "search hit failed re-verification");
    return out;
}

bool m2_check(const Int& p, const Int& q) {
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    require(p != q, "p and q must be distinct");
    return (p - 1) % q == 0 || (q - 1) % p == 0;
}

bool m3_check(const Int& p, const Int& q) {
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    require(p != q, "p and q must be distinct");
    return p < 4 * q * q && q < 4 * p * p;
}

bool lemma_simp_lift(const Int& q, const Int& x) {
    require(is_prime(q), "q must be prime");
    require((x - 1) % q == 0, "need x = 1 (mod q)");
    Int q2 = q * q;
    require(powmod(x, q - 1, q2) == 1 % q2, "need x^{q-1} = 1 (mod q^2)");
    bool lifted = (x - 1) % q2 == 0;
    verify(lifted, "congruence lift failed; this would falsify the lemma");
    return lifted;
}

bool m095_relation_check(const Int& p, const Int& q, const Int& x, const Int& y) {
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    require(p > q, "need p > q");
    require(x != 0 && y != 0, "x and y must be nonzero");
    require(pow_int(x, p.get_ui()) - pow_int(y, q.get_ui()) == 1, "x^p - y^q = 1 fails");
    return mpz_divisible_p(y.get_mpz_t(), Int(p * p).get_mpz_t()) != 0 &&
           mpz_divisible_p(x.get_mpz_t(), Int(q * q).get_mpz_t()) != 0;
}

DeductionReport final_deduction_check(uint64_t q_limit) {
    require(q_limit >= 3, "q_limit must be at least 3");
    require(q_limit <= (uint64_t{1} << 31), "q_limit out of supported range");
    DeductionReport rep;
    rep.q_limit = q_limit;

    for (uint32_t q : primes_up_to(static_cast<uint32_t>(q_limit))) {
        if (q == 2) continue; // the deduction concerns odd exponent pairs
        ++rep.odd_primes_checked;
        Int qq = Int(q) * Int(q);
        // k = 1 and k = 3 give even p
        verify(mpz_even_p(Int(1 + qq).get_mpz_t()) != 0, "1 + q^2 must be even");
        verify(mpz_even_p(Int(1 + 3 * qq).get_mpz_t()) != 0, "1 + 3q^2 must be even");
        ++rep.eliminated_by_parity;
        Int p = 1 + 2 * qq;
        if (q == 3) {
            verify(p == 19, "q = 3 must give p = 19");
            rep.survivors.emplace_back(p, Int(q));
            rep.notes.push_back("q=3: p=19 survives the eliminations; it falls to the "
                                "p,q >= 7 hypothesis of the {3,5} exponent theorem");
        } else {
            verify(mpz_divisible_ui_p(p.get_mpz_t(), 3) != 0,
                   "1 + 2q^2 must be divisible by 3 for q > 3");
            ++rep.eliminated_by_three;
        }
    }
    return rep;
}

CriteriaVerdict check_criteria(const Int& p, const Int& q) {
    require_odd_prime(p, "p");
    require_odd_prime(q, "q");
    require(p != q, "p and q must be distinct");
    CriteriaVerdict v;
    v.p = p;
    v.q = q;
    v.resolved_by_m4 = (p == 3 || p == 5 || q == 3 || q == 5);
    v.m1 = wieferich_pair_check(p, q);
    v.m2 = m2_check(p, q);
    v.m3 = m3_check(p, q);
    if (v.resolved_by_m4) {
        v.notes.push_back("resolved: an exponent lies in {3, 5}");
    } else if (!v.m1) {
        v.notes.push_back("resolved: double Wieferich condition fails");
    } else if (!v.m2) {
        v.notes.push_back("resolved: neither congruence p = 1 (mod q), q = 1 (mod p)");
    } else if (!v.m3) {
        v.notes.push_back("resolved: size bound p < 4q^2, q < 4p^2 fails");
    } else {
        v.notes.push_back("pair passes the computable criteria; excluded by the"
                          " final elimination");
    }
    return v;
}

} // namespace catalan
