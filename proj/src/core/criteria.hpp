#pragma once

#include <vector>

#include "numeric.hpp"

namespace catalan {

// Double Wieferich condition: p^{q-1} = 1 (mod q^2) and q^{p-1} = 1 (mod p^2).
// Each congruence is evaluated by repeated squaring twice, once over machine
// words and once over arbitrary-precision integers, and the two must agree.
bool wieferich_pair_check(const Int& p, const Int& q);

// All unordered pairs of distinct odd primes <= limit passing the double
// Wieferich condition, ascending.
std::vector<std::pair<uint64_t, uint64_t>> search_double_wieferich(uint64_t limit,
                                                                   unsigned threads);

// p = 1 (mod q) or q = 1 (mod p). Stated for primes >= 7; computable for any
// distinct odd primes.
bool m2_check(const Int& p, const Int& q);

// p < 4q^2 and q < 4p^2.
bool m3_check(const Int& p, const Int& q);

// From x = 1 (mod q) and x^{q-1} = 1 (mod q^2), concludes x = 1 (mod q^2).
// Precondition violations are rejected; a false conclusion would falsify the
// lemma and raises verification_error.
bool lemma_simp_lift(const Int& q, const Int& x);

// p^2 | y and q^2 | x for a hypothetical nonzero solution of x^p - y^q = 1.
bool m095_relation_check(const Int& p, const Int& q, const Int& x, const Int& y);

// Replay of the final elimination: for every odd prime q <= q_limit, p = 1 + k q^2
// with k in {1,2,3}; k odd gives even p, and for q > 3 the value 1 + 2q^2 is
// divisible by 3. The only survivor is (19, 3).
struct DeductionReport {
    uint64_t q_limit = 0;
    uint64_t odd_primes_checked = 0;
    uint64_t eliminated_by_parity = 0; // q with k = 1 and k = 3 killed by evenness
    uint64_t eliminated_by_three = 0;  // q > 3 with 3 | 1 + 2q^2
    std::vector<std::pair<Int, Int>> survivors; // (p, q)
    std::vector<std::string> notes;
};
DeductionReport final_deduction_check(uint64_t q_limit);

// One pair through the full criteria pipeline.
struct CriteriaVerdict {
    Int p;
    Int q;
    bool resolved_by_m4 = false; // p or q in {3, 5}
    bool m1 = false;             // double Wieferich condition
    bool m2 = false;
    bool m3 = false;
    std::vector<std::string> notes;
};
CriteriaVerdict check_criteria(const Int& p, const Int& q);

} // namespace catalan
