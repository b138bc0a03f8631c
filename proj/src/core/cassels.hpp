#pragma once

#include <vector>

#include "diophantine.hpp"
#include "numeric.hpp"

namespace catalan {

// d = gcd((a^q - b^q)/(a - b), a - b) for coprime a != b and prime q;
// always 1 or q.
Int gcd_quotient(const Int& a, const Int& b, const Int& q);

// For a nonzero solution of x^2 - y^q = 1 (q >= 3 odd): after flipping the
// sign of x so that (x+1)/2 is odd, x - 1 = 2^{q-1} a^q and x + 1 = 2 b^q
// with coprime (a, b) and b odd.
struct CheinDecomposition {
    int sign = 1; // applied to x before decomposing
    Int a;
    Int b;
};
CheinDecomposition chein_decompose(const Int& x, const Int& y, unsigned long q);

// Replay of the congruence argument that forces x = +-3 (mod q) out of the
// decomposition above; every identity is checked exactly.
std::vector<std::string> chein_congruence_replay(const Int& x, const Int& y,
                                                 unsigned long q);

// Taylor coefficients of ((1+X)^m - X^m)^{1/n} at 0 up to degree l < m:
// exactly the generalized binomials binom(m/n, j).
struct FmnCoefficients {
    unsigned m = 0;
    unsigned n = 1;
    unsigned l = 0;
    std::vector<Rat> coeff; // length l + 1
};
FmnCoefficients fmn_coefficients(unsigned m, unsigned n, unsigned l);

// Strict monotonicity probe for f(x) = (u^x + 1)^{1/x} (decreasing, u >= 1)
// and f(x) = (u^x - 1)^{1/x} (increasing, u > 1) on a strictly increasing
// list of positive rational sample points. Adjacent values are compared by
// exact integer cross-powers when u^x is rational at both points, and by
// certified directed-rounding enclosures otherwise; an enclosure overlap at
// the maximum working precision raises precision_error instead of guessing.
enum class MonotoneKind { plus_one, minus_one };
bool monotonicity_probe(const Rat& u, MonotoneKind kind, const std::vector<Rat>& samples);

// Exhaustive scan of x^p - y^q = 1 over 0 < |x|,|y| <= bound for odd primes
// p > q; any hit (none are expected) is checked against the divisibility
// relations q | x and p | y.
SolutionReport catalan_pq_search(unsigned p, unsigned q, const Int& bound,
                                 unsigned threads);

// x^2 - y^q = 1 with |x| <= x_bound, prime q >= 5.
SolutionReport chao_ko_search(unsigned q, const Int& x_bound);
std::vector<std::vector<Int>> chao_ko_known_solutions();

// x^m - y^2 = 1 with 1 <= x <= x_bound, odd m >= 3.
SolutionReport lebesgue_search(unsigned m, const Int& x_bound);
std::vector<std::vector<Int>> lebesgue_known_solutions();

// Integrality/divisibility pattern of the scaled Taylor expansion used in
// the p | y relation: with m = floor(p/q) + 1 and D = q^{m + ord_q(m!)},
// every D binom(p/q, k) a^{q(m-k)} is an integer, divisible by q exactly for
// k < m. Works on an artificial |a| >= 2 since no genuine solutions exist.
struct DzSummand {
    unsigned k = 0;
    Int value;
    bool divisible_by_q = false;
};
struct DzReport {
    unsigned m = 0;
    Int scale;
    std::vector<DzSummand> summands;
    bool pattern_holds = false;
};
DzReport cassels_dz_check(unsigned p, unsigned q, const Int& a);

} // namespace catalan
