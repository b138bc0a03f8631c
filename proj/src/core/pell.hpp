#pragma once

#include <vector>

#include "numeric.hpp"

namespace catalan {

// One natural solution of x^2 - d y^2 = 1, tagged with its index n in the
// power family generated by the minimal solution: index 0 is (1, 0).
struct PellSolution {
    Int x;
    Int y;
    unsigned long index = 0;
};

// Throws unless d >= 2 and d is not a perfect square.
void validate_pell_d(uint64_t d);

// Minimal natural solution (a, b) with a, b >= 1, found by the periodic
// continued-fraction expansion of sqrt(d).
PellSolution pell_minimal(uint64_t d);

// (x_n, y_n) with x_n + y_n sqrt(d) = (a + b sqrt(d))^n, exactly.
PellSolution pell_nth(uint64_t d, unsigned long n);

// All natural solutions with x <= x_bound, in increasing x order.
std::vector<PellSolution> pell_enumerate(uint64_t d, const Int& x_bound);

// Composition law (x1 x2 + d y1 y2, x1 y2 + x2 y1); indices add.
PellSolution pell_combine(uint64_t d, const PellSolution& s, const PellSolution& t);

// Checks the d = 3 doubling identities at index n:
//   x_{2n} = 2 x_n^2 - 1,            y_{2n}   = 2 x_n y_n,
//   x_{2n+1} = (y_n + y_{n+1})^2 + 1, y_{2n+1} = 2 x_n y_{n+1} - 1,
// the recurrence x_{n+1} = 2 x_n + 3 y_n, y_{n+1} = x_n + 2 y_n, and the
// parity rule (x_n odd iff n even).
struct Sqrt3IdentityReport {
    unsigned long n = 0;
    bool pass = true;
    std::string violation; // first violated identity, empty when pass
};
Sqrt3IdentityReport sqrt3_identity_check(unsigned long n);

} // namespace catalan
