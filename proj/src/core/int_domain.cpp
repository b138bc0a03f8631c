#include "int_domain.hpp"

#include <algorithm>

namespace catalan {

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Brent's cycle-finding variant of Pollard's rho with fixed start and
// increment sequence, so factorizations are reproducible run to run.
Int rho_split(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int limit = std::min(Int(128), Int(r - k));
                for (Int i = 0; i < limit; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated for this increment, retry with the next c
    }
}

void factor_into(Int n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = rho_split(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<Int> factor_natural(Int n) {
    require(n >= 1, "factor_natural needs a positive input");
    std::vector<Int> out;
    if (n == 1) return out;

    for (unsigned long p = 2; p <= kTrialBound && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(Int(p));
            n /= static_cast<unsigned long>(p);
        }
    }
    if (n > 1) factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> IntDomain::factor(const Element& a) {
    require(a != 0, "factorization of zero");
    return factor_natural(abs(a));
}

} // namespace catalan
