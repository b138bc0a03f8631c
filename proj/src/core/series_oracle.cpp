#include "series_oracle.hpp"

namespace catalan {
namespace series {

std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b, unsigned l) {
    std::vector<Rat> out(l + 1, Rat(0));
    for (size_t i = 0; i < a.size() && i <= l; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j <= l; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rat> one_plus_x_pow_minus_x_pow(unsigned m, unsigned l) {
    std::vector<Rat> out(l + 1, Rat(0));
    // binomial coefficients of (1+X)^m by the additive recurrence
    std::vector<Int> row(l + 1, Int(0));
    row[0] = 1;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = std::min(l, i); j >= 1; --j) row[j] += row[j - 1];
    for (unsigned j = 0; j <= l; ++j) out[j] = Rat(row[j]);
    if (m <= l) out[m] -= 1;
    return out;
}

std::vector<Rat> nth_root(const std::vector<Rat>& h, unsigned n, unsigned l) {
    require(n >= 1, "root index must be at least 1");
    require(!h.empty() && h[0] == 1, "series must have constant term 1");
    std::vector<Rat> g(l + 1, Rat(0));
    g[0] = 1;
    for (unsigned j = 1; j <= l; ++j) {
        // coefficient of X^j in g^n with the current prefix and g_j = 0
        std::vector<Rat> power{Rat(1)};
        for (unsigned t = 0; t < n; ++t) power = mul(power, g, j);
        Rat hj = j < h.size() ? h[j] : Rat(0);
        // g^n including the unknown g_j contributes n * g_j at degree j
        g[j] = (hj - power[j]) / Rat(Int(n));
    }
    // confirm g^n reproduces h through degree l
    std::vector<Rat> power{Rat(1)};
    for (unsigned t = 0; t < n; ++t) power = mul(power, g, l);
    for (unsigned j = 0; j <= l; ++j) {
        Rat hj = j < h.size() ? h[j] : Rat(0);
        verify(power[j] == hj, "n-th root recurrence failed to reproduce the series");
    }
    return g;
}

} // namespace series
} // namespace catalan
