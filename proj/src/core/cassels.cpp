#include "cassels.hpp"

#include <mpfr.h>

#include "padic.hpp"

namespace catalan {

Int gcd_quotient(const Int& a, const Int& b, const Int& q) {
    require(is_prime(q), "q must be prime");
    require(a != b, "a and b must differ");
    require(gcd(a, b) == 1, "a and b must be coprime");
    Int diff = a - b;
    Int s = (pow_int(a, q.get_ui()) - pow_int(b, q.get_ui()));
    verify(mpz_divisible_p(s.get_mpz_t(), diff.get_mpz_t()), "a - b divides a^q - b^q");
    s /= diff;
    Int d = gcd(s, diff);
    verify(d == 1 || d == q, "gcd of the split factors must be 1 or q");
    return d;
}

CheinDecomposition chein_decompose(const Int& x_in, const Int& y, unsigned long q) {
    require(q >= 3 && q % 2 == 1, "q must be odd and at least 3");
    require(x_in != 0 && y != 0, "x and y must be nonzero");
    require(x_in * x_in - pow_int(y, q) == 1, "x^2 - y^q = 1 fails");

    verify(mpz_even_p(y.get_mpz_t()) != 0, "y must be even for a nonzero solution");
    verify(mpz_odd_p(x_in.get_mpz_t()) != 0, "x must be odd");

    CheinDecomposition out;
    Int x = x_in;
    if (mpz_even_p(Int((x + 1) / 2).get_mpz_t())) {
        x = -x;
        out.sign = -1;
    }
    verify(mpz_odd_p(Int((x + 1) / 2).get_mpz_t()) != 0, "(x+1)/2 must be odd");

    Int lhs = x - 1;
    Int pow2 = pow_int(Int(2), q - 1);
    verify(mpz_divisible_p(lhs.get_mpz_t(), pow2.get_mpz_t()), "2^{q-1} divides x - 1");
    verify(exact_root(lhs / pow2, q, &out.a), "x - 1 = 2^{q-1} a^q fails");
    verify(exact_root((x + 1) / 2, q, &out.b), "x + 1 = 2 b^q fails");
    verify(mpz_odd_p(out.b.get_mpz_t()) != 0, "b must be odd");
    verify(gcd(out.a, out.b) == 1, "a and b must be coprime");
    return out;
}

std::vector<std::string> chein_congruence_replay(const Int& x_in, const Int& y,
                                                 unsigned long q) {
    CheinDecomposition d = chein_decompose(x_in, y, q);
    Int x = d.sign * x_in;
    std::vector<std::string> lines;
    lines.push_back("normalized x = " + to_string(x) + ", a = " + to_string(d.a) +
                    ", b = " + to_string(d.b));

    Int b2 = d.b * d.b;
    Int two_a = 2 * d.a;
    Int lhs = pow_int(b2, q) - pow_int(two_a, q);
    Int half = (x - 3) / 2;
    verify(2 * half == x - 3, "x - 3 must be even");
    verify(lhs == half * half, "b^{2q} - (2a)^q = ((x-3)/2)^2 fails");
    lines.push_back("b^{2q} - (2a)^q = ((x-3)/2)^2 = " + to_string(lhs));

    verify(gcd(b2, two_a) == 1, "b^2 and 2a must be coprime");
    Int g = gcd_quotient(b2, two_a, Int(static_cast<unsigned long>(q)));
    lines.push_back("gcd((b^{2q}-(2a)^q)/(b^2-2a), b^2-2a) = " + to_string(g));
    if (g == q) {
        verify(mpz_divisible_ui_p(Int(x - 3).get_mpz_t(), q) != 0,
               "q divides x - 3 in the gcd = q branch");
        lines.push_back("gcd branch q: x = 3 (mod q), so the original x = +-3 (mod q)");
    } else {
        lines.push_back("gcd branch 1: excluded for genuine solutions by the size bound");
    }
    return lines;
}

FmnCoefficients fmn_coefficients(unsigned m, unsigned n, unsigned l) {
    require(n % 2 == 1, "n must be odd");
    require(m >= 1 && n >= 1, "m and n must be natural");
    require(l < m, "need l < m");
    FmnCoefficients out;
    out.m = m;
    out.n = n;
    out.l = l;
    Rat alpha = make_rat(Int(m), Int(n));
    for (unsigned j = 0; j <= l; ++j) out.coeff.push_back(rational_binomial(alpha, j));
    return out;
}

namespace {

// u^x for rational u > 0 and rational x, exactly, when the result is
// rational; nullopt otherwise (including exponents too large to evaluate).
std::optional<Rat> rational_pow_exact(const Rat& u, const Rat& x) {
    Int p = x.get_num();
    Int q = x.get_den(); // > 0
    require(u > 0, "base must be positive");
    if (!mpz_fits_ulong_p(q.get_mpz_t()) || !mpz_fits_ulong_p(Int(abs(p)).get_mpz_t()))
        return std::nullopt;
    Int num_root, den_root;
    if (!exact_root(u.get_num(), q.get_ui(), &num_root)) return std::nullopt;
    if (!exact_root(u.get_den(), q.get_ui(), &den_root)) return std::nullopt;
    Rat root = make_rat(num_root, den_root);
    bool neg = p < 0;
    unsigned long e = Int(abs(p)).get_ui();
    Rat power(1);
    for (unsigned long i = 0; i < e; ++i) power *= root;
    if (neg) power = Rat(1) / power;
    return power;
}

Rat rat_pow_ui(const Rat& base, unsigned long e) {
    Rat out(1);
    Rat b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return out;
}

// Compare f(x1) ? f(x2) exactly via cross powers, where f(x) = (u^x + s)^(1/x)
// and both u^{x_i} are rational. Returns -1/0/+1.
std::optional<int> compare_exact(const Rat& u, int s, const Rat& x1, const Rat& x2) {
    auto t1 = rational_pow_exact(u, x1);
    auto t2 = rational_pow_exact(u, x2);
    if (!t1 || !t2) return std::nullopt;
    Rat b1 = *t1 + s;
    Rat b2 = *t2 + s;
    verify(b1 > 0 && b2 > 0, "probe bases must be positive");
    // f(x1) ? f(x2)  <=>  b1^{q1 p2} ? b2^{q2 p1}  (raise both to p1 p2 > 0)
    Int e1_big = x1.get_den() * x2.get_num();
    Int e2_big = x2.get_den() * x1.get_num();
    if (!mpz_fits_ulong_p(e1_big.get_mpz_t()) || !mpz_fits_ulong_p(e2_big.get_mpz_t()))
        return std::nullopt;
    unsigned long e1 = e1_big.get_ui();
    unsigned long e2 = e2_big.get_ui();
    Rat lhs = rat_pow_ui(b1, e1);
    Rat rhs = rat_pow_ui(b2, e2);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

// Certified enclosure of f(x) = (u^x + s)^{1/x} by directed rounding: every
// intermediate is evaluated at both rounding directions and the outer power
// takes the min/max over the monotone corners. Returns false when the lower
// bound of the base degenerates to zero at this precision.
bool enclose_probe(const Rat& u, int s, const Rat& x, mpfr_prec_t prec, mpfr_t lo,
                   mpfr_t hi) {
    MpfrValue u_lo(prec), u_hi(prec), x_lo(prec), x_hi(prec);
    mpfr_set_q(u_lo.v, u.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(u_hi.v, u.get_mpq_t(), MPFR_RNDU);
    mpfr_set_q(x_lo.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x_hi.v, x.get_mpq_t(), MPFR_RNDU);

    // t = u^x: monotone increasing in u (u >= 1, x > 0) and in x when u >= 1
    MpfrValue t_lo(prec), t_hi(prec);
    mpfr_pow(t_lo.v, u_lo.v, x_lo.v, MPFR_RNDD);
    mpfr_pow(t_hi.v, u_hi.v, x_hi.v, MPFR_RNDU);
    mpfr_add_si(t_lo.v, t_lo.v, s, MPFR_RNDD);
    mpfr_add_si(t_hi.v, t_hi.v, s, MPFR_RNDU);
    if (mpfr_sgn(t_lo.v) <= 0) return false; // not enough precision for u^x - 1

    // e = 1/x
    MpfrValue e_lo(prec), e_hi(prec);
    mpfr_ui_div(e_lo.v, 1, x_hi.v, MPFR_RNDD);
    mpfr_ui_div(e_hi.v, 1, x_lo.v, MPFR_RNDU);

    // f = t^e over the four corners; f is monotone in t and in e separately.
    MpfrValue c1(prec), c2(prec), c3(prec), c4(prec);
    mpfr_pow(c1.v, t_lo.v, e_lo.v, MPFR_RNDD);
    mpfr_pow(c2.v, t_lo.v, e_hi.v, MPFR_RNDD);
    mpfr_min(lo, c1.v, c2.v, MPFR_RNDD);
    mpfr_pow(c3.v, t_hi.v, e_lo.v, MPFR_RNDU);
    mpfr_pow(c4.v, t_hi.v, e_hi.v, MPFR_RNDU);
    mpfr_max(hi, c3.v, c4.v, MPFR_RNDU);
    return true;
}

// -1 if f(x1) < f(x2) certified, +1 if >, nullopt if not separated.
std::optional<int> compare_enclosed(const Rat& u, int s, const Rat& x1, const Rat& x2,
                                    mpfr_prec_t prec) {
    MpfrValue lo1(prec), hi1(prec), lo2(prec), hi2(prec);
    if (!enclose_probe(u, s, x1, prec, lo1.v, hi1.v)) return std::nullopt;
    if (!enclose_probe(u, s, x2, prec, lo2.v, hi2.v)) return std::nullopt;
    if (mpfr_cmp(hi1.v, lo2.v) < 0) return -1;
    if (mpfr_cmp(lo1.v, hi2.v) > 0) return 1;
    return std::nullopt;
}

} // namespace

bool monotonicity_probe(const Rat& u, MonotoneKind kind, const std::vector<Rat>& samples) {
    int s = kind == MonotoneKind::plus_one ? 1 : -1;
    if (kind == MonotoneKind::plus_one)
        require(u >= 1, "plus kind needs u >= 1");
    else
        require(u > 1, "minus kind needs u > 1");
    require(samples.size() >= 2, "need at least two sample points");
    for (size_t i = 0; i < samples.size(); ++i) {
        require(samples[i] > 0, "sample points must be positive");
        if (i) require(samples[i - 1] < samples[i], "samples must strictly increase");
    }

    int want = kind == MonotoneKind::plus_one ? 1 : -1; // f(x_i) vs f(x_{i+1})
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        std::optional<int> cmp = compare_exact(u, s, samples[i], samples[i + 1]);
        if (!cmp) {
            for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
                cmp = compare_enclosed(u, s, samples[i], samples[i + 1], prec);
                if (cmp) break;
            }
            if (!cmp)
                throw precision_error("cannot separate f(" + to_string(samples[i]) +
                                      ") and f(" + to_string(samples[i + 1]) +
                                      ") at 4096 bits");
        }
        if (*cmp != want) return false;
    }
    return true;
}

SolutionReport catalan_pq_search(unsigned p, unsigned q, const Int& bound,
                                 unsigned threads) {
    require(p > q && q > 2, "need primes p > q > 2");
    require(is_prime(Int(p)) && is_prime(Int(q)), "p and q must be prime");
    require(bound >= 1 && mpz_fits_ulong_p(bound.get_mpz_t()),
            "bound out of supported range");
    SolutionReport rep("x^" + std::to_string(p) + " - y^" + std::to_string(q) + " = 1",
                       "0 < |x|,|y| <= " + to_string(bound),
                       [p, q](const std::vector<Int>& t) {
                           return t.size() == 2 && t[0] != 0 && t[1] != 0 &&
                                  pow_int(t[0], p) - pow_int(t[1], q) == 1;
                       });

    uint64_t width = 2 * bound.get_ui() + 1;
    unsigned chunk_count = threads == 0 ? 1 : threads;
    std::vector<std::vector<std::vector<Int>>> per_chunk(chunk_count);
    Int lo = -bound;
    for_chunks(0, width, chunk_count, [&](unsigned chunk, uint64_t a, uint64_t b) {
        for (uint64_t i = a; i < b; ++i) {
            Int x = lo + Int(static_cast<unsigned long>(i));
            if (x == 0) continue;
            Int t = pow_int(x, p) - 1;
            if (t == 0) continue; // y = 0 excluded
            Int y;
            if (!exact_root(t, q, &y)) continue;
            if (y == 0 || abs(y) > bound) continue;
            per_chunk[chunk].push_back({x, y});
        }
    });
    for (auto& c : per_chunk)
        for (auto& t : c) {
            // any hit must satisfy both divisibility relations
            verify(mpz_divisible_ui_p(t[0].get_mpz_t(), q) != 0, "q | x fails on a hit");
            verify(mpz_divisible_ui_p(t[1].get_mpz_t(), p) != 0, "p | y fails on a hit");
            rep.add(std::move(t));
        }
    rep.sort_solutions();
    rep.note("relations q | x and p | y checked on every hit");
    return rep;
}

SolutionReport chao_ko_search(unsigned q, const Int& x_bound) {
    require(q >= 5 && is_prime(Int(q)), "q must be a prime >= 5");
    require(x_bound >= 1, "bound must be at least 1");
    SolutionReport rep("x^2 - y^" + std::to_string(q) + " = 1",
                       "|x| <= " + to_string(x_bound),
                       [q](const std::vector<Int>& t) {
                           return t.size() == 2 && t[0] * t[0] - pow_int(t[1], q) == 1;
                       });
    Int ymax = root_floor(x_bound * x_bound - 1, q);
    for (Int y = -1; y <= ymax; ++y) {
        Int t = pow_int(y, q) + 1;
        Int x;
        if (t < 0 || !is_square(t, &x)) continue;
        if (x > x_bound) continue;
        rep.add({x, y});
        if (x != 0) rep.add({-x, y});
    }
    rep.sort_solutions();
    return rep;
}

std::vector<std::vector<Int>> chao_ko_known_solutions() {
    return {{Int(-1), Int(0)}, {Int(0), Int(-1)}, {Int(1), Int(0)}};
}

SolutionReport lebesgue_search(unsigned m, const Int& x_bound) {
    require(m >= 3 && m % 2 == 1, "m must be odd and at least 3");
    require(x_bound >= 1, "bound must be at least 1");
    SolutionReport rep("x^" + std::to_string(m) + " - y^2 = 1",
                       "1 <= x <= " + to_string(x_bound),
                       [m](const std::vector<Int>& t) {
                           return t.size() == 2 && pow_int(t[0], m) - t[1] * t[1] == 1;
                       });
    for (Int x = 1; x <= x_bound; ++x) {
        Int t = pow_int(x, m) - 1;
        Int y;
        if (!is_square(t, &y)) continue;
        rep.add({x, y});
        if (y != 0) rep.add({x, -y});
    }
    rep.sort_solutions();
    return rep;
}

std::vector<std::vector<Int>> lebesgue_known_solutions() {
    return {{Int(1), Int(0)}};
}

DzReport cassels_dz_check(unsigned p, unsigned q, const Int& a) {
    require(p > q && q > 2, "need primes p > q > 2");
    require(is_prime(Int(p)) && is_prime(Int(q)), "p and q must be prime");
    require(abs(a) >= 2, "need |a| >= 2");

    DzReport out;
    out.m = p / q + 1;
    Int qz(q);
    out.scale = pow_int(qz, out.m + static_cast<unsigned long>(ord_factorial(qz, out.m)));

    Rat alpha = make_rat(Int(p), Int(q));
    bool ok = true;
    for (unsigned k = 0; k <= out.m; ++k) {
        Rat term = Rat(out.scale) * rational_binomial(alpha, k) *
                   Rat(pow_int(a, static_cast<unsigned long>(q) * (out.m - k)));
        verify(term.get_den() == 1, "summand k = " + std::to_string(k) +
                                        " is not an integer");
        DzSummand s;
        s.k = k;
        s.value = term.get_num();
        s.divisible_by_q = mpz_divisible_ui_p(s.value.get_mpz_t(), q) != 0;
        bool want = k < out.m;
        if (s.divisible_by_q != want) ok = false;
        out.summands.push_back(std::move(s));
    }
    out.pattern_holds = ok;
    verify(ok, "q-divisibility pattern of the scaled expansion failed");
    return out;
}

} // namespace catalan
