#include "diophantine.hpp"

#include <algorithm>
#include <set>

#include "pell.hpp"

namespace catalan {

SolutionReport::SolutionReport(std::string equation, std::string bounds, Checker checker)
    : equation_(std::move(equation)), bounds_(std::move(bounds)),
      checker_(std::move(checker)) {}

void SolutionReport::add(std::vector<Int> tuple) {
    verify(checker_(tuple), "tuple fails its equation: " + equation_);
    solutions_.push_back(std::move(tuple));
}

void SolutionReport::note(std::string line) { notes_.push_back(std::move(line)); }

void SolutionReport::sort_solutions() {
    std::sort(solutions_.begin(), solutions_.end());
    solutions_.erase(std::unique(solutions_.begin(), solutions_.end()), solutions_.end());
}

bool SolutionReport::solutions_equal(const std::vector<std::vector<Int>>& expected) const {
    std::vector<std::vector<Int>> want = expected;
    std::sort(want.begin(), want.end());
    return solutions_ == want;
}

std::pair<Int, Int> pythagorean_parametrize(const Int& x, const Int& y, const Int& z) {
    require(x >= 0 && y >= 0 && z >= 0, "triple must be non-negative");
    require(x * x + y * y == z * z, "not a Pythagorean triple");
    require(gcd(x, y) == 1 && gcd(x, z) == 1 && gcd(y, z) == 1,
            "triple must be pairwise coprime");
    bool x_odd = mpz_odd_p(x.get_mpz_t()) != 0;
    bool y_odd = mpz_odd_p(y.get_mpz_t()) != 0;
    require(x_odd != y_odd, "exactly one leg of a primitive triple is odd");
    const Int& leg_odd = x_odd ? x : y;
    const Int& leg_even = x_odd ? y : x;
    verify(mpz_odd_p(z.get_mpz_t()) != 0, "hypotenuse of a primitive triple is odd");

    Int u, v;
    verify(is_square((z + leg_odd) / 2, &u), "(z + odd leg)/2 is a square");
    verify(is_square((z - leg_odd) / 2, &v), "(z - odd leg)/2 is a square");
    verify(2 * u * v == leg_even, "even leg equals 2uv");
    verify(z == u * u + v * v, "hypotenuse equals u^2 + v^2");
    verify(gcd(u, v) == 1, "parameters must be coprime");
    return {u, v};
}

std::pair<Int, Int> onab_decompose(const Int& x, const Int& y) {
    require(x >= 0 && y >= 0, "inputs must be natural");
    require(2 * x * x - y * y == 1, "2x^2 - y^2 = 1 fails");
    verify(mpz_odd_p(y.get_mpz_t()) != 0, "y must be odd");
    Int y0 = (y - 1) / 2;
    auto [u, v] = pythagorean_parametrize(y0, y0 + 1, x);

    Int a, b;
    if ((u - v) * (u - v) - 2 * v * v == 1) {
        a = u - v;
        b = v;
    } else {
        a = u + v;
        b = u;
    }
    verify(a * a - 2 * b * b == 1, "a^2 - 2b^2 = 1 fails");
    verify(x == 2 * a * a - 1 + 2 * a * b || x == 2 * a * a - 1 - 2 * a * b,
           "x is not 2a^2 - 1 +- 2ab");
    return {a, b};
}

namespace {

SolutionReport::Checker equation_checker(std::function<bool(const std::vector<Int>&)> f) {
    return f;
}

} // namespace

SolutionReport quartic_search(QuarticKind kind, const Int& bound) {
    require(bound >= 1, "bound must be at least 1");
    long c = kind == QuarticKind::minus_two ? 2 : 3;
    std::string eq = "x^4 - " + std::to_string(c) + "y^2 = 1";
    SolutionReport rep(eq, "|x| <= " + to_string(bound),
                       equation_checker([c](const std::vector<Int>& t) {
                           return t.size() == 2 &&
                                  t[0] * t[0] * t[0] * t[0] - c * t[1] * t[1] == 1;
                       }));
    for (Int x = 0; x <= bound; ++x) {
        Int t = x * x * x * x - 1;
        if (mpz_divisible_ui_p(t.get_mpz_t(), c) == 0) continue;
        Int y2 = t / c;
        Int y;
        if (!is_square(y2, &y)) continue;
        rep.add({x, y});
        if (x != 0) rep.add({-x, y});
        if (y != 0) {
            rep.add({x, -y});
            if (x != 0) rep.add({-x, -y});
        }
    }
    rep.sort_solutions();
    return rep;
}

std::vector<std::vector<Int>> quartic_known_solutions() {
    return {{Int(-1), Int(0)}, {Int(1), Int(0)}};
}

SolutionReport mordell_search(const Int& bound) {
    require(bound >= 3, "bound must be at least 3");
    SolutionReport rep("x^2 - y^3 = 1", "|x| <= " + to_string(bound),
                       equation_checker([](const std::vector<Int>& t) {
                           return t.size() == 2 && t[0] * t[0] - t[1] * t[1] * t[1] == 1;
                       }));
    Int ymax = root_floor(bound * bound - 1, 3);
    for (Int y = -1; y <= ymax; ++y) {
        Int t = y * y * y + 1;
        Int x;
        if (!is_square(t, &x)) continue;
        if (x > bound) continue;
        rep.add({x, y});
        if (x != 0) rep.add({-x, y});
    }
    rep.sort_solutions();
    return rep;
}

std::vector<std::vector<Int>> mordell_known_solutions() {
    return {{Int(-3), Int(2)},
            {Int(-1), Int(0)},
            {Int(0), Int(-1)},
            {Int(1), Int(0)},
            {Int(3), Int(2)}};
}

MordellTrace mordell_classify(const Int& x, const Int& y) {
    require(x * x - y * y * y == 1, "x^2 - y^3 = 1 fails");
    MordellTrace tr;
    auto line = [&](const std::string& s) { tr.lines.push_back(s); };
    line("x=" + to_string(x) + " y=" + to_string(y) + " satisfies x^2 - y^3 = 1");

    Int f1 = y + 1;
    Int f2 = y * y - y + 1;
    verify(f1 >= 0, "y + 1 must be non-negative");
    Int g = gcd(f1, f2);
    verify(g == 1 || g == 3, "gcd(y+1, y^2-y+1) must be 1 or 3");
    tr.gcd_branch = static_cast<int>(g.get_si());
    line("gcd(y+1, y^2-y+1) = " + to_string(g));

    if (g == 1) {
        Int s, t;
        verify(is_square(f1, &s) && is_square(f2, &t),
               "coprime branch: both factors must be squares");
        line("branch gcd=1: y+1 = " + to_string(s) + "^2 and y^2-y+1 = " + to_string(t) +
             "^2 are coprime squares");
        Int lhs = 2 * t - 2 * y + 1;
        Int rhs = 2 * t + 2 * y - 1;
        verify(lhs * rhs == 3, "(2t-2y+1)(2t+2y-1) = 3 fails");
        line("(2t-2y+1)(2t+2y-1) = " + to_string(lhs) + "*" + to_string(rhs) + " = 3");
        verify(y == 0, "coprime branch admits only y = 0");
        line("y=0: solution (x,y) = (+-1, 0)");
        return tr;
    }

    // gcd = 3 branch: y+1 = 3a^2 and y^2-y+1 = 3b^2.
    Int a, b;
    verify(mpz_divisible_ui_p(f1.get_mpz_t(), 3) != 0 && is_square(f1 / 3, &a),
           "y+1 = 3a^2 fails");
    verify(mpz_divisible_ui_p(f2.get_mpz_t(), 3) != 0 && is_square(f2 / 3, &b),
           "y^2-y+1 = 3b^2 fails");
    line("branch gcd=3: y+1 = 3*" + to_string(a) + "^2, y^2-y+1 = 3*" + to_string(b) +
         "^2");
    Int X = 2 * b;
    verify(mpz_divisible_ui_p(Int(2 * y - 1).get_mpz_t(), 3) != 0, "3 divides 2y-1");
    Int Y = (2 * y - 1) / 3;
    verify(X * X - 3 * Y * Y == 1, "X^2 - 3Y^2 = 1 fails");
    verify(Y == 2 * a * a - 1, "Y = 2a^2 - 1 fails");
    line("X=2b=" + to_string(X) + ", Y=(2y-1)/3=" + to_string(Y) +
         ": X^2-3Y^2=1 and Y=2a^2-1");

    if (X == 2 && Y == -1 && a == 0) {
        line("(X,Y,a) = (2,-1,0): y=-1, solution (x,y) = (0, -1)");
        return tr;
    }
    verify(Y >= 0, "remaining case needs Y >= 0");

    // Locate Y in the y_n family for d = 3.
    unsigned long n = 0;
    for (;; ++n) {
        PellSolution s = pell_nth(3, n);
        if (s.y == Y) break;
        verify(s.y < Y, "Y does not appear in the solution family for d = 3");
    }
    verify(n % 2 == 1, "index n with y_n = Y must be odd");
    unsigned long m = (n - 1) / 2;
    PellSolution sm = pell_nth(3, m);
    PellSolution sm1 = pell_nth(3, m + 1);
    verify(Y == 2 * sm.x * sm1.y - 1, "y_{2m+1} = 2 x_m y_{m+1} - 1 fails");
    verify(a * a == sm.x * sm1.y, "a^2 = x_m y_{m+1} fails");
    line("Y=" + to_string(Y) + " >= 0: y_n = Y at n=" + std::to_string(n) + " (odd), m=" +
         std::to_string(m));
    line("a^2 = x_m * y_{m+1} = " + to_string(sm.x) + "*" + to_string(sm1.y));

    Int g2 = gcd(sm.x, sm1.y);
    verify(g2 == gcd(sm.x, sm.x + 2 * sm.y), "gcd(x_m, y_{m+1}) = gcd(x_m, x_m+2y_m)");
    verify(g2 == 1 || g2 == 2, "gcd(x_m, y_{m+1}) must be 1 or 2");
    line("gcd(x_m, y_{m+1}) = " + to_string(g2));

    if (g2 == 1) {
        Int r;
        verify(is_square(sm.x, &r), "x_m must be a square");
        verify(sm.x == 1, "x_m = 1 forced by the quartic x^4 - 3y^2 = 1");
        verify(m == 0 && n == 1 && y == 2, "terminal case must be m=0, n=1, y=2");
        line("sub-branch gcd=1: x_m = 1 is a square, so m=0, n=1, y=2");
        line("solution (x,y) = (+-3, 2)");
        return tr;
    }

    // g2 = 2: y_{m+1} = 2c^2 and the descent would continue; never reached by
    // an actual solution.
    Int c;
    verify(mpz_even_p(sm1.y.get_mpz_t()) != 0 && is_square(sm1.y / 2, &c),
           "y_{m+1} = 2c^2 fails");
    unsigned long k = (m + 1) / 2;
    PellSolution sk = pell_nth(3, k);
    verify(sm1.y == 2 * sk.x * sk.y, "y_{2k} = 2 x_k y_k fails");
    verify(c * c == sk.x * sk.y, "c^2 = x_k y_k fails");
    line("sub-branch gcd=2: y_{m+1} = 2c^2, descent continues at k=" + std::to_string(k));
    line("x_k would be a square with k >= 1: impossible, no solution on this branch");
    return tr;
}

SolutionReport conrad_quartic_search(const Int& bound) {
    require(bound >= 1, "bound must be at least 1");
    SolutionReport rep("x^4 - 3x^2y^2 + 3y^4 = z^2",
                       "1 <= x,y <= " + to_string(bound) + ", gcd(x,y)=1, 3 does not divide x",
                       equation_checker([](const std::vector<Int>& t) {
                           if (t.size() != 3) return false;
                           const Int &x = t[0], &y = t[1], &z = t[2];
                           if (x < 1 || y < 1 || z < 1) return false;
                           if (gcd(x, y) != 1) return false;
                           if (mpz_divisible_ui_p(x.get_mpz_t(), 3)) return false;
                           Int x2 = x * x, y2 = y * y;
                           return x2 * x2 - 3 * x2 * y2 + 3 * y2 * y2 == z * z;
                       }));
    for (Int x = 1; x <= bound; ++x) {
        if (mpz_divisible_ui_p(x.get_mpz_t(), 3)) continue;
        Int x2 = x * x;
        for (Int y = 1; y <= bound; ++y) {
            if (gcd(x, y) != 1) continue;
            Int y2 = y * y;
            Int w = x2 * x2 - 3 * x2 * y2 + 3 * y2 * y2;
            Int z;
            if (is_square(w, &z)) rep.add({x, y, z});
        }
    }
    rep.sort_solutions();
    return rep;
}

SolutionReport conrad_square_pair_search(const Int& bound) {
    require(bound >= 1, "bound must be at least 1");
    SolutionReport rep("u, v, u^2 - 3uv + 3v^2 all squares",
                       "1 <= u,v <= " + to_string(bound) + ", gcd(u,v)=1, 3 does not divide u",
                       equation_checker([](const std::vector<Int>& t) {
                           if (t.size() != 2) return false;
                           const Int &u = t[0], &v = t[1];
                           if (u < 1 || v < 1 || gcd(u, v) != 1) return false;
                           if (mpz_divisible_ui_p(u.get_mpz_t(), 3)) return false;
                           return is_square(u) && is_square(v) &&
                                  is_square(u * u - 3 * u * v + 3 * v * v);
                       }));
    Int smax = isqrt_floor(bound);
    for (Int s = 1; s <= smax; ++s) {
        Int u = s * s;
        if (mpz_divisible_ui_p(u.get_mpz_t(), 3)) continue;
        for (Int t = 1; t <= smax; ++t) {
            Int v = t * t;
            if (gcd(u, v) != 1) continue;
            if (is_square(u * u - 3 * u * v + 3 * v * v)) rep.add({u, v});
        }
    }
    rep.sort_solutions();

    // Base case of the descent: v = 1 forces u = 1.
    std::vector<Int> base_hits;
    for (Int s = 1; s <= smax; ++s) {
        Int u = s * s;
        if (mpz_divisible_ui_p(u.get_mpz_t(), 3)) continue;
        if (is_square(u * u - 3 * u + 3)) base_hits.push_back(u);
    }
    std::string hits;
    for (const Int& u : base_hits) hits += (hits.empty() ? "" : ",") + to_string(u);
    rep.note("v=1 base case: admissible u in {" + hits + "}");
    return rep;
}

bool wakulicz_trivial_family(const std::vector<Int>& t) {
    if (t.size() != 3) return false;
    return (t[0] == t[1] && t[1] == t[2]) || (t[1] == -t[0] && t[2] == 0);
}

SolutionReport wakulicz_search(const Int& bound) {
    require(bound >= 1 && mpz_fits_slong_p(bound.get_mpz_t()),
            "bound out of supported range");
    SolutionReport rep("x^3 + y^3 = 2z^3", "|x|,|y|,|z| <= " + to_string(bound),
                       equation_checker([](const std::vector<Int>& t) {
                           return t.size() == 3 &&
                                  t[0] * t[0] * t[0] + t[1] * t[1] * t[1] ==
                                      2 * t[2] * t[2] * t[2];
                       }));
    long b = static_cast<long>(bound.get_si());
    std::vector<Int> cubes(2 * b + 1);
    for (long i = -b; i <= b; ++i) cubes[i + b] = Int(i) * Int(i) * Int(i);
    for (long x = -b; x <= b; ++x) {
        for (long y = -b; y <= b; ++y) {
            Int s = cubes[x + b] + cubes[y + b];
            if (mpz_odd_p(s.get_mpz_t())) continue;
            Int z;
            if (!exact_root(s / 2, 3, &z)) continue;
            if (abs(z) > bound) continue;
            rep.add({Int(x), Int(y), z});
        }
    }
    rep.sort_solutions();
    return rep;
}

SolutionReport cube_pair_search(const Int& bound) {
    require(bound >= 1, "bound must be at least 1");
    SolutionReport rep("x^3 - 2y^3 = +-1", "|x| <= " + to_string(bound),
                       equation_checker([](const std::vector<Int>& t) {
                           if (t.size() != 2) return false;
                           Int v = t[0] * t[0] * t[0] - 2 * t[1] * t[1] * t[1];
                           return v == 1 || v == -1;
                       }));
    for (Int x = -bound; x <= bound; ++x) {
        Int x3 = x * x * x;
        for (int rhs : {1, -1}) {
            Int t = x3 - rhs;
            if (mpz_odd_p(t.get_mpz_t())) continue;
            Int y;
            if (exact_root(t / 2, 3, &y)) rep.add({x, y});
        }
    }
    rep.sort_solutions();
    return rep;
}

std::vector<std::vector<Int>> cube_pair_known_solutions() {
    return {{Int(-1), Int(-1)}, {Int(-1), Int(0)}, {Int(1), Int(0)}, {Int(1), Int(1)}};
}

bool is_perfect_power(const Int& n) {
    require(n >= 1, "perfect-power test over the naturals");
    return mpz_perfect_power_p(n.get_mpz_t()) != 0;
}

std::string power_form(uint64_t n) {
    Int v(static_cast<unsigned long>(n));
    for (unsigned long m = 63; m >= 2; --m) {
        Int root;
        if (exact_root(v, m, &root) && root >= 2)
            return root.get_str() + "^" + std::to_string(m);
    }
    if (n == 1) return "1^2";
    return to_string(v) + "^1";
}

SolutionReport consecutive_power_search(uint64_t max, unsigned threads) {
    require(max >= 2, "max must be at least 2");
    SolutionReport rep("x^m and y^n consecutive perfect powers (m,n >= 2)",
                       "values <= " + std::to_string(max),
                       equation_checker([](const std::vector<Int>& t) {
                           return t.size() == 2 && t[0] + 1 == t[1] &&
                                  is_perfect_power(t[0]) && is_perfect_power(t[1]);
                       }));

    require(max <= uint64_t{1} << 62, "max out of supported range");
    unsigned chunk_count = threads == 0 ? 1 : threads;
    std::vector<std::vector<uint64_t>> per_chunk(chunk_count);
    for_chunks(1, max + 1, chunk_count, [&](unsigned chunk, uint64_t lo, uint64_t hi) {
        // all x^m with m >= 2 falling inside [lo, hi)
        std::set<uint64_t> found;
        if (lo <= 1 && 1 < hi) found.insert(1);
        for (unsigned long m = 2; m < 64; ++m) {
            if (pow_int(Int(2), m) >= hi) break;
            uint64_t x = root_floor(Int(static_cast<unsigned long>(lo)), m).get_ui();
            if (x < 2) x = 2;
            for (;; ++x) {
                Int value = pow_int(Int(static_cast<unsigned long>(x)), m);
                if (value < lo) continue;
                if (value >= hi) break;
                found.insert(value.get_ui());
            }
        }
        per_chunk[chunk].assign(found.begin(), found.end());
    });

    std::vector<uint64_t> powers;
    for (auto& c : per_chunk) powers.insert(powers.end(), c.begin(), c.end());
    rep.note("perfect powers enumerated: " + std::to_string(powers.size()));
    for (size_t i = 0; i + 1 < powers.size(); ++i) {
        if (powers[i] + 1 == powers[i + 1]) {
            rep.add({Int(static_cast<unsigned long>(powers[i])),
                     Int(static_cast<unsigned long>(powers[i + 1]))});
            rep.note(std::to_string(powers[i]) + " = " + power_form(powers[i]) + ", " +
                     std::to_string(powers[i + 1]) + " = " + power_form(powers[i + 1]));
        }
    }
    rep.sort_solutions();
    return rep;
}

bool euler_square_condition(const Rat& y) {
    Int a = y.get_num();
    Int b = y.get_den();
    return is_square(b * (a * a * a + b * b * b));
}

} // namespace catalan
