#pragma once

#include <functional>
#include <vector>

#include "numeric.hpp"

namespace catalan {

// Search result carrying its own re-verification: every tuple pushed through
// add() is checked against the defining equation again, so a report can never
// hold a tuple that fails its equation.
class SolutionReport {
public:
    using Checker = std::function<bool(const std::vector<Int>&)>;

    SolutionReport(std::string equation, std::string bounds, Checker checker);

    void add(std::vector<Int> tuple);
    void note(std::string line);
    void sort_solutions(); // lexicographic, for deterministic output

    const std::string& equation() const { return equation_; }
    const std::string& bounds() const { return bounds_; }
    const std::vector<std::vector<Int>>& solutions() const { return solutions_; }
    const std::vector<std::string>& notes() const { return notes_; }

    bool solutions_equal(const std::vector<std::vector<Int>>& expected) const;

private:
    std::string equation_;
    std::string bounds_;
    Checker checker_;
    std::vector<std::vector<Int>> solutions_;
    std::vector<std::string> notes_;
};

// Primitive Pythagorean parametrization: for a pairwise coprime triple with
// x^2 + y^2 = z^2 returns coprime (u, v) with z = u^2 + v^2 and
// {x, y} = {u^2 - v^2, 2uv}.
std::pair<Int, Int> pythagorean_parametrize(const Int& x, const Int& y, const Int& z);

// From 2x^2 - y^2 = 1 (x, y naturals) extracts (a, b) with a^2 - 2b^2 = 1 and
// x in {2a^2 - 1 + 2ab, 2a^2 - 1 - 2ab}.
std::pair<Int, Int> onab_decompose(const Int& x, const Int& y);

enum class QuarticKind { minus_two, minus_three }; // x^4 - 2y^2 = 1, x^4 - 3y^2 = 1
SolutionReport quartic_search(QuarticKind kind, const Int& bound);

// x^2 - y^3 = 1 with |x| <= bound.
SolutionReport mordell_search(const Int& bound);
std::vector<std::vector<Int>> mordell_known_solutions();
std::vector<std::vector<Int>> quartic_known_solutions();

// Replays the case analysis of the classification proof of x^2 - y^3 = 1 on
// one concrete solution, re-verifying every intermediate identity exactly.
struct MordellTrace {
    int gcd_branch = 0; // 1 or 3
    std::vector<std::string> lines;
};
MordellTrace mordell_classify(const Int& x, const Int& y);

// x^4 - 3x^2y^2 + 3y^4 = z^2 over coprime naturals with 3 not dividing x.
SolutionReport conrad_quartic_search(const Int& bound);
// Equivalent form: coprime squares u, v with 3 not dividing u and
// u^2 - 3uv + 3v^2 a square; includes the v = 1 base-case check.
SolutionReport conrad_square_pair_search(const Int& bound);

// x^3 + y^3 = 2z^3 with |x|,|y|,|z| <= bound.
SolutionReport wakulicz_search(const Int& bound);
bool wakulicz_trivial_family(const std::vector<Int>& t);

// x^3 - 2y^3 = +-1 with |x| <= bound.
SolutionReport cube_pair_search(const Int& bound);
std::vector<std::vector<Int>> cube_pair_known_solutions();

// Enumerates all perfect powers x^m (m >= 2, x >= 1) up to max and lists the
// consecutive pairs among them.
SolutionReport consecutive_power_search(uint64_t max, unsigned threads);
bool is_perfect_power(const Int& n);
// Representation with the largest exponent, e.g. 8 -> "2^3".
std::string power_form(uint64_t n);

// For y = a/b in lowest terms: whether b (a^3 + b^3) is a perfect square.
bool euler_square_condition(const Rat& y);

} // namespace catalan
