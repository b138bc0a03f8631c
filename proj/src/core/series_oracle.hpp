#pragma once

#include <vector>

#include "numeric.hpp"

namespace catalan {

// Truncated power series with rational coefficients, used as an independent
// route to Taylor coefficients: it works purely by coefficient recurrences
// and never touches generalized binomials.
namespace series {

// Coefficients of (1+X)^m - X^m up to degree l.
std::vector<Rat> one_plus_x_pow_minus_x_pow(unsigned m, unsigned l);

// Formal n-th root of a series h with h(0) = 1, up to degree l: the unique
// g with g(0) = 1 and g^n = h, extracted coefficient by coefficient.
std::vector<Rat> nth_root(const std::vector<Rat>& h, unsigned n, unsigned l);

// Product of two truncated series up to degree l.
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b, unsigned l);

} // namespace series

} // namespace catalan
