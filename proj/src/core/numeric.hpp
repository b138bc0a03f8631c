#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace catalan {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational: lowest terms, positive denominator.
Rat make_rat(const Int& num, const Int& den);
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Floor square root, n >= 0.
Int isqrt_floor(const Int& n);

// Floor k-th root, n >= 0, k >= 1.
Int root_floor(const Int& n, unsigned long k);

// n == root^2 with root >= 0.
bool is_square(const Int& n, Int* root = nullptr);

// n == root^k exactly. Negative n allowed for odd k.
bool exact_root(const Int& n, unsigned long k, Int* root = nullptr);

Int pow_int(const Int& base, unsigned long e);
Int powmod(const Int& base, const Int& exp, const Int& mod);
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

// Miller-Rabin with the fixed witness set {2,3,...,37}: deterministic for all
// inputs below 3.3e24 (so for everything at desk scale), a fixed-witness
// probabilistic test beyond that.
bool is_prime(const Int& n);
inline bool is_prime(uint64_t n) { return is_prime(Int(static_cast<unsigned long>(n))); }

std::vector<uint32_t> primes_up_to(uint32_t n);

// Deterministic generator for property suites; all randomized checks take an
// explicit seed so runs are reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 2^bits).
    Int next_bits(unsigned bits);

    // Uniform-ish in [lo, hi], inclusive. Good enough for test-case generation.
    Int next_range(const Int& lo, const Int& hi);

    // Nonzero value with |v| <= bound.
    Int next_nonzero(const Int& bound);

private:
    std::mt19937_64 eng_;
};

// Splits [begin, end) into `threads` contiguous chunks and runs
// fn(chunk_index, lo, hi), on worker threads when threads > 1. Chunk
// boundaries depend only on the range and the chunk count, so callers that
// collect per-chunk results in chunk order get output independent of the
// thread count.
void for_chunks(uint64_t begin, uint64_t end, unsigned threads,
                const std::function<void(unsigned, uint64_t, uint64_t)>& fn);

} // namespace catalan
