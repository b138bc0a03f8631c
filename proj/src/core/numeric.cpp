#include "numeric.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace catalan {

Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

Int isqrt_floor(const Int& n) {
    require(n >= 0, "isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int root_floor(const Int& n, unsigned long k) {
    require(k >= 1, "root with k = 0");
    require(n >= 0, "root_floor of negative value");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) *root = isqrt_floor(n);
    return true;
}

bool exact_root(const Int& n, unsigned long k, Int* root) {
    require(k >= 1, "root with k = 0");
    if (n < 0 && k % 2 == 0) return false;
    Int mag = abs(n);
    Int r, rem;
    mpz_rootrem(r.get_mpz_t(), rem.get_mpz_t(), mag.get_mpz_t(), k);
    if (rem != 0) return false;
    if (root) *root = (n < 0) ? Int(-r) : r;
    return true;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    require(mod >= 1, "powmod with modulus < 1");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = m > 1 ? 1 : 0;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(const Int& n) {
    static const unsigned long witnesses[] = {2, 3,  5,  7,  11, 13,
                                              17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (unsigned long w : witnesses) {
        if (n == w) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
    }
    // n - 1 = 2^s * d with d odd
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int nm1 = n - 1;
    for (unsigned long w : witnesses) {
        Int x = powmod(Int(w), d, n);
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i * i <= n; ++i)
        if (sieve[i])
            for (uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    for (uint32_t i = 2; i <= n; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

Int Rng::next_bits(unsigned bits) {
    Int v = 0;
    unsigned produced = 0;
    while (produced < bits) {
        unsigned take = std::min(64u, bits - produced);
        uint64_t word = eng_();
        if (take < 64) word &= (uint64_t{1} << take) - 1;
        Int chunk(static_cast<unsigned long>(word));
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), take);
        v += chunk;
        produced += take;
    }
    return v;
}

Int Rng::next_range(const Int& lo, const Int& hi) {
    require(lo <= hi, "empty range");
    Int span = hi - lo + 1;
    unsigned bits = static_cast<unsigned>(mpz_sizeinbase(span.get_mpz_t(), 2)) + 16;
    Int v = next_bits(bits) % span;
    return lo + v;
}

Int Rng::next_nonzero(const Int& bound) {
    require(bound >= 1, "empty nonzero range");
    for (;;) {
        Int v = next_range(-bound, bound);
        if (v != 0) return v;
    }
}

void for_chunks(uint64_t begin, uint64_t end, unsigned threads,
                const std::function<void(unsigned, uint64_t, uint64_t)>& fn) {
    if (begin >= end) return;
    uint64_t total = end - begin;
    unsigned chunks = threads == 0 ? 1 : threads;
    if (static_cast<uint64_t>(chunks) > total) chunks = static_cast<unsigned>(total);

    auto bound = [&](unsigned i) { return begin + total * i / chunks; };

    if (chunks == 1) {
        fn(0, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (unsigned i = 0; i < chunks; ++i) {
        pool.emplace_back([&, i] {
            try {
                fn(i, bound(i), bound(i + 1));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace catalan
