/*
 * catalan — exact-arithmetic searches and lemma checks around the
 * consecutive-perfect-power problem.
 *
 * C interface to the shared library. Every entry point fills an opaque
 * report handle with structured key/value records and returns a status
 * code; no call prints, allocates globals, or touches the filesystem.
 *
 * Thread safety: reports are independent objects; catalan_last_error()
 * is thread-local.
 */
#ifndef CATALAN_H
#define CATALAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum catalan_status {
    CATALAN_OK = 0,               /* ran and every verification passed */
    CATALAN_VERIFICATION_FAILED = 1, /* ran, but a checked claim failed */
    CATALAN_INVALID_ARGUMENT = 2, /* precondition violated; report not produced */
    CATALAN_INTERNAL_ERROR = 3
} catalan_status;

/* Opaque result object: an ordered list of records, each an ordered list of
 * key/value string pairs. The last record is a summary with a "status" key. */
typedef struct catalan_report catalan_report;

const char* catalan_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call on the thread. */
const char* catalan_last_error(void);

void catalan_report_free(catalan_report* report);
int catalan_report_passed(const catalan_report* report); /* 1 pass, 0 fail */
size_t catalan_report_records(const catalan_report* report);
size_t catalan_report_fields(const catalan_report* report, size_t record);
/* Borrowed pointers, valid for the lifetime of the report. NULL when out of
 * range. */
const char* catalan_report_key(const catalan_report* report, size_t record,
                               size_t field);
const char* catalan_report_value(const catalan_report* report, size_t record,
                                 size_t field);
/* Canonical rendering: one JSON object per line, insertion-ordered keys,
 * every value a string. Owned by the report. */
const char* catalan_report_json(catalan_report* report);

/* Pell equation x^2 - d y^2 = 1: enumerates natural solutions with
 * x <= x_bound in index order; when d = 3 and identity_n > 0, additionally
 * checks the doubling/recurrence/parity identities for all n <= identity_n. */
catalan_status catalan_run_pell(uint64_t d, uint64_t x_bound, uint32_t identity_n,
                                catalan_report** out);

/* x^2 - y^3 = 1 over |x| <= bound, with a proof-branch classification of
 * every solution found. */
catalan_status catalan_run_mordell(uint64_t bound, catalan_report** out);

/* x^4 - c y^2 = 1 over |x| <= bound, c in {2, 3}. */
catalan_status catalan_run_quartic(uint32_t c, uint64_t bound, catalan_report** out);

/* x^3 + y^3 = 2 z^3 over |x|,|y|,|z| <= bound, plus x^3 - 2 y^3 = +-1 over
 * |x| <= cube_bound. */
catalan_status catalan_run_wakulicz(uint64_t bound, uint64_t cube_bound,
                                    catalan_report** out);

/* x^2 - y^q = 1 over |x| <= x_bound for a prime q >= 5. */
catalan_status catalan_run_chao_ko(uint32_t q, uint64_t x_bound, catalan_report** out);

/* x^m - y^2 = 1 over 1 <= x <= x_bound for odd m >= 3. */
catalan_status catalan_run_lebesgue(uint32_t m, uint64_t x_bound, catalan_report** out);

/* x^p - y^q = 1 over 0 < |x|,|y| <= bound for odd primes p > q; hits are
 * checked against the divisibility relations q | x and p | y. */
catalan_status catalan_run_catalan_pq(uint32_t p, uint32_t q, uint64_t bound,
                                      uint32_t threads, catalan_report** out);

/* All perfect powers up to max and the consecutive pairs among them. */
catalan_status catalan_run_consecutive_powers(uint64_t max, uint32_t threads,
                                              catalan_report** out);

/* Double Wieferich pairs of odd primes up to limit. */
catalan_status catalan_run_wieferich(uint64_t limit, uint32_t threads,
                                     catalan_report** out);

/* Final elimination over odd primes q <= q_limit; the surviving exponent
 * pair is (19, 3). */
catalan_status catalan_run_deduction(uint64_t q_limit, catalan_report** out);

/* Taylor coefficients of ((1+X)^m - X^m)^{1/n} through degree l < m (odd n),
 * cross-checked against a formal power-series root. */
catalan_status catalan_run_fmn(uint32_t m, uint32_t n, uint32_t l,
                               catalan_report** out);

/* Factorization of re + im*i in Z[i] into canonical irreducibles; decimal
 * strings accept arbitrary magnitude. */
catalan_status catalan_factor_gaussian(const char* re, const char* im,
                                       catalan_report** out);

/* Named deterministic lemma suites. */
size_t catalan_lemma_count(void);
const char* catalan_lemma_name(size_t index); /* NULL when out of range */
catalan_status catalan_verify_lemma(const char* name, catalan_report** out);

#ifdef __cplusplus
}
#endif

#endif /* CATALAN_H */
