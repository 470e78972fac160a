/*
   Copyright 2026 the maxkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * maxkernel C API.
 *
 * The library computes with sigma-linearized polynomials over finite field
 * towers F_p c F_q c F_{q^n}: kernel dimensions, maximum-kernel trinomial
 * characterizations, minimum-weight censuses, quasi-subfield checks, and
 * cyclic subspace (orbit) codes.
 *
 * Conventions:
 *  - all functions return mk_status; MK_OK is 0. On failure, mk_last_error()
 *    returns a thread-local message describing the most recent error.
 *  - field elements cross the boundary as hex strings of their packed value
 *    sum_i c_i p^i (digits c_i in the polynomial basis, constant term first).
 *  - every char** output is a NUL-terminated heap string owned by the caller;
 *    release it with mk_string_free. JSON documents carry
 *    {"schema": "maxkernel/1"}; counts that may exceed 64 bits are decimal
 *    strings.
 *  - handles are opaque and single-owner; *_free tolerates NULL.
 */

#ifndef MAXKERNEL_H
#define MAXKERNEL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mk_status {
    MK_OK = 0,
    MK_ERR_NONPRIME_P = 1,
    MK_ERR_GCD_VIOLATION = 2,
    MK_ERR_FIELD_TOO_LARGE = 3,
    MK_ERR_DIVISION_BY_ZERO = 4,
    MK_ERR_NON_DIVISOR = 5,
    MK_ERR_ZERO_POLYNOMIAL = 6,
    MK_ERR_NOT_MONIC_NEGATED = 7,
    MK_ERR_INDEX_OUT_OF_RANGE = 8,
    MK_ERR_HYPOTHESIS_VIOLATED = 9,
    MK_ERR_RANGE = 10,
    MK_ERR_PRECONDITION_FAILED = 11,
    MK_ERR_BUDGET_EXCEEDED = 12,
    MK_ERR_NOT_SUBSPACE = 13,
    MK_ERR_SIGMA_MISMATCH = 14,
    MK_ERR_MALFORMED_SHAPE = 15,
    MK_ERR_NO_ROOT = 16,
    MK_ERR_UNKNOWN_TARGET = 17,
    MK_ERR_BAD_ARGUMENT = 18,
    MK_ERR_INTERNAL = 19
} mk_status;

typedef struct mk_field mk_field;  /* the tower F_p c F_{p^h} c F_{p^{hn}} with sigma */
typedef struct mk_poly mk_poly;   /* a sigma-linearized polynomial over that field */

/* ------------------------------------------------------------------ basics */

unsigned mk_abi_version(void);
const char* mk_status_name(mk_status st);
/* Thread-local message for the most recent failing call in this thread. */
const char* mk_last_error(void);
void mk_string_free(char* s);

/* ------------------------------------------------------------------ fields */

/* q = p^h, sigma: x -> x^{q^s} on F_{q^n}. Picks the deterministic smallest
 * irreducible modulus. Constraints: p prime, gcd(s, n) = 1, p^{hn} <= 2^126. */
mk_status mk_field_create(uint64_t p, uint32_t h, uint32_t n, uint32_t s, mk_field** out);
/* Accepts the JSON record of mk_field_to_json (modulus optional). */
mk_status mk_field_from_json(const char* json_text, mk_field** out);
void mk_field_free(mk_field* f);
mk_status mk_field_to_json(const mk_field* f, char** json_out);

/* op is one of "add", "sub", "mul", "div". */
mk_status mk_element_op(const mk_field* f, const char* op, const char* a_hex, const char* b_hex,
                        char** out_hex);
/* sigma^j(a) = a^{q^{s j}}. */
mk_status mk_element_sigma(const mk_field* f, const char* a_hex, int64_t j, char** out_hex);
/* N_{q^n/q^t}(a); t must divide n. */
mk_status mk_element_norm(const mk_field* f, const char* a_hex, uint32_t t, char** out_hex);

/* -------------------------------------------------------------- polynomials */

/* coeff_hex[i] multiplies x^{sigma^i}. */
mk_status mk_poly_create(const mk_field* f, const char* const* coeff_hex, size_t count,
                         mk_poly** out);
/* a x + b x^sigma - x^{sigma^d}. */
mk_status mk_poly_trinomial(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                            mk_poly** out);
void mk_poly_free(mk_poly* g);
mk_status mk_poly_to_json(const mk_field* f, const mk_poly* g, char** json_out);
/* dim_{F_q} of the root space. */
mk_status mk_poly_kernel_dim(const mk_field* f, const mk_poly* g, uint32_t* out);
/* n - kernel dimension. */
mk_status mk_poly_weight(const mk_field* f, const mk_poly* g, uint32_t* out);

/* ------------------------------------------------------------- applications */

/* Verdict record {a, b, verdict, rule, witness[]} for a x + b x^sigma - x^{sigma^d},
 * dispatched to the sharpest applicable characterization. */
mk_status mk_classify(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                      char** verdict_json);

/* All maximum-kernel pairs (a, b), enumeration order; the budget caps the
 * number of kernel computations. */
mk_status mk_enumerate(const mk_field* f, uint32_t d, uint64_t budget, uint32_t workers,
                       char** json_out);

/* Weight distribution of the span of {x, x^sigma, x^{sigma^d}}; csv_out may be
 * NULL if only the JSON summary is wanted. */
mk_status mk_census(const mk_field* f, uint32_t d, uint64_t budget, uint32_t workers,
                    char** json_out, char** csv_out);

/* Orbit code of the kernel of a x + b x^sigma - x^{sigma^d}. Passing NULL for
 * a_hex/b_hex selects the first maximum-kernel pair in enumeration order.
 * certify != 0 computes the exact minimum distance (one-vs-all sweep). */
mk_status mk_build_code(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                        int certify, uint64_t budget, uint32_t workers, char** json_out);

/* Quasi-subfield clause flags for x^{q^d} - b x^q - a x. NULL b_hex derives
 * b = a^{-(sigma^d + sigma^{2d} + ... + sigma^{(d-1)d})}. */
mk_status mk_quasi(const mk_field* f, uint32_t d, const char* a_hex, const char* b_hex,
                   char** json_out);

/* Runs one verification target. Targets: gow, companion, main-system, mcg-abc,
 * even-family, d3, d4, neccond, pascal, prop33, cor34. format is "json" or
 * "text". pass_out receives 1 when every checked instance holds. */
mk_status mk_verify(const mk_field* f, const char* target, uint32_t d, uint64_t budget,
                    uint64_t seed, uint32_t workers, const char* format, int* pass_out,
                    char** report_out);

/* Newline-separated list of the valid verify targets. */
mk_status mk_verify_targets(char** out);

#ifdef __cplusplus
}
#endif

#endif /* MAXKERNEL_H */
