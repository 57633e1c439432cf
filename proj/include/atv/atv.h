/* C interface to the invariant library. All handles are opaque; every
 * function returns an atv_status, with ATV_OK == 0 on success. Output
 * strings are heap-allocated and must be released with atv_string_free.
 * On failure, atv_last_error() returns a thread-local message. */
#ifndef ATV_ATV_H
#define ATV_ATV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct atv_complex atv_complex;

typedef enum atv_status {
    ATV_OK = 0,
    ATV_ERR_PARSE = 1,
    ATV_ERR_VALIDATION = 2,
    ATV_ERR_DEGREE = 3,
    ATV_ERR_NOT_CONNECTED = 4,
    ATV_ERR_CAP_EXCEEDED = 5,
    ATV_ERR_INVALID_ARG = 6,
    ATV_ERR_INCONSISTENT = 7,
    ATV_ERR_ILL_FORMED = 8,
    ATV_ERR_INTERNAL = 9
} atv_status;

/* Message for the most recent failure on this thread. */
const char* atv_last_error(void);

void atv_string_free(char* s);

/* --- construction --------------------------------------------------- */

/* Parse the chain-complex text format; validates dd = 0. */
atv_status atv_complex_from_text(const char* text, atv_complex** out);

/* Builtin spec, e.g. "sphere-min:3", "sphere3-fig", "lens:5:1",
 * or tensor products joined by 'x': "lens:3:1xsphere-min:2". */
atv_status atv_complex_builtin(const char* spec, atv_complex** out);

void atv_complex_free(atv_complex* cc);

/* --- inspection ----------------------------------------------------- */

atv_status atv_complex_dim(const atv_complex* cc, size_t* out_dim);
atv_status atv_complex_rank(const atv_complex* cc, size_t p, size_t* out_rank);
atv_status atv_complex_name(const atv_complex* cc, char** out_name);
atv_status atv_complex_to_text(const atv_complex* cc, char** out_text);
atv_status atv_complex_validate(const atv_complex* cc);

/* Betti number and torsion coefficients ("z1,z2,..." or "") of H_p. */
atv_status atv_homology(const atv_complex* cc, size_t p, size_t* out_betti,
                        char** out_torsion);

/* --- invariants ------------------------------------------------------
 * method strings: tv "brute" | "snf" | "formula" | "closed_form",
 * normalization "closed" | "tqft", bf "torsion" | "pairing".
 * Rational results come back as decimal numerator/denominator strings. */

atv_status atv_tv(const atv_complex* cc, size_t p, long k, const char* method,
                  const char* normalization, char** out_num, char** out_den);

/* "pairing" needs either torsion-free homology or lens metadata (Q = s/r). */
atv_status atv_bf(const atv_complex* cc, size_t p, long k, const char* method,
                  char** out_value);

/* Discrete BF double sum; equals the closed-normalization TV value. */
atv_status atv_dbf(const atv_complex* cc, size_t p, long k, char** out_num,
                   char** out_den);

/* BF <-> TV relation. *out_ok is 1 when bf == factor * tv exactly. */
atv_status atv_relation(const atv_complex* cc, size_t p, long k, int* out_ok,
                        char** out_bf, char** out_tv_num, char** out_tv_den,
                        char** out_factor_num, char** out_factor_den);

#ifdef __cplusplus
}
#endif

#endif /* ATV_ATV_H */
