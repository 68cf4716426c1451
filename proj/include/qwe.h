/* qwe - quantum weight enumerator library, C API.
 *
 * All functions return a qwe_status; on failure qwe_last_error() describes
 * the problem.  Strings returned through char** are owned by the caller and
 * must be released with qwe_string_free().  Handles are opaque and freed
 * with their matching *_free function.
 */
#ifndef QWE_H
#define QWE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qwe_status {
    QWE_OK = 0,
    /* malformed input or violated precondition */
    QWE_ERR_CONTRACT = 2,
    /* a verified identity failed beyond tolerance, or another internal
       consistency check tripped */
    QWE_ERR_INTERNAL = 3
} qwe_status;

typedef struct qwe_code qwe_code;
typedef struct qwe_operator qwe_operator;

const char* qwe_version(void);

/* Thread-local message for the most recent failure. */
const char* qwe_last_error(void);

void qwe_string_free(char* s);

/* ---- code construction -------------------------------------------------- */

/* Stabilizer generator list: one signed Pauli word per line ('#' comments). */
qwe_status qwe_code_from_stabilizer(const char* text, qwe_code** out);

/* Built-in codes: "bell", "[[4,2,2]]", "[[5,1,3]]". */
qwe_status qwe_code_builtin(const char* name, qwe_code** out);

/* JSON document {"dims":[...], "vectors":[[[re,im],...],...]}; entries are
 * exact when given as ["p/q","r/s"] pairs. */
qwe_status qwe_code_from_vectors_json(const char* json_text, qwe_code** out);

void qwe_code_free(qwe_code* code);

/* ---- code analysis ------------------------------------------------------ */

/* Full report: weight distributions, polynomials, distance, purity,
 * erasures, inequality audit.  tol <= 0 selects the default 1e-9. */
qwe_status qwe_code_report(const qwe_code* code, double tol, char** json_out);

/* {"d":..., "pure":...} plus the witness weight. */
qwe_status qwe_code_distance(const qwe_code* code, double tol, char** json_out);

/* Erasure correctability for all subsets up to max_size (-1 = all). */
qwe_status qwe_code_erasures(const qwe_code* code, int max_size, double tol, char** json_out);

/* ---- constructions ------------------------------------------------------ */

/* Trace out one factor (1-based index) of a pure code. */
qwe_status qwe_code_shorten(const qwe_code* code, int factor, qwe_code** out);

/* Extend a rank-D projector by a new dim-D front factor (rank-1 result). */
qwe_status qwe_code_extend(const qwe_code* code, qwe_code** out);

/* Re-encode every factor of the outer code with a built-in encoder
 * ("identity", "[[5,1,3]]"). */
qwe_status qwe_code_concat(const qwe_code* outer, const char* encoder_name, qwe_code** out);

/* ---- operator pairs ----------------------------------------------------- */

/* JSON document {"dims":[...], "entries":[[re,im],...]} row-major. */
qwe_status qwe_operator_from_json(const char* json_text, qwe_operator** out);
void qwe_operator_free(qwe_operator* op);

/* All four subset enumerator tables for a pair of operators. */
qwe_status qwe_pair_enumerate(const qwe_operator* m1, const qwe_operator* m2, char** json_out);

/* ---- polynomial transforms ---------------------------------------------- */

/* kind: "macwilliams", "shadow", "to-primed", "from-primed".
 * coeffs: comma-separated exact values ("p/q" allowed), degree-ascending
 * in y.  Result in the same format. */
qwe_status qwe_transform(const char* coeffs, int block_dim, const char* kind, char** out);

/* ---- stochastic checks -------------------------------------------------- */

/* Shadow-positivity fuzz over random PSD pairs; JSON array of trial
 * records, deterministic under fixed seed. */
qwe_status qwe_fuzz_shadow(int max_n, int max_d, long trials, unsigned long long seed,
                           char** json_out);

/* Monte-Carlo Haar estimate of A'_S/B'_S ("Aprime"/"Bprime") against the
 * exact partial-trace value.  subset holds 1-based factor indices. */
qwe_status qwe_haar_check(const qwe_operator* m1, const qwe_operator* m2, const int* subset,
                          int subset_len, const char* kind, long samples,
                          unsigned long long seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* QWE_H */
