/* C interface to the qec library: CSS and enlarged-CSS quantum codes from
 * classical BCH codes.
 *
 * Conventions:
 *   - handles are opaque; create with *_new-style constructors, release with
 *     the matching *_free (freeing NULL is a no-op)
 *   - fallible calls return a qec_status (QEC_OK == 0) and write results
 *     through out-pointers, which are untouched on failure
 *   - string/list outputs use a two-call pattern: pass NULL for the buffer
 *     to query the required size
 */

#ifndef QEC_H
#define QEC_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct QecCode QecCode;               /* classical [n, k] linear code */
typedef struct QecQuantumCode QecQuantumCode; /* [[n, K, D]] stabilizer code */

typedef int32_t qec_status;

enum {
    QEC_OK = 0,
    QEC_ERR_NULL_POINTER = 1,
    QEC_ERR_INVALID_ARGUMENT = 2,
    QEC_ERR_EVEN_LENGTH = 3,
    QEC_ERR_UNSUPPORTED_DEGREE = 4,
    QEC_ERR_DUAL_CONDITION = 5,
    QEC_ERR_NOT_A_SUBCODE = 6,
    QEC_ERR_INSUFFICIENT_ENLARGEMENT = 7,
    QEC_ERR_SINGULAR = 8,
    QEC_ERR_BAD_DATA = 9,
    QEC_ERR_BUFFER_TOO_SMALL = 10,
    QEC_ERR_UNVERIFIED = 11,
    QEC_ERR_INTERNAL = 12
};

enum {
    QEC_BOUND_SPHERE_PACKING = 0,
    QEC_BOUND_MRRW = 1
};

enum {
    QEC_FAMILY_ENLARGED = 0,
    QEC_FAMILY_CSS = 1
};

/* Short human-readable description of a status code. Never NULL; the
 * storage is static. */
const char *qec_status_message(qec_status status);

/* ---- classical codes ---- */

/* BCH code of odd length n, starting exponent b, designed distance
 * delta >= 2; extend appends an overall parity bit. */
qec_status qec_bch_new(uint32_t n, uint32_t b, uint32_t delta, bool extend,
                       QecCode **out);

/* The [n, n-1, 2] code of all even-weight words (n >= 2). */
qec_status qec_even_weight_new(uint32_t n, QecCode **out);

void qec_code_free(QecCode *code);

uint32_t qec_code_length(const QecCode *code);
uint32_t qec_code_dimension(const QecCode *code);

/* Matrix-level check that the code contains its own dual. */
qec_status qec_code_is_dual_containing(const QecCode *code, bool *out);

/* Exact minimum distance within the budgets (QEC_OK), or the best known
 * lower bound with QEC_ERR_UNVERIFIED when both budgets run out. */
qec_status qec_code_min_distance(const QecCode *code, uint64_t max_codewords,
                                 uint64_t max_column_subsets,
                                 uint32_t *out_distance);

/* ---- quantum codes ---- */

/* Enlarged construction: subcode must contain its dual and sit inside
 * supercode with dimension gap at least 2. Yields
 * [[n, k + k' - n, min(d, ceil(3 d'/2))]]. */
qec_status qec_enlarge(const QecCode *subcode, const QecCode *supercode,
                       QecQuantumCode **out);

/* Plain CSS construction from codes with dual(c1) contained in c2. */
qec_status qec_css(const QecCode *c1, const QecCode *c2,
                   QecQuantumCode **out);

void qec_quantum_code_free(QecQuantumCode *code);

uint32_t qec_quantum_code_qubits(const QecQuantumCode *code);
uint32_t qec_quantum_code_logical_dimension(const QecQuantumCode *code);

/* Construction-formula distance claim, when one exists. */
qec_status qec_quantum_code_claimed_distance(const QecQuantumCode *code,
                                             uint32_t *out_distance,
                                             bool *out_present);

/* Exhaustive distance and purity over at most max_vectors generator-space
 * vectors; QEC_ERR_UNVERIFIED when the space exceeds the budget. */
qec_status qec_quantum_code_distance(const QecQuantumCode *code,
                                     uint64_t max_vectors,
                                     uint32_t *out_distance, bool *out_pure);

/* Text interchange format: "n=<n> K=<K>" header then one Pauli string per
 * line. out_len receives the required byte count including the NUL. */
qec_status qec_quantum_code_to_text(const QecQuantumCode *code, char *buf,
                                    size_t buf_len, size_t *out_len);

/* Parse either the text or the JSON interchange format. */
qec_status qec_quantum_code_from_text(const char *text,
                                      QecQuantumCode **out);

/* ---- scans and bounds ---- */

/* Odd lengths 1 < n <= limit whose coset C_1 avoids n - 1. */
qec_status qec_scan_nonprimitive(uint32_t limit, uint32_t *buf,
                                 size_t buf_len, size_t *out_count);

/* Largest dual-containing designed distance at odd length n. */
qec_status qec_max_dual_containing_delta(uint32_t n, uint32_t *out);

/* Relative-distance threshold (QEC_BOUND_*, QEC_FAMILY_*) below which the
 * construction keeps positive asymptotic rate. */
qec_status qec_rate_threshold(int32_t kind, int32_t family, double *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QEC_H */
