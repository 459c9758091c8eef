#ifndef QPS_H
#define QPS_H

/* C interface to the qubit phase-space library: GF(2^N) fields, coset
 * partitions, MUB and survivor tables, and discrete Wigner functions.
 *
 * Every function returns QPS_OK (0) on success. On failure it returns a
 * nonzero status and qps_last_error() describes the problem for the calling
 * thread. Strings handed back through char** are heap-allocated; release
 * them with qps_string_free. Handles are destroyed with their *_destroy
 * function; destroying NULL is a no-op.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qps_field qps_field;
typedef struct qps_partition qps_partition;
typedef struct qps_state qps_state;

typedef enum qps_status {
    QPS_OK = 0,
    QPS_ERR_INVALID_ARGUMENT = 1, /* misuse of the API surface itself */
    QPS_ERR_VALIDATION = 2,       /* mathematically or semantically invalid input */
    QPS_ERR_IO = 3,
    QPS_ERR_INTERNAL = 4
} qps_status;

const char* qps_last_error(void);
void qps_string_free(char* s);

/* modulus: bit i = coefficient of x^i; pass 0 for the default modulus
 * (x^2+x+1, x^3+x+1, x^4+x+1, ... smallest primitive polynomial). */
qps_status qps_field_create(int degree, uint32_t modulus, qps_field** out);
void qps_field_destroy(qps_field* f);
int qps_field_degree(const qps_field* f);
uint32_t qps_field_modulus(const qps_field* f);
/* {"degree":..., "modulus":[c0..cN]} */
qps_status qps_field_json(const qps_field* f, int pretty, char** out);

/* basis_labels: comma-separated element labels over the big field, e.g.
 * "1,s1" for {1, sigma}; "0" is the zero element, "s<k>" is sigma^k. */
qps_status qps_partition_create_general(const qps_field* f, int m, const char* basis_labels,
                                        qps_partition** out);
qps_status qps_partition_create_subfield(const qps_field* f, int m, qps_partition** out);
void qps_partition_destroy(qps_partition* p);
/* field document plus "cosets": [[exponent labels]], -1 for zero */
qps_status qps_partition_json(const qps_partition* p, int pretty, char** out);

/* format: "text" or "json" */
qps_status qps_mub_table(const qps_field* f, const char* format, char** out);

/* cnots: "c:t,c:t,..." with 1-based qubit indices, or NULL for none. */
qps_status qps_survivor_table(const qps_partition* p, const char* cnots, const char* format,
                              char** out);

/* State files: {"dim": 2^N, "kind": "vector"|"density", "data": ...} with
 * complex entries as [re, im] pairs. */
qps_status qps_state_load_file(const char* path, qps_state** out);
qps_status qps_state_parse_json(const char* json_text, qps_state** out);
void qps_state_destroy(qps_state* s);
int qps_state_dim(const qps_state* s);

/* format: "csv" or "json" */
qps_status qps_wigner(const qps_field* f, const qps_state* s, const char* format, char** out);
qps_status qps_coarse_wigner(const qps_partition* p, const qps_state* s, const char* format,
                             char** out);

/* paulis: comma- or whitespace-separated Pauli strings, e.g. "ZZZ,XXX,iZX".
 * format: "text" (one per line) or "json". */
qps_status qps_conjugate_paulis(const char* paulis, const char* cnots, const char* format,
                                char** out);

#ifdef __cplusplus
}
#endif

#endif /* QPS_H */
