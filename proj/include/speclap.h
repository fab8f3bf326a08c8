#ifndef SPECLAP_H
#define SPECLAP_H

/* C interface to the transmission-graph spectral library.
 *
 * Documents are UTF-8 JSON strings; see README.md for the formats. Functions
 * returning text allocate it with malloc and hand ownership to the caller,
 * who frees it with speclap_string_free. On any non-OK status,
 * speclap_last_error() describes the failure for the calling thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum speclap_status {
  SPECLAP_OK = 0,
  SPECLAP_CHECK_FAILED = 1, /* command ran; a verification came out negative */
  SPECLAP_BAD_INPUT = 2,    /* malformed or inconsistent input */
  SPECLAP_ERROR = 3         /* numeric or internal failure */
} speclap_status;

/* Message for the most recent failing call on this thread; never NULL. */
const char* speclap_last_error(void);

/* Frees any string returned through a char** out parameter. NULL is a no-op. */
void speclap_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Opaque system handle                                                 */

typedef struct speclap_system speclap_system;

/* Parses a graph document (matrices optional; identity assumed when absent,
 * per-coordinate weights honored when present). */
speclap_status speclap_system_from_json(const char* doc, speclap_system** out);
void speclap_system_free(speclap_system* sys);

int speclap_system_vertex_count(const speclap_system* sys);
int speclap_system_dimension(const speclap_system* sys);
/* 1 when the system is Hermitian symmetric at tol, else 0. */
int speclap_system_is_hermitian(const speclap_system* sys, double tol);

/* Writes up to capacity eigenvalues (ascending by real part, then imaginary)
 * into re/im and stores the count written in *written. */
speclap_status speclap_system_eigenvalues(const speclap_system* sys, double tol,
                                          double* re, double* im, int capacity,
                                          int* written);

/* ------------------------------------------------------------------ */
/* JSON commands (the CLI is a thin shell over these)                   */

speclap_status speclap_spectrum_json(const char* doc, double tol, char** out);
speclap_status speclap_verify_json(const char* doc, double tol, int subset_sweep,
                                   int limit, char** out);
speclap_status speclap_bounds_json(const char* doc, const char* subset_csv,
                                   double tol, char** out);
speclap_status speclap_cayley_json(const char* doc, double tol, char** out);
speclap_status speclap_assoc_json(const char* doc, const char* subset_a_csv,
                                  const char* subset_b_csv, double tol, char** out);
speclap_status speclap_quantum_json(const char* doc, int spin, uint64_t seed,
                                    double tol, char** out);
speclap_status speclap_walk_json(const char* doc, double tol, char** out);
speclap_status speclap_collapse_json(const char* doc, const char* partition_doc,
                                     double tol, char** out);
speclap_status speclap_pushforward_json(const char* doc, const char* partition_doc,
                                        double tol, char** out);
speclap_status speclap_amalgamate_json(const char* doc, double tol, char** out);
speclap_status speclap_dual_json(const char* doc, char** out);
speclap_status speclap_random_json(const char* doc, int rank, uint64_t seed,
                                   char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECLAP_H */
