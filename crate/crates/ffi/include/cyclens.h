#ifndef CYCLENS_H
#define CYCLENS_H

/* Generated by cbindgen from cyclens-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call; mirrors the CLI exit codes.
typedef enum CyclensStatus {
  // Success.
  CYCLENS_STATUS_OK = 0,
  // A precondition on the mathematical inputs was violated.
  CYCLENS_STATUS_PRECONDITION = 1,
  // A data file could not be read, parsed, or validated.
  CYCLENS_STATUS_DATA = 2,
  // Internal consistency failure (a library bug or corrupted state).
  CYCLENS_STATUS_INTERNAL = 3,
  // Invalid use of the ABI itself: null pointer or malformed string.
  CYCLENS_STATUS_USAGE = 4,
} CyclensStatus;

// Opaque holder of loaded class-group records.
typedef struct CyclensContext CyclensContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string; never freed.
const char *cyclens_version(void);

// Message for the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next failing call on the same thread;
// do not free it.
const char *cyclens_last_error(void);

// Release a string returned by any `*_json` or `*_decimal` call.
// Passing NULL is a no-op.
void cyclens_string_free(char *s);

// Create a context backed by the bundled class-group table.
enum CyclensStatus cyclens_context_new_bundled(struct CyclensContext **out);

// Create a context from a class-group data file (same line format as the
// bundled table).
enum CyclensStatus cyclens_context_new_from_file(const char *path, struct CyclensContext **out);

// Free a context created by either constructor.  Passing NULL is a no-op.
void cyclens_context_free(struct CyclensContext *ctx);

// Classification of free C_ell-actions on S^1 x S^n, as JSON.
enum CyclensStatus cyclens_classify_json(const struct CyclensContext *ctx,
                                         uint64_t ell,
                                         uint64_t n,
                                         char **out);

// Number of classification strata for group order `ell` and
// half-dimension `k`.
enum CyclensStatus cyclens_stratum_count(uint64_t ell, uint64_t k, uint64_t *out);

// The unit-class partition `Q_d^k`, as JSON.
enum CyclensStatus cyclens_qdk_json(uint64_t d, uint64_t k, char **out);

// The fiber bound `8 gcd(k, phi(d)/2)` of the classification map.
enum CyclensStatus cyclens_indeterminacy_bound(uint64_t d, uint64_t k, uint64_t *out);

// Order bookkeeping for `hMod(d, k)`, as JSON.
enum CyclensStatus cyclens_hmod_json(uint64_t d, uint64_t k, char **out);

// Coinvariants `H_0(C_2; Cl_p)` deduced from the context's records, as
// JSON.
enum CyclensStatus cyclens_h0_json(const struct CyclensContext *ctx, uint64_t p, char **out);

// Full comparison of two lens spaces `L(d; q)` and `L(d; q2)`: homotopy
// equivalence, homeomorphism (with a witness when one exists), and
// whether the rho vectors differ — as JSON.
enum CyclensStatus cyclens_lens_compare_json(uint64_t d,
                                             const uint64_t *q,
                                             size_t q_len,
                                             const uint64_t *q2,
                                             size_t q2_len,
                                             char **out);

// The rho vector of `L(d; q)`, as JSON.
enum CyclensStatus cyclens_rho_json(uint64_t d, const uint64_t *q, size_t q_len, char **out);

// Minus class number `h_p^-` of `Q(zeta_p)` as a decimal string
// (`p` an odd prime, `p <= 300`).
enum CyclensStatus cyclens_minus_class_number_decimal(uint64_t p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLENS_H */
