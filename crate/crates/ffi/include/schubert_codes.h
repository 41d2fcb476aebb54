#ifndef SCHUBERT_CODES_H
#define SCHUBERT_CODES_H

/* This file is generated by cbindgen from the schubert-codes-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every FFI call.
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  // A required pointer argument was null.
  SC_STATUS_NULL_ARGUMENT = 1,
  // Arguments fail a precondition (bad codes, shapes, duplicate
  // codewords, rank-deficient generators, ...).
  SC_STATUS_INVALID_ARGUMENT = 2,
  // Arithmetic domain error such as division by zero.
  SC_STATUS_DOMAIN_ERROR = 3,
  // The instance is infeasible (operator-channel dimensions).
  SC_STATUS_INFEASIBLE = 4,
  // An enumeration would exceed the configured budget.
  SC_STATUS_BUDGET_EXCEEDED = 5,
  // The caller's buffer is too small; the required size was reported.
  SC_STATUS_BUFFER_TOO_SMALL = 6,
  // Unexpected internal failure.
  SC_STATUS_INTERNAL_ERROR = 7,
} ScStatus;

// Metric selector for distances and decoding.
typedef enum ScMetric {
  SC_METRIC_INJECTION = 0,
  SC_METRIC_SUBSPACE = 1,
} ScMetric;

// List-decoder route selector.
typedef enum ScDecodeMethod {
  // Per-codeword distance computation.
  SC_DECODE_METHOD_ORACLE = 0,
  // Pluecker ball equations around the received word.
  SC_DECODE_METHOD_PLUECKER = 1,
} ScDecodeMethod;

// Opaque subspace-code handle.
typedef struct ScCode ScCode;

// Opaque decoder-result handle.
typedef struct ScDecodeResult ScDecodeResult;

// Opaque finite field handle.
typedef struct ScField ScField;

// Opaque subspace handle (canonical RREF generator inside).
typedef struct ScSubspace ScSubspace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version string of the underlying library; static storage, do not free.
const char *sc_version(void);

// Human-readable name of a status code; static storage, do not free.
const char *sc_status_name(enum ScStatus status);

// Creates GF(p^m). `modulus` lists `modulus_len` coefficients of a monic
// irreducible polynomial in ascending degree (length m+1); pass NULL with
// length 0 for prime fields or the built-in default moduli.
//
// # Safety
// `modulus` must point to `modulus_len` readable elements or be NULL, and
// `out` must be a valid pointer.
enum ScStatus sc_field_create(uint64_t p,
                              uint32_t m,
                              const uint16_t *modulus,
                              size_t modulus_len,
                              struct ScField **out);

// Creates a field from its spec string (`p` or `p^m:c0,c1,...,cm`).
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be valid.
enum ScStatus sc_field_from_spec(const char *spec, struct ScField **out);

// # Safety
// `field` must be a live handle from this library or NULL.
void sc_field_free(struct ScField *field);

// # Safety
// `field` must be a live handle; `out` a valid pointer.
enum ScStatus sc_field_order(const struct ScField *field, uint64_t *out);

// # Safety
// `field` must be a live handle; `out` a valid pointer.
enum ScStatus sc_field_characteristic(const struct ScField *field, uint64_t *out);

// Multiplicative inverse; fails with a domain error when `a = 0`.
//
// # Safety
// `field` must be a live handle; `out` a valid pointer.
enum ScStatus sc_field_inv(const struct ScField *field, uint16_t a, uint16_t *out);

// Builds the subspace spanned by a full-rank `rows x cols` generator given
// as `rows * cols` element codes in row-major order; the handle stores the
// canonical RREF representative.
//
// # Safety
// `field` must be a live handle; `codes` must point to `codes_len` readable
// elements; `out` must be valid.
enum ScStatus sc_subspace_create(const struct ScField *field,
                                 size_t rows,
                                 size_t cols,
                                 const uint16_t *codes,
                                 size_t codes_len,
                                 struct ScSubspace **out);

// # Safety
// `subspace` must be a live handle from this library or NULL.
void sc_subspace_free(struct ScSubspace *subspace);

// # Safety
// `subspace` must be a live handle; `out` a valid pointer.
enum ScStatus sc_subspace_dim(const struct ScSubspace *subspace, size_t *out);

// # Safety
// `subspace` must be a live handle; `out` a valid pointer.
enum ScStatus sc_subspace_ambient(const struct ScSubspace *subspace, size_t *out);

// Copies the canonical generator (dim * ambient codes, row-major) into the
// caller's buffer; `required` receives the element count needed.
//
// # Safety
// `subspace` must be a live handle; `buf` must point to `buf_len` writable
// elements or be NULL (size query); `required` may be NULL.
enum ScStatus sc_subspace_generator(const struct ScSubspace *subspace,
                                    uint16_t *buf,
                                    size_t buf_len,
                                    size_t *required);

// # Safety
// Both handles must be live; `out` a valid pointer.
enum ScStatus sc_subspace_equal(const struct ScSubspace *a, const struct ScSubspace *b, bool *out);

// Distance between two subspaces in the chosen metric.
//
// # Safety
// Both handles must be live; `out` a valid pointer.
enum ScStatus sc_distance(const struct ScSubspace *a,
                          const struct ScSubspace *b,
                          enum ScMetric metric,
                          uint64_t *out);

// Normalized Pluecker coordinates (C(n,k) element codes in lexicographic
// index-tuple order); `required` receives the coordinate count.
//
// # Safety
// `subspace` must be a live handle; `buf` must point to `buf_len` writable
// elements or be NULL (size query); `required` may be NULL.
enum ScStatus sc_pluecker_embed(const struct ScSubspace *subspace,
                                uint16_t *buf,
                                size_t buf_len,
                                size_t *required);

// Membership of `candidate` in the radius-`t` injection ball around
// `center`, decided via the Pluecker linear system.
//
// # Safety
// Both handles must be live; `out` a valid pointer.
enum ScStatus sc_ball_contains(const struct ScSubspace *center,
                               size_t t,
                               const struct ScSubspace *candidate,
                               bool *out);

// Number of k-dimensional subspaces of GF(q)^n as a decimal string.
//
// # Safety
// `buf` must point to `buf_len` writable bytes or be NULL (size query);
// `required` may be NULL.
enum ScStatus sc_gaussian_binomial(size_t n,
                                   size_t k,
                                   uint64_t q,
                                   char *buf,
                                   size_t buf_len,
                                   size_t *required);

// The Schubert intersection count d(k,m) as a decimal string.
//
// # Safety
// `buf` must point to `buf_len` writable bytes or be NULL (size query);
// `required` may be NULL.
enum ScStatus sc_intersection_number(size_t k,
                                     size_t m,
                                     char *buf,
                                     size_t buf_len,
                                     size_t *required);

// Builds a subspace code from an array of subspace handles (cloned; the
// caller keeps ownership of the inputs).
//
// # Safety
// `words` must point to `count` live subspace handles; `out` must be valid.
enum ScStatus sc_code_create(const struct ScSubspace *const *words,
                             size_t count,
                             struct ScCode **out);

// # Safety
// `code` must be a live handle from this library or NULL.
void sc_code_free(struct ScCode *code);

// # Safety
// `code` must be a live handle; `out` a valid pointer.
enum ScStatus sc_code_len(const struct ScCode *code, size_t *out);

// Minimum pairwise distance of the code (needs at least two codewords).
//
// # Safety
// `code` must be a live handle; `out` a valid pointer.
enum ScStatus sc_code_min_distance(const struct ScCode *code, enum ScMetric metric, uint64_t *out);

// All closest codewords to the received word.
//
// # Safety
// Handles must be live; `out` must be valid.
enum ScStatus sc_min_distance_decode(const struct ScCode *code,
                                     const struct ScSubspace *received,
                                     enum ScMetric metric,
                                     struct ScDecodeResult **out);

// All codewords within distance `radius` of the received word.
//
// # Safety
// Handles must be live; `out` must be valid.
enum ScStatus sc_list_decode(const struct ScCode *code,
                             const struct ScSubspace *received,
                             size_t radius,
                             enum ScMetric metric,
                             enum ScDecodeMethod method,
                             struct ScDecodeResult **out);

// # Safety
// `result` must be a live handle from this library or NULL.
void sc_decode_result_free(struct ScDecodeResult *result);

// # Safety
// `result` must be a live handle; `out` a valid pointer.
enum ScStatus sc_decode_result_len(const struct ScDecodeResult *result, size_t *out);

// Whether a strictly closest codeword exists.
//
// # Safety
// `result` must be a live handle; `out` a valid pointer.
enum ScStatus sc_decode_result_unique(const struct ScDecodeResult *result, bool *out);

// Codeword at `index` of the sorted result list, returned as a fresh handle
// the caller must free; `distance` may be NULL when only the word matters.
//
// # Safety
// `result` must be a live handle; `out` must be valid; `distance` may be
// NULL.
enum ScStatus sc_decode_result_entry(const struct ScDecodeResult *result,
                                     size_t index,
                                     struct ScSubspace **out,
                                     uint64_t *distance);

// Sends a subspace through the operator channel (`erasures` dimension
// decrease, `insertions` dimension increase, deterministic per `seed`) and
// returns the received word as a fresh handle.
//
// # Safety
// `sent` must be a live handle; `out` must be valid.
enum ScStatus sc_channel_transmit(const struct ScSubspace *sent,
                                  size_t erasures,
                                  size_t insertions,
                                  uint64_t seed,
                                  struct ScSubspace **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_CODES_H */
