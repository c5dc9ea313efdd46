#ifndef ZIEGLER_H
#define ZIEGLER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Arithmetic used for the heavy computations.
typedef enum ZieglerBackend {
  // Two primes, a third one on disagreement.
  ZIEGLER_BACKEND_TWO_PRIME = 0,
  // Three primes, majority vote.
  ZIEGLER_BACKEND_CERTIFY = 1,
  // Exact arithmetic over the input field.
  ZIEGLER_BACKEND_EXACT = 2,
} ZieglerBackend;

// Result of every call.
typedef enum ZieglerStatus {
  ZIEGLER_STATUS_OK = 0,
  ZIEGLER_STATUS_NULL_POINTER = 1,
  ZIEGLER_STATUS_INVALID_UTF8 = 2,
  ZIEGLER_STATUS_PARSE = 3,
  ZIEGLER_STATUS_COMPUTE = 4,
  ZIEGLER_STATUS_UNSUPPORTED = 5,
  ZIEGLER_STATUS_BUFFER_TOO_SMALL = 6,
  ZIEGLER_STATUS_OUT_OF_RANGE = 7,
  ZIEGLER_STATUS_PANIC = 8,
} ZieglerStatus;

// A parsed arrangement.
typedef struct ZieglerArrangement ZieglerArrangement;

// Generator degrees of the steps of a minimal resolution.
typedef struct ZieglerBetti ZieglerBetti;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until
// the next call on the same thread.
const char *ziegler_last_error(void);

// Parses an arrangement in the text format. On success `*out` owns a
// handle to release with `ziegler_arrangement_free`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum ZieglerStatus ziegler_arrangement_parse(const char *text, struct ZieglerArrangement **out);

// # Safety
// `a` must come from `ziegler_arrangement_parse` and not be used again.
void ziegler_arrangement_free(struct ZieglerArrangement *a);

// Number of hyperplanes and number of variables.
//
// # Safety
// All pointers must be valid.
enum ZieglerStatus ziegler_arrangement_size(const struct ZieglerArrangement *a,
                                            size_t *hyperplanes,
                                            size_t *nvars);

// Total Tjurina number of a line arrangement.
//
// # Safety
// All pointers must be valid.
enum ZieglerStatus ziegler_tjurina(const struct ZieglerArrangement *a, int64_t *out);

// Whether the intersection lattices are isomorphic.
//
// # Safety
// All pointers must be valid.
enum ZieglerStatus ziegler_lattice_isomorphic(const struct ZieglerArrangement *a,
                                              const struct ZieglerArrangement *b,
                                              bool *out);

// Minimal resolution of the Jacobian syzygy module. On success `*out`
// owns a handle to release with `ziegler_betti_free`.
//
// # Safety
// All pointers must be valid.
enum ZieglerStatus ziegler_betti(const struct ZieglerArrangement *a,
                                 enum ZieglerBackend mode,
                                 struct ZieglerBetti **out);

// # Safety
// `b` must come from `ziegler_betti` and not be used again.
void ziegler_betti_free(struct ZieglerBetti *b);

// Number of nonempty steps.
//
// # Safety
// All pointers must be valid.
enum ZieglerStatus ziegler_betti_steps(const struct ZieglerBetti *b, size_t *out);

// Copies the sorted degrees of step `step` (0 for the generators) into
// `buf`. `*len` receives the number of degrees; with a short buffer the
// call returns `BUFFER_TOO_SMALL` and copies nothing.
//
// # Safety
// `buf` must hold `cap` elements (it may be NULL when `cap` is 0).
enum ZieglerStatus ziegler_betti_degrees(const struct ZieglerBetti *b,
                                         size_t step,
                                         uint32_t *buf,
                                         size_t cap,
                                         size_t *len);

// Exponent notation such as `d=(5,6_3), c=(7,8)`; free the result with
// `ziegler_string_free`.
//
// # Safety
// `b` must be a valid handle.
char *ziegler_betti_to_string(const struct ZieglerBetti *b);

// # Safety
// `s` must come from this library and not be used again.
void ziegler_string_free(char *s);

// Hilbert function of the Jacobian algebra in degrees `0 .. count`.
//
// # Safety
// `buf` must hold `count` elements.
enum ZieglerStatus ziegler_hilbert_function(const struct ZieglerArrangement *a,
                                            enum ZieglerBackend mode,
                                            int64_t *buf,
                                            size_t count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZIEGLER_H */
