/* C interface of the su2-holevo library. Generated by cbindgen; do not edit. */

#ifndef SU2_HOLEVO_H
#define SU2_HOLEVO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum Su2hStatus {
  SU2H_STATUS_OK = 0,
  // A required pointer argument was null.
  SU2H_STATUS_NULL_POINTER = 1,
  // A scalar argument was outside its domain (two_j = 0, F outside [0,1],
  // a frame off the unit sphere, ...).
  SU2H_STATUS_INVALID_ARGUMENT = 2,
  // The provided buffer cannot hold the result; the required length has
  // been written to the size out-parameter.
  SU2H_STATUS_BUFFER_TOO_SMALL = 3,
  // An internal numerical contract failed (should not happen for valid
  // inputs).
  SU2H_STATUS_NUMERICAL_FAILURE = 4,
} Su2hStatus;

// Logarithm base selector: bits or nats.
typedef enum Su2hLogBase {
  SU2H_LOG_BASE_TWO = 0,
  SU2H_LOG_BASE_E = 1,
} Su2hLogBase;

// Opaque handle to one `(j, F)` state.
typedef struct Su2hState Su2hState;

// The three entropies of one evaluation; `chi` equals
// `marginal_entropy - mean_conditional_entropy`.
typedef struct Su2hHolevo {
  double chi;
  double marginal_entropy;
  double mean_conditional_entropy;
} Su2hHolevo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a state handle for spin `two_j / 2` and parameter `f`, writing it
// to `out`. The handle must be released with `su2h_state_free`.
// # Safety
// `out` must be valid for writing one pointer.
enum Su2hStatus su2h_state_new(uint32_t two_j, double f, struct Su2hState **out);

// Releases a handle created by `su2h_state_new`. Null is a no-op.
// # Safety
// `state` must be null or a pointer obtained from `su2h_state_new` that
// has not been freed yet.
void su2h_state_free(struct Su2hState *state);

// Reads back the doubled spin of a handle.
// # Safety
// `state` must be a live handle (or null) and `out` valid for one write.
enum Su2hStatus su2h_state_two_j(const struct Su2hState *state, uint32_t *out);

// Reads back the parameter F of a handle.
// # Safety
// `state` must be a live handle (or null) and `out` valid for one write.
enum Su2hStatus su2h_state_f(const struct Su2hState *state, double *out);

// The parameter value `j/(2j+1)` at which the Holevo quantity vanishes.
// # Safety
// `out` must be valid for writing one double.
enum Su2hStatus su2h_holevo_zero_f(uint32_t two_j, double *out);

// The separability threshold `2j/(2j+1)`: the state is separable exactly
// for `F` at or below it.
// # Safety
// `out` must be valid for writing one double.
enum Su2hStatus su2h_separability_f(uint32_t two_j, double *out);

// Closed-form Holevo quantity of the state; identical for every measured
// axis.
// # Safety
// `state` must be a live handle (or null) and `out` valid for one write.
enum Su2hStatus su2h_holevo_closed(const struct Su2hState *state,
                                   enum Su2hLogBase base,
                                   struct Su2hHolevo *out);

// Holevo quantity through the full matrix pipeline for the measurement
// frame `(t, y1, y2, y3)` (which must sit on the unit 3-sphere). Agrees
// with `su2h_holevo_closed` for every frame; exposed so bindings can run
// the same cross-check as the native test suite.
// # Safety
// `state` must be a live handle (or null) and `out` valid for one write.
enum Su2hStatus su2h_holevo_numeric(const struct Su2hState *state,
                                    double t,
                                    double y1,
                                    double y2,
                                    double y3,
                                    enum Su2hLogBase base,
                                    struct Su2hHolevo *out);

// The `2j + 1` eigenvalues shared by both post-measurement conditional
// states, independent of the measured axis. `written` always receives the
// required length, so a call with `capacity = 0` sizes the buffer.
// # Safety
// `state` must be a live handle (or null), `written` valid for one write,
// and `out` valid for `capacity` doubles when `capacity > 0`.
enum Su2hStatus su2h_conditional_spectrum(const struct Su2hState *state,
                                          double *out,
                                          size_t capacity,
                                          size_t *written);

// The `2(2j + 1)` eigenvalues of the state itself, ascending:
// `F/(2j)` with multiplicity `2j` and `(1-F)/(2j+2)` with multiplicity
// `2j + 2`.
// # Safety
// `state` must be a live handle (or null), `written` valid for one write,
// and `out` valid for `capacity` doubles when `capacity > 0`.
enum Su2hStatus su2h_state_spectrum(const struct Su2hState *state,
                                    double *out,
                                    size_t capacity,
                                    size_t *written);

// Negativity of the state: zero exactly when `F <= 2j/(2j+1)`.
// # Safety
// `state` must be a live handle (or null) and `out` valid for one write.
enum Su2hStatus su2h_negativity(const struct Su2hState *state, double *out);

// Static description of a status code.
const char *su2h_status_message(enum Su2hStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SU2_HOLEVO_H */
