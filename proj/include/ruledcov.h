#ifndef RULEDCOV_H
#define RULEDCOV_H

/* C API for the ruled-surface covering toolkit.
 *
 * All entry points take the text of an input document (lines "x = <expr>",
 * "y = <expr>", "z = <expr>", optional "F = <expr>", "seed = <int>",
 * "max_attempts = <int>") and return an opaque result handle. The handle
 * owns a status code, a JSON payload on success, and an error message
 * otherwise; release it with rc_free. Thread-safe: no shared mutable state.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rc_result rc_result;

enum {
  RC_OK = 0,
  RC_ERROR = 1,
  RC_NOT_RULED = 2,
  RC_BUDGET = 3,
  RC_CHECK_FAILED = 4
};

/* Two-chart covering of a ruled-form parametrization. */
rc_result* rc_run_cover(const char* input_text);
/* Affine base-point removal for an arbitrary rational parametrization. */
rc_result* rc_run_debase(const char* input_text);
/* Verification: implicit membership plus covering cross-checks. */
rc_result* rc_run_check(const char* input_text);
/* Standardization of a ruled-form parametrization, no base-point removal. */
rc_result* rc_run_standardize(const char* input_text);

/* Status code of the run (RC_* above). */
int rc_status(const rc_result* r);
/* JSON payload; empty string when the run failed. Owned by the handle. */
const char* rc_json(const rc_result* r);
/* Human-readable error; empty string when the run succeeded. */
const char* rc_error_message(const rc_result* r);

void rc_free(rc_result* r);

const char* rc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* RULEDCOV_H */
