#ifndef XYZPOLY_XYZPOLY_H
#define XYZPOLY_XYZPOLY_H

/* C interface to the xyzpoly library. Every call returns an xyzp_status;
 * on failure the message is available from xyzp_last_error() on the same
 * thread until the next call. Strings returned through char** are owned by
 * the caller and released with xyzp_string_free. Polynomials are exchanged
 * in the JSON interchange format: {"var": "z", "coeffs": ["1", "3/2"]} for
 * one variable, {"vars": ["x", "z"], "terms": [[[i, j], "c"], ...]} for two. */

#include <stddef.h>

#if defined(_WIN32)
#define XYZP_API __declspec(dllexport)
#else
#define XYZP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xyzp_status {
  XYZP_OK = 0,
  XYZP_ERR_INVALID_ARGUMENT = 1,
  XYZP_ERR_PARSE = 2,
  XYZP_ERR_NOT_DIVISIBLE = 3,
  XYZP_ERR_POLYNOMIALITY_VIOLATION = 4,
  XYZP_ERR_ZERO_PREFACTOR = 5,
  XYZP_ERR_DEGENERATE_MAP = 6,
  XYZP_ERR_DUPLICATE_ABSCISSA = 7,
  XYZP_ERR_TRUNCATION_FAILURE = 8,
  XYZP_ERR_NULLSPACE_DIMENSION = 9,
  XYZP_ERR_SPLIT_FAILURE = 10,
  XYZP_ERR_NON_INTEGER_COEFFICIENTS = 11,
  XYZP_ERR_PARITY_VIOLATION = 12,
  XYZP_ERR_KERNEL_DIMENSION = 13,
  XYZP_ERR_INTERPOLATION_UNSTABLE = 14,
  XYZP_ERR_BAD_LENGTH = 15,
  XYZP_ERR_NOME_OUT_OF_RANGE = 16,
  XYZP_ERR_NO_SOLUTION = 17,
  XYZP_ERR_CONFIG = 18,
  XYZP_ERR_INTERNAL = 99
} xyzp_status;

typedef enum xyzp_check_status {
  XYZP_CHECK_PASS = 0,
  XYZP_CHECK_FAIL = 1,
  XYZP_CHECK_SOFT_FAIL = 2
} xyzp_check_status;

/* Opaque verification report. */
typedef struct xyzp_report xyzp_report;

XYZP_API const char* xyzp_version(void);
XYZP_API const char* xyzp_status_name(xyzp_status status);
XYZP_API const char* xyzp_last_error(void);
XYZP_API void xyzp_string_free(char* s);

/* Computed object as JSON. Families and index ranges:
 *   "s"       s_n, any integer n
 *   "sbar"    tau_n(z, -1/3), n >= 0
 *   "P"       P_n(x, z), n >= 0
 *   "p", "q"  factorization subfactors p_k, q_k, any integer k
 *   "A"       A_n(zeta), n >= 1
 *   "p_sos"   8VSOS one-variable polynomials, n >= 0
 *   "P_sos"   8VSOS two-variable polynomials, even n >= 0
 *   "ground_vector"  orbit components of the exact ground state, odd N >= 3 */
XYZP_API xyzp_status xyzp_object_json(const char* family, int index, char** out_json);

/* tau_n(z, xi) with xi = xi_num / xi_den. */
XYZP_API xyzp_status xyzp_tau_json(long xi_num, long xi_den, int n, char** out_json);

/* Jacobi theta_k(u | q) or its deriv-th u-derivative, 0 <= deriv <= 3. */
XYZP_API xyzp_status xyzp_theta(int k, double u_re, double u_im, double q_re, double q_im, int deriv,
                                double* out_re, double* out_im);

/* Default configuration as JSON. */
XYZP_API xyzp_status xyzp_default_config(char** out_json);

/* Runs the suite described by a JSON config (NULL or "" for defaults). Keys
 * absent from the config keep their defaults. An invalid config returns
 * XYZP_ERR_CONFIG and no report; check failures are recorded in the report
 * and still return XYZP_OK. with_objects attaches the computed polynomials. */
XYZP_API xyzp_status xyzp_run(const char* config_json, int with_objects, xyzp_report** out_report);

XYZP_API void xyzp_report_free(xyzp_report* report);
/* 1 iff no non-soft check failed. */
XYZP_API int xyzp_report_passed(const xyzp_report* report);
XYZP_API size_t xyzp_report_count(const xyzp_report* report, xyzp_check_status status);
XYZP_API size_t xyzp_report_size(const xyzp_report* report);
/* Report document (config, summary, checks, optional objects). */
XYZP_API xyzp_status xyzp_report_json(const xyzp_report* report, int with_timings, char** out_json);
XYZP_API xyzp_status xyzp_report_text(const xyzp_report* report, int with_timings, char** out_text);

#ifdef __cplusplus
}
#endif

#endif
