/* C interface to the Cornell-potential eigenvalue solver.
 *
 * All objects are opaque handles created by *_create / computed by the
 * solver calls and released with the matching *_destroy. Functions return a
 * cornell_status; on failure cornell_last_error() describes the problem for
 * the calling thread. Extended-precision quantities cross the boundary as
 * decimal strings. Functions that write text follow snprintf conventions:
 * they return the full length (excluding the terminator) and write at most
 * len - 1 characters plus a terminator. */
#ifndef CORNELL_H
#define CORNELL_H

#include <stddef.h>

#if defined(CORNELL_BUILDING_LIBRARY)
#define CORNELL_API __attribute__((visibility("default")))
#else
#define CORNELL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cornell_status {
  CORNELL_OK = 0,
  CORNELL_E_DOMAIN = 1,
  CORNELL_E_USAGE = 2,
  CORNELL_E_RANGE = 3,
  CORNELL_E_BRACKET = 4,
  CORNELL_E_NONCONVERGENCE = 5,
  CORNELL_E_NUMERICAL = 6,
  CORNELL_E_VALIDATION = 7,
  CORNELL_E_NOT_EIGENVALUE = 8,
  CORNELL_E_INTERNAL = 99
} cornell_status;

typedef struct cornell_problem cornell_problem;
typedef struct cornell_options cornell_options;
typedef struct cornell_result cornell_result;
typedef struct cornell_bounds cornell_bounds;
typedef struct cornell_wavefunction cornell_wavefunction;

CORNELL_API const char* cornell_version(void);
CORNELL_API const char* cornell_last_error(void);
CORNELL_API const char* cornell_status_name(cornell_status status);

/* Problem: V(r) = -a/r + c r in d dimensions, angular momentum l, n nodes.
 * a and c are decimal strings, parsed at the library's maximum precision. */
CORNELL_API cornell_status cornell_problem_create(const char* a, const char* c,
                                                  int d, int l, int n,
                                                  cornell_problem** out);
CORNELL_API void cornell_problem_destroy(cornell_problem* p);
CORNELL_API int cornell_problem_k(const cornell_problem* p);
/* direction +1: (d, l) -> (d - 2, l + 1); -1: (d + 2, l - 1). */
CORNELL_API cornell_status cornell_problem_shift(const cornell_problem* p,
                                                 int direction,
                                                 cornell_problem** out);
CORNELL_API cornell_status cornell_default_r0(const cornell_problem* p,
                                              char* buf, size_t len);

/* Solver options. Defaults: r0 from the asymptotic profile, precision 50
 * digits (or CORNELL_PRECISION from the environment), tolerance 1e-13,
 * maximum depth 200, 4 retries with r0 grown by 25%. */
CORNELL_API cornell_status cornell_options_create(cornell_options** out);
CORNELL_API void cornell_options_destroy(cornell_options* o);
CORNELL_API cornell_status cornell_options_set_precision(cornell_options* o,
                                                         int digits);
/* NULL or "" restores the default r0 policy. */
CORNELL_API cornell_status cornell_options_set_r0(cornell_options* o,
                                                  const char* r0);
CORNELL_API cornell_status cornell_options_set_tolerance(cornell_options* o,
                                                         const char* tol);
CORNELL_API cornell_status cornell_options_set_max_depth(cornell_options* o,
                                                         int depth);
CORNELL_API cornell_status cornell_options_set_max_retries(cornell_options* o,
                                                           int retries);
CORNELL_API int cornell_options_precision(const cornell_options* o);

/* Solves for the eigenvalue. On CORNELL_OK or CORNELL_E_NONCONVERGENCE a
 * result handle is returned; for non-convergence it carries the per-depth
 * root trace and cornell_result_converged() is 0. */
CORNELL_API cornell_status cornell_solve(const cornell_problem* p,
                                         const cornell_options* o,
                                         cornell_result** out);
CORNELL_API void cornell_result_destroy(cornell_result* r);
CORNELL_API int cornell_result_converged(const cornell_result* r);
/* Correctly rounded fixed-point energy with `decimals` fractional digits. */
CORNELL_API size_t cornell_result_energy(const cornell_result* r, int decimals,
                                         char* buf, size_t len);
CORNELL_API int cornell_result_depth(const cornell_result* r);
CORNELL_API int cornell_result_precision(const cornell_result* r);
CORNELL_API int cornell_result_attempts(const cornell_result* r);
CORNELL_API size_t cornell_result_r0(const cornell_result* r, char* buf,
                                     size_t len);
CORNELL_API size_t cornell_result_residual(const cornell_result* r, char* buf,
                                           size_t len);
CORNELL_API size_t cornell_result_trace_size(const cornell_result* r);
CORNELL_API int cornell_result_trace_depth(const cornell_result* r, size_t i);
CORNELL_API size_t cornell_result_trace_energy(const cornell_result* r,
                                               size_t i, int decimals,
                                               char* buf, size_t len);

/* Envelope bounds. */
typedef enum cornell_bound_field {
  CORNELL_BOUND_E_LOW = 0,
  CORNELL_BOUND_E_UP = 1,
  CORNELL_BOUND_NU_LOW = 2,
  CORNELL_BOUND_NU_UP = 3,
  CORNELL_BOUND_LAMBDA = 4
} cornell_bound_field;

CORNELL_API cornell_status cornell_bounds_compute(const cornell_problem* p,
                                                  int digits,
                                                  cornell_bounds** out);
CORNELL_API void cornell_bounds_destroy(cornell_bounds* b);
CORNELL_API size_t cornell_bounds_get(const cornell_bounds* b,
                                      cornell_bound_field field, int decimals,
                                      char* buf, size_t len);

/* Radial wavefunction u(r) on a uniform grid ending at r_max. */
CORNELL_API cornell_status cornell_wavefunction_compute(
    const cornell_problem* p, const char* energy, const char* r_max, int steps,
    cornell_wavefunction** out);
CORNELL_API void cornell_wavefunction_destroy(cornell_wavefunction* w);
CORNELL_API size_t cornell_wavefunction_size(const cornell_wavefunction* w);
CORNELL_API double cornell_wavefunction_r(const cornell_wavefunction* w,
                                          size_t i);
CORNELL_API double cornell_wavefunction_u(const cornell_wavefunction* w,
                                          size_t i);
CORNELL_API int cornell_wavefunction_nodes(const cornell_wavefunction* w);
CORNELL_API double cornell_wavefunction_norm_residual(
    const cornell_wavefunction* w);
CORNELL_API size_t cornell_wavefunction_energy(const cornell_wavefunction* w,
                                               int decimals, char* buf,
                                               size_t len);

/* Pure Coulomb reference: -a^2/(k + 2j - 1)^2. */
CORNELL_API cornell_status cornell_coulomb_energy(const char* a, int k, int j,
                                                  int decimals, char* buf,
                                                  size_t len);
/* Runs the exact-termination check for depths 0..j_max and writes the
 * largest absolute root error in scientific notation. */
CORNELL_API cornell_status cornell_coulomb_validate(const char* a, int k,
                                                    int j_max, const char* r0,
                                                    int digits, char* buf,
                                                    size_t len);

#ifdef __cplusplus
}
#endif

#endif /* CORNELL_H */
