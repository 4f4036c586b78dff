#ifndef SIMPLEXPOLY_SIMPLEXPOLY_H
#define SIMPLEXPOLY_SIMPLEXPOLY_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INVALID_ARGUMENT = 1,
  SP_ERR_POLE = 2,
  SP_ERR_NONZERO_REMAINDER = 3,
  SP_ERR_CONVERGENCE = 4,
  SP_ERR_CONFIG = 5,
  SP_ERR_INTERNAL = 6
} sp_status;

/* Message of the last failing call on this thread; never NULL. */
SP_API const char* sp_last_error(void);
SP_API const char* sp_status_name(sp_status status);
SP_API const char* sp_version(void);

/* Strings returned through char** out parameters are owned by the caller. */
SP_API void sp_string_free(char* s);

/* Lists are comma separated; rationals are "p" or "p/q". */

typedef struct sp_poly sp_poly;

/* family is "jacobi" (index n, params a,b), "triangle" (index n,k, params
   a,b,c,d) or "simplex" (index n1,n2,n3, params alpha,beta,gamma,delta,a,b). */
SP_API sp_status sp_poly_new(const char* family, const char* index, const char* params, sp_poly** out);
SP_API sp_status sp_poly_to_string(const sp_poly* poly, char** out);
SP_API sp_status sp_poly_eval(const sp_poly* poly, double x, double y, double z, double* out);
/* Exact value at a rational point "x,y,z". */
SP_API sp_status sp_poly_eval_exact(const sp_poly* poly, const char* point, char** out);
SP_API sp_status sp_poly_equal(const sp_poly* lhs, const sp_poly* rhs, int* out);
SP_API void sp_poly_free(sp_poly* poly);

typedef struct sp_config sp_config;

SP_API sp_status sp_config_load(const char* path, sp_config** out);
SP_API sp_status sp_config_parse(const char* json_text, sp_config** out);
SP_API int sp_config_has_suite(const sp_config* config, const char* suite);
SP_API void sp_config_free(sp_config* config);

typedef struct sp_sweep sp_sweep;

/* threads = 0 uses the config hint; SIMPLEXPOLY_THREADS overrides both. */
SP_API sp_status sp_sweep_run(const sp_config* config, const char* suite, unsigned threads, sp_sweep** out);
/* Deterministic JSON report. all_reports = 0 keeps only failing entries. */
SP_API sp_status sp_sweep_json(const sp_sweep* sweep, int all_reports, char** out);
SP_API size_t sp_sweep_failures(const sp_sweep* sweep);
SP_API size_t sp_sweep_erratum_candidates(const sp_sweep* sweep);
/* 0 clean, 2 erratum candidates, 1 other failures. */
SP_API int sp_sweep_exit_code(const sp_sweep* sweep);
SP_API double sp_sweep_seconds(const sp_sweep* sweep);
SP_API void sp_sweep_free(sp_sweep* sweep);

typedef struct sp_matrix sp_matrix;

/* Gram matrix over all members of total degree <= n. */
SP_API sp_status sp_gram_simplex(int n, const char* params, unsigned threads, sp_matrix** out);
SP_API sp_status sp_gram_triangle(int n, const char* params, unsigned threads, sp_matrix** out);
SP_API size_t sp_matrix_size(const sp_matrix* m);
SP_API double sp_matrix_at(const sp_matrix* m, size_t i, size_t j);
SP_API sp_status sp_matrix_csv(const sp_matrix* m, char** out);
/* Largest normalized off-diagonal entry and largest relative diagonal error
   against the closed-form norms; ok is set when both are within tol. */
SP_API sp_status sp_matrix_check(const sp_matrix* m, double tol, double* max_offdiag, double* max_diag_error,
                                 int* ok);
SP_API void sp_matrix_free(sp_matrix* m);

/* Collapsed Gauss-Jacobi rule on the tetrahedron as JSON. */
SP_API sp_status sp_tetra_rule_json(const char* params, int order, char** out);

/* Connection expansion as JSON. A single target value replaces alpha; four
   values replace alpha, beta, gamma, delta. */
SP_API sp_status sp_connect(const char* index, const char* params, const char* target, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SIMPLEXPOLY_SIMPLEXPOLY_H */
