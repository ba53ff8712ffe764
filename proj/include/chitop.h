/* chitop — exact Euler characteristics of complex algebraic sets, weighted
 * projective loci and cyclic quotients, generalized-resultant root counting,
 * bound constants, and the threefold MMP Betti ledger.
 *
 * C API of the shared library. All heavy objects live behind opaque handles;
 * every entry point returns a status code and never throws across the
 * boundary. Strings returned through char** are owned by the caller and must
 * be released with chitop_string_free; handles with their matching _free.
 */

#ifndef CHITOP_H
#define CHITOP_H

#include <stddef.h>

#if defined(_MSC_VER)
#if defined(CHITOP_BUILD_SHARED)
#define CHITOP_API __declspec(dllexport)
#else
#define CHITOP_API
#endif
#else
#if defined(CHITOP_BUILD_SHARED)
#define CHITOP_API __attribute__((visibility("default")))
#else
#define CHITOP_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values double as process exit codes. */
enum chitop_status {
    CHITOP_OK = 0,
    CHITOP_ERR_PARSE = 2,
    CHITOP_ERR_PRECONDITION = 3,
    CHITOP_ERR_RESOURCE = 4,
    CHITOP_ERR_INTERNAL = 5
};

typedef struct chitop_problem chitop_problem;
typedef struct chitop_result chitop_result;

/* Entry points that produce a chitop_result fill *out even on failure: the
 * document then carries an "error" object with the same code, so callers
 * always have machine-readable output. *out stays NULL only when the
 * arguments themselves are unusable. */

CHITOP_API const char* chitop_version(void);

/* Parse a problem file (vars/quotient/weights/eq lines). On failure *err
 * receives a message when non-NULL. */
CHITOP_API int chitop_problem_parse(const char* text, chitop_problem** out, char** err);
CHITOP_API void chitop_problem_free(chitop_problem* p);

/* Options are JSON, all fields optional:
 *   {"trace": bool, "oracle_check": bool, "project_order": ["x", ...],
 *    "max_depth": int, "parallel": int,
 *    "reference": int, "reference_source": "..."}
 * A NULL options string means defaults. */
CHITOP_API int chitop_run(const chitop_problem* p, const char* options_json,
                          chitop_result** out, char** err);

/* Resultant / root-count runs on a univariate problem file. */
CHITOP_API int chitop_run_resultant(const chitop_problem* p, chitop_result** out, char** err);
CHITOP_API int chitop_run_roots(const chitop_problem* p, chitop_result** out, char** err);

/* Bound constants. family is one of N, M, L, A, B, D, Dprime, Phi, Psi,
 * PhiBar, Theta; the value arrives as a decimal string in the document. */
CHITOP_API int chitop_bounds(const char* family, const long* params, size_t nparams,
                             chitop_result** out, char** err);

/* Replay and validate an MMP run file (JSON) against a catalog file. A NULL
 * catalog path loads no catalog; runs that reference catalog rows then fail
 * with a precondition error. */
CHITOP_API int chitop_mmp_run(const char* run_json, const char* catalog_path,
                              chitop_result** out, char** err);

/* Result accessors. The JSON pointer stays valid until the result is freed. */
CHITOP_API const char* chitop_result_json(const chitop_result* r);
CHITOP_API int chitop_result_chi(const chitop_result* r, long long* out_chi);
CHITOP_API void chitop_result_free(chitop_result* r);

/* Renders the error document for a status code + message (for callers that
 * fail before obtaining a result, e.g. on problem parsing). */
CHITOP_API int chitop_error_json(int code, const char* message, char** out);

CHITOP_API void chitop_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CHITOP_H */
