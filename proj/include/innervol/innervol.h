/* C interface to the inner-volume library. Every object is an opaque handle;
 * every fallible call returns an iv_status and leaves details in the context.
 * Strings returned through char** are owned by the caller: release them with
 * iv_string_free. */
#ifndef INNERVOL_INNERVOL_H
#define INNERVOL_INNERVOL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(INNERVOL_BUILDING_LIBRARY)
#    define IV_API __declspec(dllexport)
#  else
#    define IV_API __declspec(dllimport)
#  endif
#else
#  define IV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct iv_context iv_context;
typedef struct iv_polytope iv_polytope;
typedef struct iv_volume_fn iv_volume_fn;

typedef enum iv_status {
  IV_OK = 0,
  IV_ERR_INVALID_ARGUMENT,
  IV_ERR_PARSE,
  IV_ERR_ZERO_NORMAL,
  IV_ERR_DIMENSION_MISMATCH,
  IV_ERR_UNBOUNDED_INPUT,
  IV_ERR_LOWER_DIMENSIONAL,
  IV_ERR_EMPTY,
  IV_ERR_UNBOUNDED_CELL,
  IV_ERR_PARALLEL_PLANES,
  IV_ERR_OUT_OF_DOMAIN,
  IV_ERR_NOT_EQUIANGULAR,
  IV_ERR_NOT_UNIFORM,
  IV_ERR_MEMORY_BUDGET,
  IV_ERR_NUMERICAL_FAILURE,
  IV_ERR_INTERNAL
} iv_status;

/* "UnboundedInput", "NumericalFailure", ... */
IV_API const char* iv_status_name(iv_status status);
/* Nonzero for malformed or geometrically invalid input. */
IV_API int iv_status_is_input_error(iv_status status);

IV_API iv_context* iv_context_new(void);
IV_API void iv_context_free(iv_context* ctx);
/* JSON object overriding tolerance defaults, e.g. {"feas": 1e-10}. */
IV_API iv_status iv_context_set_tolerances(iv_context* ctx, const char* json);
/* Message of the last failed call on this context; empty if none. */
IV_API const char* iv_context_last_error(const iv_context* ctx);

IV_API iv_status iv_polytope_from_json(iv_context* ctx, const char* json, iv_polytope** out);
/* Whitespace-separated shape tokens such as "rect 1 2 3" or "roof square 1". */
IV_API iv_status iv_polytope_generate(iv_context* ctx, const char* spec, iv_polytope** out);
IV_API iv_status iv_polytope_roof(iv_context* ctx, const iv_polytope* p, iv_polytope** out);
IV_API void iv_polytope_free(iv_polytope* p);
IV_API size_t iv_polytope_dim(const iv_polytope* p);
IV_API iv_status iv_polytope_to_json(iv_context* ctx, const iv_polytope* p, char** out);

IV_API iv_status iv_inradius(iv_context* ctx, const iv_polytope* p, double* g, double* center, size_t center_len);
IV_API iv_status iv_absolute_rank(iv_context* ctx, const iv_polytope* p, int* rank, int* all_independent);
IV_API iv_status iv_polytope_volume(iv_context* ctx, const iv_polytope* p, double* volume);

IV_API iv_status iv_volume_fn_compute(iv_context* ctx, const iv_polytope* p, double window_margin,
                                      iv_volume_fn** out);
IV_API void iv_volume_fn_free(iv_volume_fn* f);
/* {"g", "volume", "class_bound", "measured_class", "V", "W"} */
IV_API iv_status iv_volume_fn_to_json(iv_context* ctx, const iv_volume_fn* f, char** out);
IV_API iv_status iv_volume_fn_eval(iv_context* ctx, const iv_volume_fn* f, double r, double* V, double* W);
IV_API double iv_volume_fn_inradius(const iv_volume_fn* f);

/* {"equiangular", "alphas", "gammas", "omegas", "poly", "valid_on"} plus
 * "witness" when the check fails. */
IV_API iv_status iv_equiangular_report(iv_context* ctx, const iv_polytope* p, char** out);

/* Compares V against the Monte-Carlo and grid oracles. v_json is a
 * piecewise-polynomial JSON object, or NULL to verify the engine's own V.
 * Writes the report JSON and sets *passed to 0 or 1. */
IV_API iv_status iv_verify(iv_context* ctx, const iv_polytope* p, const char* v_json, size_t samples,
                           size_t mc_samples, uint64_t seed, char** out, int* passed);

IV_API void iv_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* INNERVOL_INNERVOL_H */
