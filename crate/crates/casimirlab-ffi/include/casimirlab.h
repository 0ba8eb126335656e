#ifndef CASIMIRLAB_H
#define CASIMIRLAB_H

/* Generated by cbindgen from crates/casimirlab-ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes of every fallible function.
 */
typedef enum ClStatus {
  CL_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  CL_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not UTF-8 or did not parse.
   */
  CL_STATUS_INVALID_ARGUMENT = 2,
  CL_STATUS_INVALID_ALGEBRA = 3,
  CL_STATUS_INVALID_LABEL = 4,
  /**
   * An index or level outside the admissible range.
   */
  CL_STATUS_OUT_OF_RANGE = 5,
  /**
   * The operation does not exist for this algebra (e.g. □⊗Y_n for e8).
   */
  CL_STATUS_UNSUPPORTED = 6,
  /**
   * Coinciding eigenvalues make the requested construction singular.
   */
  CL_STATUS_DEGENERATE = 7,
  /**
   * Any other library error (vanishing denominators, fixture problems, …).
   */
  CL_STATUS_FAILED = 8,
  /**
   * A verification suite ran and at least one check failed.
   */
  CL_STATUS_VERIFY_FAILED = 9,
  /**
   * A panic was caught at the boundary.
   */
  CL_STATUS_INTERNAL = 10,
} ClStatus;

/**
 * A simple Lie algebra (opaque).
 */
typedef struct ClAlgebra ClAlgebra;

/**
 * A tensor-product decomposition: labels with multiplicities (opaque).
 */
typedef struct ClDecomposition ClDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread ("" after a success). The
 * pointer stays valid until the next call into this library on the same thread.
 */
const char *cl_last_error(void);

/**
 * Library version as a static string.
 */
const char *cl_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void cl_string_free(char *s);

/**
 * Creates an algebra from a family name ("sl", "so", "sp", "g2", "f4", "e6",
 * "e7", "e8") and N (ignored for the exceptional algebras).
 */
enum ClStatus cl_algebra_new(const char *family, uint32_t n, struct ClAlgebra **out);

/**
 * Destroys an algebra handle. Null is ignored.
 */
void cl_algebra_free(struct ClAlgebra *g);

/**
 * Display name of the algebra, e.g. "sl(4)".
 */
enum ClStatus cl_algebra_name(const struct ClAlgebra *g, char **out);

/**
 * Dimension of the irrep with the given label ("([1],[1])", "[2,1]", "1*w7").
 */
enum ClStatus cl_dim(const struct ClAlgebra *g, const char *label, char **out);

/**
 * Quadratic Casimir of an irrep: raw (Cartan–Killing) and normalized so that ad has 1.
 * Either output may be null when not wanted.
 */
enum ClStatus cl_casimir(const struct ClAlgebra *g,
                         const char *label,
                         char **raw,
                         char **normalized);

/**
 * Dimension of the Cartan power Y_n from the universal formula.
 */
enum ClStatus cl_dim_yn(const struct ClAlgebra *g, uint32_t n, char **out);

/**
 * The L-rung ladder colour factor (multiplying the identity on □).
 */
enum ClStatus cl_ladder(const struct ClAlgebra *g, uint32_t rungs, char **out);

/**
 * □⊗Y_n (or □⊗Y_n′ when `primed`) as a decomposition handle.
 */
enum ClStatus cl_branch_box_yn(const struct ClAlgebra *g,
                               uint32_t n,
                               bool primed,
                               struct ClDecomposition **out);

/**
 * sl(N) ad^⊗k as a decomposition handle over composite labels.
 */
enum ClStatus cl_ad_power(uint32_t k, struct ClDecomposition **out);

/**
 * Number of distinct labels in a decomposition (0 for null).
 */
size_t cl_decomposition_len(const struct ClDecomposition *d);

/**
 * Term `i`: its label (borrowed, valid while the handle lives) and multiplicity.
 */
enum ClStatus cl_decomposition_term(const struct ClDecomposition *d,
                                    size_t i,
                                    const char **label,
                                    uint64_t *multiplicity);

/**
 * Destroys a decomposition handle. Null is ignored.
 */
void cl_decomposition_free(struct ClDecomposition *d);

/**
 * Runs a verification suite ("dims", "casimir", "traces", "projectors", "decomp",
 * "duality", "qdim", "oracle" or "all") and returns its JSON report. Returns
 * `VerifyFailed` (with the report still written) when any check fails.
 */
enum ClStatus cl_verify(const char *suite, bool quick, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CASIMIRLAB_H */
