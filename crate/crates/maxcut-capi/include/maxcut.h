/* C interface to the maxcut solvers. Generated by cbindgen; do not edit. */

#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum McTieBreak {
  MC_TIE_BREAK_LEX = 0,
  MC_TIE_BREAK_REV_LEX = 1,
} McTieBreak;

typedef enum McSurvivor {
  MC_SURVIVOR_SMALL_INDEX = 0,
  MC_SURVIVOR_LARGE_INDEX = 1,
} McSurvivor;

typedef enum McDecDirection {
  MC_DEC_DIRECTION_MAX_TOTAL = 0,
  MC_DEC_DIRECTION_KEEP_SMALLER = 1,
  MC_DEC_DIRECTION_KEEP_LARGER = 2,
} McDecDirection;

typedef enum McEngine {
  MC_ENGINE_NAIVE = 0,
  MC_ENGINE_SORTED = 1,
} McEngine;

// Status code returned by every fallible function.
typedef enum McStatus {
  MC_STATUS_OK = 0,
  // A required pointer argument was null.
  MC_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  MC_STATUS_UTF8 = 2,
  // The instance file could not be read.
  MC_STATUS_IO = 3,
  // The instance file could not be parsed.
  MC_STATUS_PARSE = 4,
  // Invalid argument (bad indices, weights, sizes, or enum values).
  MC_STATUS_INVALID = 5,
  // Exact solve refused: the instance exceeds the size limit.
  MC_STATUS_TOO_LARGE = 6,
} McStatus;

typedef enum McAlgorithm {
  MC_ALGORITHM_STABILIZER = 0,
  MC_ALGORITHM_EC = 1,
  MC_ALGORITHM_DEC = 2,
  MC_ALGORITHM_SG = 3,
  MC_ALGORITHM_SG3 = 4,
  MC_ALGORITHM_EXACT = 5,
} McAlgorithm;

// Opaque instance handle.
typedef struct McMatrix McMatrix;

// Opaque solution handle.
typedef struct McSolution McSolution;

// Solver knobs. Obtain defaults from [`mc_policy_default`] and override the
// fields you care about. `epsilon < 0` keeps the per-matrix default.
typedef struct McPolicy {
  enum McTieBreak tie_break;
  enum McSurvivor survivor;
  enum McDecDirection dec_direction;
  enum McEngine engine;
  double epsilon;
  uint32_t oracle_max_n;
} McPolicy;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer
// stays valid until the next failing call on the same thread.
const char *mc_last_error_message(void);

// Policy with the documented default behavior.
struct McPolicy mc_policy_default(void);

// Load a TSPLIB `.tsp` instance.
//
// # Safety
// `path` must point to a NUL-terminated string and `out` to writable
// pointer storage. On success the caller owns the handle and must release
// it with [`mc_matrix_free`].
enum McStatus mc_matrix_from_tsplib_file(const char *path, struct McMatrix **out);

// Load an MCUT instance.
//
// # Safety
// Same contract as [`mc_matrix_from_tsplib_file`].
enum McStatus mc_matrix_from_mcut_file(const char *path, struct McMatrix **out);

// Build a matrix from `edge_count` edges given as parallel arrays of
// 0-based endpoints (`i < j`) and weights. Unlisted pairs have weight 0;
// the matrix is integer-exact iff every weight is integral.
//
// # Safety
// The three arrays must hold `edge_count` readable elements each and `out`
// must be writable. The returned handle is owned by the caller.
enum McStatus mc_matrix_from_edges(uintptr_t vertex_count,
                                   const uint32_t *edge_i,
                                   const uint32_t *edge_j,
                                   const double *weights,
                                   uintptr_t edge_count,
                                   struct McMatrix **out);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `matrix` must be a live handle from this interface or null.
uintptr_t mc_matrix_vertex_count(const struct McMatrix *matrix);

// Sum of all edge weights (exact integers are widened to double).
//
// # Safety
// `matrix` must be a live handle from this interface or null.
double mc_matrix_total_weight(const struct McMatrix *matrix);

// True when the matrix is in integer-exact mode.
//
// # Safety
// `matrix` must be a live handle from this interface or null.
bool mc_matrix_is_integer(const struct McMatrix *matrix);

// Release a matrix handle. Null is a no-op.
//
// # Safety
// `matrix` must have been returned by this interface and not freed before.
void mc_matrix_free(struct McMatrix *matrix);

// Solve `matrix` with `algorithm`. `policy` may be null for defaults. On
// success `*out` holds a solution handle owned by the caller.
//
// # Safety
// `matrix` must be a live handle; `policy` must be null or point to a valid
// [`McPolicy`]; `out` must be writable.
enum McStatus mc_solve(const struct McMatrix *matrix,
                       enum McAlgorithm algorithm,
                       const struct McPolicy *policy,
                       struct McSolution **out);

// Cut weight of a solution (NaN for a null handle).
//
// # Safety
// `solution` must be a live handle from this interface or null.
double mc_solution_cut_weight(const struct McSolution *solution);

// Number of vertex labels in a solution.
//
// # Safety
// `solution` must be a live handle from this interface or null.
uintptr_t mc_solution_vertex_count(const struct McSolution *solution);

// Copy the +-1 vertex labels into `buffer`, which must hold at least
// `length >= mc_solution_vertex_count()` bytes.
//
// # Safety
// `solution` must be a live handle; `buffer` must be writable for `length`
// bytes.
enum McStatus mc_solution_signs(const struct McSolution *solution,
                                int8_t *buffer,
                                uintptr_t length);

// Release a solution handle. Null is a no-op.
//
// # Safety
// `solution` must have been returned by this interface and not freed before.
void mc_solution_free(struct McSolution *solution);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
