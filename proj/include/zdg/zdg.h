/* C interface for the zero-divisor graph spectra library.
 *
 * The graphs are the zero-divisor graphs of Z_p[x]/<x^c> (p prime, c >= 2).
 * The library produces their adjacency, Laplacian, signless Laplacian,
 * A_alpha and distance Laplacian spectra from closed forms, constructs the
 * explicit graphs, and verifies the closed forms against an independent
 * dense route.
 *
 * Conventions:
 *   - Handles are opaque; destroy with the matching *_destroy.
 *   - Functions returning zdg_status use ZDG_OK for success.
 *   - String getters follow snprintf: they return the full length (excluding
 *     the terminator, negative zdg_status on error), write at most cap-1
 *     characters plus a terminator, and accept buf == NULL with cap == 0 to
 *     query the length.
 *   - zdg_last_error() describes the most recent failure on this thread.
 */
#ifndef ZDG_H
#define ZDG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZDG_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ZDG_API __attribute__((visibility("default")))
#else
#define ZDG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zdg_status {
  ZDG_OK = 0,
  ZDG_ERROR_INVALID_ARGUMENT = -1,
  ZDG_ERROR_NOT_PRIME = -2,
  ZDG_ERROR_BUDGET_EXCEEDED = -3,
  ZDG_ERROR_DOMAIN = -4,
  ZDG_ERROR_DISCONNECTED = -5,
  ZDG_ERROR_NO_CONVERGENCE = -6,
  ZDG_ERROR_OVERFLOW = -7,
  ZDG_ERROR_NULL_ARGUMENT = -8,
  ZDG_ERROR_INTERNAL = -9
} zdg_status;

typedef enum zdg_matrix_kind {
  ZDG_MATRIX_ADJACENCY = 0,
  ZDG_MATRIX_LAPLACIAN = 1,
  ZDG_MATRIX_SIGNLESS = 2,
  ZDG_MATRIX_A_ALPHA = 3,
  ZDG_MATRIX_DISTANCE_LAPLACIAN = 4
} zdg_matrix_kind;

typedef enum zdg_method {
  ZDG_METHOD_CLOSED = 0, /* closed forms (quotient tails solved at size c-1) */
  ZDG_METHOD_DENSE = 1,  /* explicit matrix, dense eigensolve */
  ZDG_METHOD_BOTH = 2    /* closed result plus dense cross-check */
} zdg_method;

typedef enum zdg_entry_kind {
  ZDG_ENTRY_EXACT = 0,  /* exact integer or rational */
  ZDG_ENTRY_AFFINE = 1, /* slope*alpha + intercept, symbolic alpha */
  ZDG_ENTRY_NUMERIC = 2 /* floating point with residual bound */
} zdg_entry_kind;

typedef enum zdg_build_mode {
  ZDG_BUILD_BY_RULE = 0, /* level rule: mindeg(u) + mindeg(v) >= c */
  ZDG_BUILD_BY_RING = 1  /* ring oracle: u * v = 0 */
} zdg_build_mode;

typedef enum zdg_fault {
  ZDG_FAULT_NONE = 0,
  ZDG_FAULT_CORRUPT_QUOTIENT = 1 /* perturb one quotient entry before verifying */
} zdg_fault;

typedef enum zdg_structure_field {
  ZDG_STRUCT_ORDER = 0,
  ZDG_STRUCT_SIZE = 1,
  ZDG_STRUCT_CLIQUE = 2,
  ZDG_STRUCT_INDEPENDENCE = 3,
  ZDG_STRUCT_DOMINATION = 4,
  ZDG_STRUCT_DIAMETER = 5,
  ZDG_STRUCT_GIRTH = 6,
  ZDG_STRUCT_UNIVERSAL = 7
} zdg_structure_field;

typedef struct zdg_params zdg_params;
typedef struct zdg_graph zdg_graph;
typedef struct zdg_spectrum zdg_spectrum;
typedef struct zdg_structure_report zdg_structure_report;
typedef struct zdg_verify_report zdg_verify_report;

ZDG_API const char* zdg_version(void);
ZDG_API const char* zdg_last_error(void);

/* ---- Ring parameters ---------------------------------------------------- */

ZDG_API zdg_status zdg_params_create(int64_t p, int64_t c, zdg_params** out);
ZDG_API void zdg_params_destroy(zdg_params* params);
ZDG_API int64_t zdg_params_p(const zdg_params* params);
ZDG_API int64_t zdg_params_c(const zdg_params* params);
ZDG_API int32_t zdg_params_level_count(const zdg_params* params);
ZDG_API int32_t zdg_params_special_level(const zdg_params* params);
/* Number of vertices p^(c-1)-1 as a decimal string (may exceed 64 bits). */
ZDG_API int64_t zdg_params_order(const zdg_params* params, char* buf, size_t cap);
ZDG_API zdg_status zdg_params_order_u64(const zdg_params* params, uint64_t* out);
/* Levels are 1-based, 1..c-1. */
ZDG_API int64_t zdg_params_level_size(const zdg_params* params, int32_t level,
                                      char* buf, size_t cap);
ZDG_API int64_t zdg_params_level_degree(const zdg_params* params, int32_t level,
                                        char* buf, size_t cap);
ZDG_API int32_t zdg_params_level_is_clique(const zdg_params* params, int32_t level);

/* ---- Explicit graph ------------------------------------------------------ */

ZDG_API zdg_status zdg_graph_build(const zdg_params* params, zdg_build_mode mode,
                                   zdg_graph** out);
ZDG_API void zdg_graph_destroy(zdg_graph* graph);
ZDG_API uint64_t zdg_graph_vertex_count(const zdg_graph* graph);
ZDG_API uint64_t zdg_graph_edge_count(const zdg_graph* graph);
/* Edges are sorted with u < v; index < edge count. */
ZDG_API zdg_status zdg_graph_edge(const zdg_graph* graph, uint64_t index,
                                  uint64_t* u, uint64_t* v);
ZDG_API int32_t zdg_graph_vertex_level(const zdg_graph* graph, uint64_t vertex);
/* Coefficient vector "a_0,a_1,...,a_{c-1}". */
ZDG_API int64_t zdg_graph_vertex_label(const zdg_graph* graph, uint64_t vertex,
                                       char* buf, size_t cap);
/* Readable polynomial, e.g. "x + x^3". */
ZDG_API int64_t zdg_graph_vertex_polynomial(const zdg_graph* graph, uint64_t vertex,
                                            char* buf, size_t cap);

/* ---- Structure report ---------------------------------------------------- */

/* include_brute != 0 additionally runs the brute-force cross-checks on the
 * explicit graph where the instance fits their budgets. */
ZDG_API zdg_status zdg_structure_compute(const zdg_params* params,
                                         int32_t include_brute,
                                         zdg_structure_report** out);
ZDG_API void zdg_structure_destroy(zdg_structure_report* report);
/* Closed-form value as a string ("31", "2", "infinite"). */
ZDG_API int64_t zdg_structure_value(const zdg_structure_report* report,
                                    zdg_structure_field field, char* buf, size_t cap);
ZDG_API int32_t zdg_structure_brute_available(const zdg_structure_report* report,
                                              zdg_structure_field field);
ZDG_API int64_t zdg_structure_brute_value(const zdg_structure_report* report,
                                          zdg_structure_field field, char* buf,
                                          size_t cap);
/* 1 when every computed brute-force value agrees with its closed form. */
ZDG_API int32_t zdg_structure_agreement(const zdg_structure_report* report);
ZDG_API int64_t zdg_structure_disagreements(const zdg_structure_report* report,
                                            char* buf, size_t cap);
/* Whether the generic diameter-2 / girth-3 claims hold for this instance. */
ZDG_API int32_t zdg_structure_generic_diameter_holds(const zdg_structure_report* r);
ZDG_API int32_t zdg_structure_generic_girth_holds(const zdg_structure_report* r);

/* ---- Spectra -------------------------------------------------------------- */

/* alpha: exact "num/den", a decimal such as "0.25" (converted exactly), or
 * NULL. ZDG_MATRIX_A_ALPHA with NULL alpha yields the symbolic closed form
 * (affine entries plus a symbolic quotient tail) and is rejected for the
 * dense method. tol bounds accepted eigensolve residuals and the closed vs
 * dense comparison. dense_budget of 0 means the default (4000). */
ZDG_API zdg_status zdg_spectrum_compute(const zdg_params* params,
                                        zdg_matrix_kind kind, zdg_method method,
                                        const char* alpha, double tol,
                                        uint64_t dense_budget, zdg_spectrum** out);
ZDG_API void zdg_spectrum_destroy(zdg_spectrum* spectrum);
ZDG_API uint64_t zdg_spectrum_entry_count(const zdg_spectrum* spectrum);
ZDG_API int32_t zdg_spectrum_entry_kind(const zdg_spectrum* spectrum, uint64_t index);
/* Canonical value text: "15", "5/2", "7*alpha-1", "16.1158...". */
ZDG_API int64_t zdg_spectrum_entry_value(const zdg_spectrum* spectrum, uint64_t index,
                                         char* buf, size_t cap);
/* Evaluated value; ZDG_ERROR_DOMAIN for affine entries. */
ZDG_API zdg_status zdg_spectrum_entry_value_double(const zdg_spectrum* spectrum,
                                                   uint64_t index, double* out);
ZDG_API int64_t zdg_spectrum_entry_multiplicity(const zdg_spectrum* spectrum,
                                                uint64_t index, char* buf, size_t cap);
ZDG_API zdg_status zdg_spectrum_entry_multiplicity_u64(const zdg_spectrum* spectrum,
                                                       uint64_t index, uint64_t* out);
ZDG_API double zdg_spectrum_entry_residual(const zdg_spectrum* spectrum,
                                           uint64_t index);
ZDG_API double zdg_spectrum_residual_bound(const zdg_spectrum* spectrum);
/* Eigenvalues carried by the entries; the quotient tail adds
 * zdg_spectrum_symbolic_tail_dim more when the spectrum is symbolic. */
ZDG_API int64_t zdg_spectrum_total_multiplicity(const zdg_spectrum* spectrum,
                                                char* buf, size_t cap);
ZDG_API int32_t zdg_spectrum_symbolic_tail_dim(const zdg_spectrum* spectrum);
/* Present when method was ZDG_METHOD_BOTH. */
ZDG_API int32_t zdg_spectrum_comparison_available(const zdg_spectrum* spectrum);
ZDG_API zdg_status zdg_spectrum_comparison(const zdg_spectrum* spectrum,
                                           double* max_deviation,
                                           int32_t* structural_ok, int32_t* pass);
ZDG_API int64_t zdg_spectrum_comparison_detail(const zdg_spectrum* spectrum,
                                               char* buf, size_t cap);
/* Sum of |eigenvalue| * multiplicity. adjacency_flag reports whether the
 * spectrum is an adjacency spectrum (graph energy proper). */
ZDG_API zdg_status zdg_spectrum_energy(const zdg_spectrum* spectrum, double* value,
                                       int32_t* adjacency_flag);

/* ---- Verification --------------------------------------------------------- */

ZDG_API zdg_status zdg_verify_run(const zdg_params* params, double tol,
                                  uint64_t dense_budget, zdg_fault fault,
                                  zdg_verify_report** out);
ZDG_API void zdg_verify_destroy(zdg_verify_report* report);
ZDG_API uint64_t zdg_verify_check_count(const zdg_verify_report* report);
ZDG_API int64_t zdg_verify_check_name(const zdg_verify_report* report, uint64_t index,
                                      char* buf, size_t cap);
ZDG_API int32_t zdg_verify_check_passed(const zdg_verify_report* report,
                                        uint64_t index);
ZDG_API int64_t zdg_verify_check_detail(const zdg_verify_report* report,
                                        uint64_t index, char* buf, size_t cap);
ZDG_API int32_t zdg_verify_all_passed(const zdg_verify_report* report);
ZDG_API int64_t zdg_verify_fault(const zdg_verify_report* report, char* buf,
                                 size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* ZDG_H */
