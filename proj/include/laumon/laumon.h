/*
 * C interface to the laumon library: torus fixed points, cells, moment graphs,
 * projections and desingularizations of the quiver Grassmannians X_S(k,n,omega).
 *
 * Handles are opaque. Every function returns an lmn_status; on failure the
 * message is available from lmn_last_error() on the calling thread until the
 * next call into the library from that thread. Strings returned through a
 * char** are allocated by the library and released with lmn_string_free.
 */
#ifndef LAUMON_LAUMON_H
#define LAUMON_LAUMON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LMN_API __declspec(dllexport)
#else
#define LMN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lmn_status {
    LMN_OK = 0,
    LMN_ERR_INVALID_ARGUMENT = 1,
    LMN_ERR_BUDGET = 2,
    LMN_ERR_VERIFICATION = 3,
    LMN_ERR_INTERNAL = 4,
    LMN_ERR_NULL_HANDLE = 5
} lmn_status;

typedef struct lmn_instance lmn_instance;

typedef struct lmn_verify_options {
    int max_n;
    int max_omega;
    int oracle_max_n;  /* 0 selects the default */
    int desing_max_n;  /* 0 selects the default */
    int threads;       /* 0: LAUMON_THREADS or hardware concurrency */
    const char* only;  /* comma-separated invariant names, or NULL for all */
} lmn_verify_options;

LMN_API const char* lmn_version(void);
LMN_API const char* lmn_last_error(void);
LMN_API const char* lmn_status_name(lmn_status status);
LMN_API void lmn_string_free(char* s);

/* S lists elements of [1, n] in any order. */
LMN_API lmn_status lmn_instance_create(int n, int k, int omega, const int* S, size_t s_len, lmn_instance** out);
LMN_API void lmn_instance_destroy(lmn_instance* inst);
/* Cap on search nodes for brute-force enumerations; <= 0 restores the default. */
LMN_API lmn_status lmn_instance_set_budget(lmn_instance* inst, int64_t max_nodes);
LMN_API lmn_status lmn_instance_describe(const lmn_instance* inst, char** out);

/* Structured accessors. */
LMN_API lmn_status lmn_fixed_point_count(const lmn_instance* inst, size_t* out);
/* Energy of the idx-th fixed point in sorted order. */
LMN_API lmn_status lmn_fixed_point_energy(const lmn_instance* inst, size_t idx, int* out);
/* Writes min(cap, degree + 1) coefficients, constant term first; *len gets degree + 1. */
LMN_API lmn_status lmn_poincare_coefficients(const lmn_instance* inst, int64_t* coeffs, size_t cap, size_t* len);
LMN_API lmn_status lmn_dimension(const lmn_instance* inst, int* dimension, int* top_cells);
LMN_API lmn_status lmn_component_count(const lmn_instance* inst, size_t* out);
LMN_API lmn_status lmn_moment_graph_size(const lmn_instance* inst, size_t* vertices, size_t* edges);
LMN_API lmn_status lmn_aut_dims(const lmn_instance* inst, int64_t* formula, int64_t* oracle);
/* Tangent space dimension at a fixed point given as pattern text "1,3;2,4". */
LMN_API lmn_status lmn_tangent_dim(const lmn_instance* inst, const char* pattern, int* out);

/* Documents. JSON has sorted keys and two-space indentation. */
LMN_API lmn_status lmn_enumerate_json(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_enumerate_text(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_poincare_text(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_poincare_json(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_moment_graph_json(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_moment_graph_dot(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_components_json(const lmn_instance* inst, char** out);
LMN_API lmn_status lmn_components_text(const lmn_instance* inst, char** out);
/* pattern may be NULL, in which case the image check over S' is reported. */
LMN_API lmn_status lmn_project_json(const lmn_instance* inst, const int* Sp, size_t sp_len, const char* pattern,
                                    char** out);
/* Lifts a fixed point of inst to the superset S. */
LMN_API lmn_status lmn_lift_json(const lmn_instance* inst, const int* S, size_t s_len, const char* pattern, char** out);
/* With verify nonzero, returns LMN_ERR_VERIFICATION (document still written) on disagreement. */
LMN_API lmn_status lmn_autdim_json(const lmn_instance* inst, int verify, char** out);
/* Returns LMN_ERR_VERIFICATION (document still written) if a desingularization check fails. */
LMN_API lmn_status lmn_desing_json(const lmn_instance* inst, char** out);

/* Runs the invariant grid; report is always written on LMN_OK and LMN_ERR_VERIFICATION. */
LMN_API lmn_status lmn_verify(const lmn_verify_options* options, char** report);

#ifdef __cplusplus
}
#endif

#endif
