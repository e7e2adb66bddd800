/*
 * scenbdd - exact reformulation of two-stage stochastic network problems
 * with decision-dependent scenario probabilities.
 *
 * C API over the core engine.  All handles are opaque; every function
 * returns a status code and writes results through out parameters, which
 * are only touched on SCENBDD_OK.  Returned strings are heap copies that
 * the caller releases with scenbdd_string_free().  Error details for the
 * last failing call on the current thread come from scenbdd_last_error().
 */

#ifndef SCENBDD_H
#define SCENBDD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scenbdd_status {
    SCENBDD_OK = 0,
    SCENBDD_ERR_VALIDATION = 1, /* bad input: syntax or violated invariant */
    SCENBDD_ERR_SIZE_CAP = 2,   /* a configured size guard tripped */
    SCENBDD_ERR_INTERNAL = 3,   /* engine invariant failed */
    SCENBDD_ERR_IO = 4,         /* file not readable/writable */
    SCENBDD_ERR_ARGUMENT = 5    /* null handle or malformed call */
} scenbdd_status;

typedef enum scenbdd_order_kind {
    SCENBDD_ORDER_OCCURRENCE = 0, /* ascending occurrence count (default) */
    SCENBDD_ORDER_CUTHILL_MCKEE = 1,
    SCENBDD_ORDER_IDENTITY = 2,
    SCENBDD_ORDER_EXPLICIT = 3
} scenbdd_order_kind;

typedef struct scenbdd_instance scenbdd_instance;
typedef struct scenbdd_ladder scenbdd_ladder;
typedef struct scenbdd_bundle scenbdd_bundle;

const char* scenbdd_version(void);

/* Message for the last error on this thread; valid until the next call. */
const char* scenbdd_last_error(void);

void scenbdd_string_free(char* s);

/* ---- instance ------------------------------------------------------- */

scenbdd_status scenbdd_instance_parse(const char* text, scenbdd_instance** out);
scenbdd_status scenbdd_instance_read(const char* path, scenbdd_instance** out);
void scenbdd_instance_free(scenbdd_instance* inst);

int scenbdd_instance_num_edges(const scenbdd_instance* inst);
int scenbdd_instance_num_nodes(const scenbdd_instance* inst);
/* 0 = shortest_path, 1 = max_flow */
int scenbdd_instance_mode(const scenbdd_instance* inst);

/* Newline-separated invariant violations; empty string when valid. */
scenbdd_status scenbdd_instance_validate(const scenbdd_instance* inst, char** violations);
scenbdd_status scenbdd_instance_format(const scenbdd_instance* inst, char** text);

/* ---- critical ladder ------------------------------------------------- */

/* Enumerates the recourse ladder (simple paths / max-flow levels). */
scenbdd_status scenbdd_ladder_enumerate(const scenbdd_instance* inst, scenbdd_ladder** out);
/* Parses a ladder file and verifies every invariant against the instance. */
scenbdd_status scenbdd_ladder_parse(const scenbdd_instance* inst, const char* text,
                                    scenbdd_ladder** out);
scenbdd_status scenbdd_ladder_read(const scenbdd_instance* inst, const char* path,
                                   scenbdd_ladder** out);
scenbdd_status scenbdd_ladder_format(const scenbdd_ladder* ladder, char** text);
void scenbdd_ladder_free(scenbdd_ladder* ladder);

int scenbdd_ladder_num_levels(const scenbdd_ladder* ladder);
scenbdd_status scenbdd_ladder_alpha(const scenbdd_ladder* ladder, int level, double* alpha);
/* Reported value of the level (negated alpha for max-flow ladders). */
scenbdd_status scenbdd_ladder_value(const scenbdd_ladder* ladder, int level, double* value);
scenbdd_status scenbdd_ladder_level_size(const scenbdd_ladder* ladder, int level, int* size);
int scenbdd_ladder_has_penalty(const scenbdd_ladder* ladder);

/* Minimal edge-failure sets forcing the recourse past `level`, one {0,1}
 * row per line; fails with SCENBDD_ERR_SIZE_CAP past `bound` sets. */
scenbdd_status scenbdd_ladder_failure_clutter(const scenbdd_ladder* ladder, int level,
                                              size_t bound, char** text);

/* ---- compiled BDD bundle --------------------------------------------- */

/* Compiles one BDD per ladder level under a shared variable order.
 * `explicit_order` (length |E|, a permutation of 1..|E|) is only read for
 * SCENBDD_ORDER_EXPLICIT; node_cap 0 means the built-in default. */
scenbdd_status scenbdd_compile(const scenbdd_instance* inst, const scenbdd_ladder* ladder,
                               scenbdd_order_kind order_kind, const int* explicit_order,
                               uint64_t node_cap, scenbdd_bundle** out);
void scenbdd_bundle_free(scenbdd_bundle* bundle);

int scenbdd_bundle_num_levels(const scenbdd_bundle* bundle);
scenbdd_status scenbdd_bundle_order(const scenbdd_bundle* bundle, int* order /* len |E| */);
scenbdd_status scenbdd_bundle_size(const scenbdd_bundle* bundle, int level, int64_t* total_size);
scenbdd_status scenbdd_bundle_width(const scenbdd_bundle* bundle, int level, int* width);
/* Bandwidth of the level's scenario incidence matrix under the order. */
scenbdd_status scenbdd_bundle_bandwidth(const scenbdd_bundle* bundle, int level, int* bandwidth);
scenbdd_status scenbdd_bundle_dump(const scenbdd_bundle* bundle, int level, char** text);

/* ---- evaluation, model emission, optimization ------------------------ */

/* Exact distribution report under decision `x_bits` ({0,1} string of
 * length |E|; NULL means all-zero).  Writes the report text and the
 * expected recourse value. */
scenbdd_status scenbdd_evaluate(const scenbdd_bundle* bundle, const char* x_bits, char** report,
                                double* expected);

/* LP-format model text of the exact reformulation. */
scenbdd_status scenbdd_emit_lp(const scenbdd_bundle* bundle, char** lp_text);

/* Variable/constraint counts of the emitted model and, per level, the
 * counts under the terminal-keeping convention. */
scenbdd_status scenbdd_model_counts(const scenbdd_bundle* bundle, int64_t* num_variables,
                                    int64_t* num_constraints, char** per_level_table);

/* Exhaustive reference optimizer over budget-feasible decisions. */
scenbdd_status scenbdd_solve_enumeration(const scenbdd_bundle* bundle, char** x_bits,
                                         double* value);

/* ---- brute-force oracle ---------------------------------------------- */

scenbdd_status scenbdd_oracle_expected(const scenbdd_instance* inst, const char* x_bits,
                                       double* expected);
scenbdd_status scenbdd_oracle_best(const scenbdd_instance* inst, char** x_bits, double* value);

/* ---- end-to-end check ------------------------------------------------ */

/* Oracle-vs-pipeline equivalence over every feasible decision.  `ladder`
 * may be NULL to enumerate internally.  `pass` is 1/0. */
scenbdd_status scenbdd_check(const scenbdd_instance* inst, const scenbdd_ladder* ladder,
                             uint64_t node_cap, char** report, int* pass);

/* ---- benchmark harness ------------------------------------------------ */

/* Random grid networks of (n+1)^2 nodes, all origin-destination pairs;
 * returns the quantile table of summed BDD sizes.  alpha_factor <= 0 means
 * no length cutoff. */
scenbdd_status scenbdd_bench_grid(int n, int repetitions, double alpha_factor, uint64_t seed,
                                  uint64_t node_cap, char** table);

#ifdef __cplusplus
}
#endif

#endif /* SCENBDD_H */
