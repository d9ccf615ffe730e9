/* C interface to libpavlov.
 *
 * Every fallible call returns a pv_status; on failure pv_last_error() holds
 * a message for the calling thread. Strings returned through char** out
 * parameters are owned by the caller and released with pv_string_free.
 * Configurations cross the boundary as '0'/'1' strings, vertex 0 first.
 */
#ifndef PAVLOV_PAVLOV_H
#define PAVLOV_PAVLOV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PV_API __declspec(dllexport)
#else
#define PV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pv_status {
  PV_OK = 0,
  PV_ERR_INVALID_ARGUMENT = 1,
  PV_ERR_PARSE = 2,
  PV_ERR_UNSUPPORTED = 3,
  PV_ERR_BUDGET_EXCEEDED = 4,
  PV_ERR_NOT_FOUND = 5,
  PV_ERR_INTERNAL = 6
} pv_status;

typedef struct pv_graph pv_graph;
typedef struct pv_scheduler pv_scheduler;
typedef struct pv_strategy pv_strategy;

PV_API const char* pv_version(void);
PV_API const char* pv_last_error(void);
PV_API const char* pv_status_name(pv_status s);
PV_API void pv_string_free(char* s);

/* ---- graphs ---- */

/* family: line|path, cycle, star (n = leaf count), complete, k3 (= complete 3), k4, k3-merge */
PV_API pv_status pv_graph_generate(const char* family, uint32_t n, pv_graph** out);
PV_API pv_status pv_graph_gnp(uint32_t n, double p, uint64_t seed, pv_graph** out);
PV_API pv_status pv_graph_load(const char* path, pv_graph** out);
PV_API pv_status pv_graph_parse(const char* text, pv_graph** out);
/* pairs holds 2*m vertex ids */
PV_API pv_status pv_graph_from_edges(uint32_t n, const uint32_t* pairs, size_t m, pv_graph** out);
PV_API void pv_graph_free(pv_graph* g);

PV_API uint32_t pv_graph_vertex_count(const pv_graph* g);
PV_API size_t pv_graph_edge_count(const pv_graph* g);
PV_API pv_status pv_graph_edge(const pv_graph* g, size_t e, uint32_t* u, uint32_t* v);
PV_API pv_status pv_graph_to_text(const pv_graph* g, char** out);

/* ---- dynamics ---- */

PV_API pv_status pv_step(const pv_graph* g, const char* x, uint32_t u, uint32_t v, char** out);

/* ---- schedulers ---- */

/* spec: see pv_scheduler_specs() */
PV_API pv_status pv_scheduler_create(const pv_graph* g, const char* spec, uint64_t seed, pv_scheduler** out);
PV_API pv_scheduler* pv_scheduler_clone(const pv_scheduler* s);
PV_API void pv_scheduler_free(pv_scheduler* s);
/* newline-separated list of accepted specs */
PV_API pv_status pv_scheduler_specs(char** out);
/* JSON object: kind, adaptive, deterministic, fairness_bound, description */
PV_API pv_status pv_scheduler_info(const pv_scheduler* s, char** out);
/* First `steps` decisions of a copy of s, one "E u v" / "N u" line each.
 * x0 may be NULL (all-ones start). */
PV_API pv_status pv_scheduler_dump(const pv_scheduler* s, const char* x0, size_t steps, char** out);

typedef struct pv_run_result {
  int reached_zero;
  int schedule_exhausted;
  size_t steps;
} pv_run_result;

/* Advances s from x0 until 0 or max_steps. final_config may be NULL;
 * trajectory_json (may be NULL) receives every step when non-NULL. */
PV_API pv_status pv_simulate(const pv_graph* g, pv_scheduler* s, const char* x0, size_t max_steps,
                             pv_run_result* result, char** final_config, char** trajectory_json);

PV_API size_t pv_default_max_steps(uint32_t n);

typedef struct pv_estimate_result {
  size_t trials;
  size_t successes;
  double p_hat;
  double stderr_p;
  double mean_steps;
} pv_estimate_result;

/* x0 NULL draws a uniform random start per trial. */
PV_API pv_status pv_estimate(const pv_graph* g, const char* scheduler_spec, const char* x0, size_t trials,
                             size_t max_rounds, uint64_t seed, unsigned threads, pv_estimate_result* out);

/* ---- analysis and constructions ---- */

/* perm: comma-separated edge order, or NULL for index order. JSON with the
 * class, nilpotency, trace parity, s2 parity (trees) and, when construct is
 * nonzero, the constructed non-nilpotent order and its validation. */
PV_API pv_status pv_analyze(const pv_graph* g, const char* perm, int construct, char** out_json);
PV_API pv_status pv_is_nilpotent(const pv_graph* g, const uint32_t* order, size_t m, int* out);

/* kind: two-fair | one-fair | star-3fair | theorem1 | k3-adaptive.
 * JSON with the schedule and its validation. */
PV_API pv_status pv_construct(const pv_graph* g, const char* kind, char** out_json);

PV_API pv_status pv_exhaustive(const pv_graph* g, const char* graph_id, char** out_json);

typedef struct pv_experiment_options {
  int edge_interpretation; /* 0: node daemon with random partner, 1: edge permutation */
  int include_zero;
  size_t random_perms;
  unsigned threads;
  size_t max_rounds; /* 0: default */
} pv_experiment_options;

PV_API void pv_experiment_options_init(pv_experiment_options* o);
/* format: "csv" or "json" */
PV_API pv_status pv_experiment(const char* family, const uint32_t* n_list, size_t count, size_t samples,
                               uint64_t seed, const pv_experiment_options* options, const char* format,
                               char** out);
/* PV_ERR_NOT_FOUND when no published value exists */
PV_API pv_status pv_reference_rounds(const char* family, uint32_t n, double* out);

/* x0 NULL: uniform random start drawn from seed. */
PV_API pv_status pv_fairness_profile(pv_scheduler* s, size_t steps, uint64_t seed, const char* x0, char** out_json);

/* ---- scheduler-luck games ---- */

/* name: star | tree | matching | line | random-graph | auto. Star and tree
 * strategies take their leaf order from the first n decisions of hint
 * (which may be NULL). PV_ERR_NOT_FOUND when random-graph finds no
 * certificate. */
PV_API pv_status pv_strategy_create(const pv_graph* g, const char* name, const pv_scheduler* hint,
                                    pv_strategy** out);
PV_API void pv_strategy_free(pv_strategy* st);
PV_API pv_status pv_strategy_describe(const pv_strategy* st, char** out);

typedef struct pv_game_result {
  int won;
  size_t rounds_used;
  size_t steps;
  size_t round_length;
} pv_game_result;

/* b = 0 uses the scheduler's declared bound. Advances s. */
PV_API pv_status pv_game_play(const pv_graph* g, pv_scheduler* s, const pv_strategy* st, const char* x0,
                              size_t max_rounds, unsigned b, pv_game_result* out);
/* Exact search; JSON includes luck_wins and the witness tree. */
PV_API pv_status pv_game_solve(const pv_graph* g, const pv_scheduler* s, const char* x0, size_t horizon_rounds,
                               unsigned b, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PAVLOV_PAVLOV_H */
