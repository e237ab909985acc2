/*
 * rwlab — return-time laboratory for simple random walks on recurrent
 * graphs: exact return/hitting-time tables on truncated graphs,
 * electrical-network solvers, expander generation, and deterministic
 * Monte Carlo experiments.
 *
 * C surface of the shared library. Objects are opaque handles released
 * with their _free function; every fallible call returns rwl_status and
 * leaves a message in rwl_last_error() on failure. Strings returned
 * through char** are heap-allocated; release them with rwl_string_free.
 */
#ifndef RWLAB_H
#define RWLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rwl_status {
    RWL_OK = 0,
    RWL_ERR_INVALID_ARGUMENT = 1,
    RWL_ERR_GENERATION_FAILED = 2,
    RWL_ERR_RESOURCE_LIMIT = 3,
    RWL_ERR_IO = 4,
    RWL_ERR_INTERNAL = 5
} rwl_status;

typedef struct rwl_graph rwl_graph;
typedef struct rwl_table rwl_table;

const char* rwl_version(void);

/* Message for the most recent failure on this thread. */
const char* rwl_last_error(void);

void rwl_string_free(char* s);

/* ---------- graphs ---------- */

rwl_status rwl_graph_halfline(long length, rwl_graph** out);
rwl_status rwl_graph_segment(long radius, rwl_graph** out);
rwl_status rwl_graph_star_halfline(long length, long pendants, rwl_graph** out);
rwl_status rwl_graph_cycle(long n, rwl_graph** out);
rwl_status rwl_graph_complete(long n, rwl_graph** out);
rwl_status rwl_graph_torus(long rows, long cols, rwl_graph** out);
rwl_status rwl_graph_random_regular(long n, long d, uint64_t seed, rwl_graph** out);
rwl_status rwl_graph_gt(long t, double delta, long d, uint64_t seed, long min_halfline,
                        rwl_graph** out);
rwl_status rwl_graph_construction(const long* heights, const long* sizes, long scales, long d,
                                  uint64_t seed, long min_halfline, rwl_graph** out);
rwl_status rwl_graph_comb(const rwl_graph* g, const rwl_graph* h, long root, rwl_graph** out);
rwl_status rwl_graph_attach_expander(const rwl_graph* base, long anchor, const rwl_graph* expander,
                                     long port, rwl_graph** out);
rwl_status rwl_graph_attach_pendant(const rwl_graph* g, long anchor, rwl_graph** out);
rwl_status rwl_graph_add_loops(const rwl_graph* g, long v, long count, rwl_graph** out);

/* Builder mini-language, e.g. "halfline:64", "gt:2000,0.1,3",
 * "construction:4:64,16:4096", "comb:segment:6|star_halfline:4,2|0". */
rwl_status rwl_graph_from_spec(const char* spec, uint64_t seed, long min_halfline, rwl_graph** out);

/* Edge-list text format: "n m" header, "u v" per edge (loops as "u u"),
 * then optional "H v h" height lines. */
rwl_status rwl_graph_read(const char* path, rwl_graph** out);
rwl_status rwl_graph_write(const rwl_graph* g, const char* path);
rwl_status rwl_graph_to_edgelist(const rwl_graph* g, char** out);

void rwl_graph_free(rwl_graph* g);

long rwl_graph_n(const rwl_graph* g);
long rwl_graph_m(const rwl_graph* g); /* edges; a loop counts once */
long rwl_graph_degree(const rwl_graph* g, long v);
/* Copies up to cap neighbor ids into buf; returns the degree. */
long rwl_graph_neighbors(const rwl_graph* g, long v, long* buf, long cap);
long rwl_graph_height(const rwl_graph* g, long v); /* -1 when heights unset */
/* Meta value for key, or NULL; the pointer lives as long as the graph. */
const char* rwl_graph_meta(const rwl_graph* g, const char* key);
const char* rwl_graph_name(const rwl_graph* g);
rwl_status rwl_graph_validate(const rwl_graph* g);
int rwl_graph_is_bipartite(const rwl_graph* g);

/* Built-in verification corpus of graph specs. */
long rwl_corpus_count(void);
const char* rwl_corpus_spec(long i);

/* ---------- exact walk tables ---------- */

/* Exact P_v(tau_v = t) up to the horizon. Fails when the horizon exceeds
 * the graph's truncation radius unless waive is nonzero (the table is then
 * flagged inexact). */
rwl_status rwl_return_table(const rwl_graph* g, long v, long horizon, int waive, rwl_table** out);
rwl_status rwl_hitting_table(const rwl_graph* g, long start, long target, long horizon, int waive,
                             rwl_table** out);
void rwl_table_free(rwl_table* t);

long rwl_table_horizon(const rwl_table* t);
int rwl_table_exact(const rwl_table* t);
double rwl_table_p(const rwl_table* t, long time);
double rwl_table_s(const rwl_table* t, long time);
double rwl_table_hazard(const rwl_table* t, long time); /* NaN when undefined */
rwl_status rwl_table_to_csv(const rwl_table* t, char** out);

/* min over t of d_v * sqrt(t) * P(tau >= t); >= 1/4 on truncations of
 * infinite graphs. */
double rwl_theorem1_margin(const rwl_table* t, long d_v);
/* Fills profile[t] = t*hazard[t]/log(d_v*t) for t = 1..horizon into buf
 * (cap entries; buf[0] unused) and stores the max at *max_out. */
rwl_status rwl_theorem2_profile(const rwl_table* t, long d_v, double* buf, long cap,
                                double* max_out);
/* 0 when P(tau=2t) is non-increasing; otherwise the first violating t. */
long rwl_even_monotonicity_violation(const rwl_table* t);
rwl_status rwl_hankel_min_eig(const rwl_table* t, long order, int shifted, double* out);

rwl_status rwl_reversibility_residual(const rwl_graph* g, long v, long time, double* out);
/* Exact-rational check of the same identity; *equal is 1 on agreement. */
rwl_status rwl_reversibility_exact(const rwl_graph* g, long v, long time, int* equal);

/* Expected visits between returns to v; fills n values, g(v) = 1. */
rwl_status rwl_green_function(const rwl_graph* g, long v, double* buf, long cap);

/* ---------- electrical networks (unit conductances) ---------- */

rwl_status rwl_effective_resistance(const rwl_graph* g, const long* sources, long n_sources,
                                    const long* sinks, long n_sinks, double* out);
/* Harmonic potential of the unit flow: f=0 on sources, f=R_eff on sinks;
 * fills one value per vertex and stores R_eff. */
rwl_status rwl_solve_potential(const rwl_graph* g, const long* sources, long n_sources,
                               const long* sinks, long n_sinks, double* f_buf, long cap,
                               double* reff);
rwl_status rwl_escape_probability(const rwl_graph* g, long v, const long* targets, long n_targets,
                                  double* out);
rwl_status rwl_expected_hitting_time(const rwl_graph* g, long start, const long* targets,
                                     long n_targets, double* out);
/* Max |f(u)-f(w)| over edges of a potential vector. */
rwl_status rwl_lipschitz_margin(const rwl_graph* g, const double* f, double* out);
/* Strict sublevel set {f < threshold} and its outer boundary. */
rwl_status rwl_sublevel_cut(const rwl_graph* g, const double* f, double threshold, long* inside,
                            long inside_cap, long* n_inside, long* boundary, long boundary_cap,
                            long* n_boundary);

/* ---------- expanders ---------- */

rwl_status rwl_estimate_lambda2(const rwl_graph* g, long max_iterations, uint64_t seed,
                                double* out);
/* JSON: pass/bipartite flags and the worst margin of the mixing bound
 * |P(X_t=v) - 1/n| <= exp(-(1-rho)t) for t <= t_max. */
rwl_status rwl_mixing_check(const rwl_graph* g, double rho, long t_max, long sample_starts,
                            uint64_t seed, char** json_out);
/* JSON ExpanderReport: n, d, lambda2_abs, connected, bipartite,
 * resistance_diameter_sample, retries. */
rwl_status rwl_expander_report(const rwl_graph* g, uint64_t seed, long pairs, char** json_out);

/* ---------- Monte Carlo experiments (JSON reports) ---------- */

/* Single return-time draw from substream (seed, trial); *time is the
 * return time, *censored is set when the cap was hit first. */
rwl_status rwl_mc_sample_return(const rwl_graph* g, long v, uint64_t seed, long trial,
                                long step_cap, long* time, int* censored);

rwl_status rwl_mc_escape(const rwl_graph* g, long x, long y, double eps, uint64_t seed, long trials,
                         int workers, char** json_out);
rwl_status rwl_mc_expander_window(const rwl_graph* decorated, long v_prime, uint64_t seed,
                                  long trials, int workers, char** json_out);
rwl_status rwl_mc_collision_inside(const rwl_graph* decorated, long v_prime, long u1, long u2,
                                   long n_window, uint64_t seed, long trials, int workers,
                                   char** json_out);
/* Two walkers on Comb_0(Z, G({h_i,n_i})), per-scale windows T_i = T_{i-1}
 * + n_i h_i^2; control swaps the roles (Comb_0(G, Z)). csv_out may be
 * NULL. Fails with RWL_ERR_RESOURCE_LIMIT when 2*trials*steps exceeds
 * step_budget. */
rwl_status rwl_mc_comb_collision(const long* heights, const long* sizes, long scales, long d,
                                 uint64_t seed, long trials, int workers, int control,
                                 uint64_t step_budget, char** json_out, char** csv_out);
/* One-sided two-proportion test that freq1 > freq2. */
rwl_status rwl_proportion_contrast(long succ1, long n1, long succ2, long n2, double* z,
                                   double* p_value);

#ifdef __cplusplus
}
#endif

#endif /* RWLAB_H */
