#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rwlab/builders.hpp"
#include "rwlab/graph.hpp"
#include "rwlab/rng.hpp"

namespace rwlab {

// Deterministic Monte Carlo configuration. Each trial draws its randomness
// from substream(master_seed, trial, stream), so results are independent
// of worker count and execution order.
struct TrialPlan {
    std::uint64_t master_seed = 1;
    long trials = 10000;
    long step_cap = 1000000;
    int workers = 1;
};

struct Estimate {
    double value = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    long n = 0;
};

// 95% Wilson score interval for a proportion.
Estimate wilson_interval(long successes, long trials);

// 95% normal interval for a mean.
Estimate mean_interval(double sum, double sum_sq, long n);

// One-sided two-proportion z-test for p1 > p2 (pooled standard error).
struct ContrastTest {
    double freq1 = 0.0;
    double freq2 = 0.0;
    double z = 0.0;
    double p_value = 1.0;
    bool significant = false; // p < 0.01
};

ContrastTest proportion_contrast(long succ1, long n1, long succ2, long n2);

inline Vertex walk_step(const CsrGraph& g, Vertex v, SplitMix64& rng) {
    return g.begin(v)[rng.below(g.degree(v))];
}

struct ReturnSample {
    long time = 0;
    bool censored = false;
};

// Simulates until the first return to v or the cap; a censored sample
// contributes to s[t] for t <= cap and to no p[t].
ReturnSample sample_return_time(const CsrGraph& g, Vertex v, long step_cap, SplitMix64& rng);

struct EscapeReport {
    Vertex x = 0;
    Vertex y = 0;
    double eps = 0.0;
    double reff = 0.0;
    long threshold_steps = 0; // floor(eps * R^2)
    Estimate probability;
    bool pass = false; // ci_low <= eps
    std::uint64_t master_seed = 0;
    long trials = 0;
};

// Monte Carlo check of P_x(tau_y <= eps * R_eff(x<->y)^2) <= eps.
EscapeReport escape_experiment(const Graph& g, Vertex x, Vertex y, double eps, const TrialPlan& plan);

std::string to_json(const EscapeReport& r);

struct WindowExperimentReport {
    long n = 0;          // expander size (decorated graph minus the pendant)
    Vertex v_prime = 0;
    double delta_star = 0.0; // largest grid delta with both bounds >= delta
    long window_lo = 0;
    long window_hi = 0;
    double c_min = 0.0;      // min over starts and window t of n * P_u(tau_v' = t)
    long starts = 0;
    bool mc_consistent = false; // empirical P(tau <= n) within 4 sigma of exact
    double mc_worst_sigma = 0.0;
    std::uint64_t master_seed = 0;
    long trials = 0;
};

// Exact hitting-time windows on an expander decorated with pendant v',
// cross-checked by simulation.
WindowExperimentReport expander_window_experiment(const Graph& decorated, Vertex v_prime,
                                                  const TrialPlan& plan);

std::string to_json(const WindowExperimentReport& r);

struct CollisionInsideReport {
    Vertex u1 = 0;
    Vertex u2 = 0;
    long n_window = 0;
    Estimate probability; // collide before time n and before either hits v'
    bool parity_obstruction = false;
    std::uint64_t master_seed = 0;
    long trials = 0;
};

CollisionInsideReport collision_inside_expander(const Graph& decorated, Vertex v_prime, Vertex u1,
                                                Vertex u2, long n_window, const TrialPlan& plan);

std::string to_json(const CollisionInsideReport& r);

// Per-scale accounting of the two-walker comb experiment. Window i covers
// times (T_{i-1}, T_i] with T_i = T_{i-1} + n_i * h_i^2; checkpoints sit at
// T_{i-1} + k*h_i*n_i for k = 1..h_i.
struct CollisionReport {
    struct Window {
        int index = 0;
        long h = 0;
        long n = 0;
        long long t_begin = 0; // exclusive
        long long t_end = 0;   // inclusive
        long trials_with_collision = 0;
        Estimate collision_freq;
        long trials_with_checkpoint_coincidence = 0;
        Estimate checkpoint_freq;
        double mean_collisions = 0.0;
        double base_steps_in_band = 0.0; // fraction of checkpoints with l(khn) in [kh/C, C*kh]
    };

    bool control = false; // teeth are copies of Z instead of the construction
    long trials = 0;
    std::uint64_t master_seed = 0;
    unsigned long long steps_per_walker = 0;
    std::vector<Window> windows;
    double mean_total_collisions = 0.0;
    long long max_base_coordinate = 0;
    long max_tooth_height = 0;
};

// Two independent walkers started at the origin of Comb_0(Z, G({h_i,n_i}))
// (or Comb_0(G, Z) when control is set). The Z side is kept implicit as an
// integer coordinate, which is exact: a walker cannot leave any segment of
// radius >= total steps. Throws Error(resource_limit) when
// trials * steps * 2 exceeds step_budget.
CollisionReport comb_collision_experiment(const ConstructionParams& params, const TrialPlan& plan,
                                          bool control, unsigned long long step_budget = 2000000000ull);

std::string to_json(const CollisionReport& r);

void write_windows_csv(const CollisionReport& r, std::ostream& out);

// One-sided test that the main comb's final-window collision frequency
// exceeds the control's.
ContrastTest final_window_contrast(const CollisionReport& main, const CollisionReport& control);

} // namespace rwlab
