#pragma once

#include <cstdint>
#include <string>

#include "rwlab/graph.hpp"

namespace rwlab {

// Simple connected d-regular graph on n vertices, drawn by configuration
// model pairing with full rejection of pairings containing loops,
// multi-edges, or a disconnected result. Deterministic given the seed;
// retries use fresh sub-seeds. Requires n >= d+1 and n*d even. Throws
// Error(generation_failed) after max_retries rejected pairings.
Graph random_regular(long n, long d, std::uint64_t seed, long max_retries = 5000);

// Estimated second-largest absolute eigenvalue of the walk operator of a
// connected regular graph: power iteration on the complement of the
// constant vector (the running mean is subtracted every step), stopping
// when the Rayleigh quotient moves by less than `tol`. Takes the max over
// `restarts` random starting vectors.
double estimate_lambda2(const Graph& g, long max_iterations, std::uint64_t seed, double tol = 1e-6,
                        int restarts = 3);

struct MixingCheck {
    bool pass = false;
    bool bipartite = false;
    double worst_margin = 0.0; // min over (t, v, start) of bound - deviation
    long worst_t = 0;
    double worst_deviation = 0.0;
};

// Verifies |P(X_t = v) - 1/n| <= exp(-(1-rho) t) for all t <= t_max from a
// sample of start vertices, with exact t-step distributions. Bipartite
// graphs are flagged (the bound needs |lambda2| < 1 on both spectrum ends).
MixingCheck check_mixing_bound(const Graph& g, double rho, long t_max, long sample_starts,
                               std::uint64_t seed);

struct ExpanderReport {
    long n = 0;
    long d = 0;
    double lambda2_abs = 0.0;
    bool connected = false;
    bool bipartite = false;
    double resistance_diameter_sample = 0.0; // max R_eff over sampled pairs
    long retries = 0;
};

// Builds the report for a generated expander: lambda2 estimate plus the max
// effective resistance over `pairs` seeded vertex pairs.
ExpanderReport expander_report(const Graph& g, std::uint64_t seed, long pairs = 16);

std::string to_json(const ExpanderReport& r);

} // namespace rwlab
