#pragma once

#include <iosfwd>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

// Walk operator killed upon hitting the absorbing vertex:
//   (Q f)(u) = (1/d_u) * sum_{w ~ u, w != absorbing} f(w),  (Q f)(absorbing) = 0.
// Self-adjoint in the degree inner product <f,g> = sum_u d_u f(u) g(u).
// push_mass applies the adjoint description: it moves a mass vector one
// step and returns the mass absorbed into the absorbing vertex.
class KilledWalkOperator {
public:
    KilledWalkOperator(const Graph& g, Vertex absorbing);

    void apply(const std::vector<double>& f, std::vector<double>& out) const;

    double push_mass(const std::vector<double>& in, std::vector<double>& out) const;

    Vertex absorbing() const { return absorbing_; }

private:
    const Graph* g_;
    Vertex absorbing_;
};

// Exact distribution of tau = min{t >= 1 : X_t = v}:
//   p[t] = P(tau = t), s[t] = P(tau >= t), hazard(t) = p[t]/s[t].
// Entries are valid for 1 <= t <= horizon; s is additionally defined at
// horizon+1 (the mass still in flight). `exact` is set unless the horizon
// exceeds the graph's recorded truncation radius.
struct ReturnTimeTable {
    Vertex v = 0;
    Vertex start = 0;
    long horizon = 0;
    bool exact = true;
    bool truncation_warning = false;
    std::vector<double> p; // index 0 unused
    std::vector<double> s; // index 0 unused; sized horizon+2

    double hazard(long t) const;
    double total_return_mass() const { return 1.0 - s[horizon + 1]; }
};

ReturnTimeTable return_time_distribution(const Graph& g, Vertex v, long horizon,
                                         bool waive_exactness = false);

// P_start(tau_target = t); coincides with the return table when
// start == target.
ReturnTimeTable hitting_time_distribution(const Graph& g, Vertex start, Vertex target, long horizon,
                                          bool waive_exactness = false);

// Expected visits to u strictly between successive visits to v; satisfies
// g(u) = d_u / d_v on finite connected graphs, with g(v) = 1.
std::vector<double> green_function(const Graph& g, Vertex v);

// | P_v(tau=t) - (1/d_v) sum_{u != v} d_u P_u(tau_v=ceil(t/2)) P_u(tau_v=floor(t/2)) |.
double reversibility_residual(const Graph& g, Vertex v, long t);

struct MonotonicityResult {
    bool pass = true;
    long first_violation = 0; // even t with p[t] < p[t+2] beyond tolerance
    double worst_gap = 0.0;   // most negative p[t] - p[t+2]
};

// Checks that P(tau = 2t) is non-increasing (tolerance 1e-14).
MonotonicityResult even_monotonicity_check(const ReturnTimeTable& table, double tol = 1e-14);

// Moment sequence of the spectral measure: m[k] = p[k+2].
std::vector<double> moment_sequence(const ReturnTimeTable& table);

// Minimal eigenvalue of the Hankel matrix H[i][j] = m[i+j] (or the shifted
// variant m[i+j] - m[i+j+2], PSD because the measure lives in [-1,1]).
double hankel_min_eigenvalue(const std::vector<double>& moments, long order, bool shifted = false);

// min over 1 <= t <= horizon of d_v * sqrt(t) * s[t]; the universal lower
// bound on survival holds with constant 1/4.
double theorem1_margin(const ReturnTimeTable& table, long d_v);

struct HazardProfile {
    std::vector<double> values; // t*hazard[t]/log(d_v*t); NaN when hazard is undefined
    double max_value = 0.0;
    long argmax = 0;
    long late_exceedances = 0; // entries > 24 with t >= e^10/d_v (recorded, not asserted)
};

HazardProfile theorem2_hazard_profile(const ReturnTimeTable& table, long d_v);

// CSV with header "t,p,s,hazard", 17 significant digits, "nan" for an
// undefined hazard.
void write_table_csv(const ReturnTimeTable& table, std::ostream& out);

} // namespace rwlab
