#pragma once

#include <iosfwd>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

// Electrical view of a graph. Conductances are per adjacency slot (the
// flattened CsrGraph order) and must be symmetric; unit() fills 1.0
// everywhere, which is the only case the walk theory here needs.
struct Network {
    const Graph* graph = nullptr;
    std::vector<double> conductance; // empty means all-unit

    static Network unit(const Graph& g) { return Network{&g, {}}; }
};

// Harmonic potential of the unit current flow from S to T: f == 0 on S,
// f == R_eff on T, harmonic elsewhere.
struct Potential {
    std::vector<double> f;
    std::vector<Vertex> sources;
    std::vector<Vertex> sinks;
    double effective_resistance = 0.0;
};

Potential solve_potential(const Network& net, const std::vector<Vertex>& sources,
                          const std::vector<Vertex>& sinks);

// R_eff(S <-> T) with vertex sets merged into super-nodes by the shared
// boundary values.
double effective_resistance(const Network& net, const std::vector<Vertex>& sources,
                            const std::vector<Vertex>& sinks);

// P_v(tau_A < tau_v) = 1 / (d_v * R_eff(v <-> A)).
double escape_probability(const Network& net, Vertex v, const std::vector<Vertex>& targets);

// E_start[tau_A] in steps for the simple random walk (unit conductances).
double expected_hitting_time(const Graph& g, Vertex start, const std::vector<Vertex>& targets);

// Full vector E_u[tau_A] for every u; targets get 0.
std::vector<double> expected_hitting_times(const Graph& g, const std::vector<Vertex>& targets);

// Max |f(u) - f(w)| over edges; unit flows on unit resistances keep this
// at most 1.
double lipschitz_margin(const Network& net, const Potential& p);

struct SublevelCut {
    std::vector<Vertex> inside;   // {u : f(u) < threshold}
    std::vector<Vertex> boundary; // outer vertex boundary N(inside)
    double reff_to_boundary = 0.0; // R_eff(sources <-> boundary)
};

// Strict sublevel set of the potential plus its outer boundary; ties
// f(u) == threshold fall outside. Throws on an empty boundary.
SublevelCut sublevel_cut(const Network& net, const Potential& p, double threshold);

// CSV exports: "vertex,f" rows and "u,v,i" rows (current per directed
// edge, one line per undirected edge oriented from lower to higher f).
void write_potential_csv(const Potential& p, std::ostream& out);
void write_flow_csv(const Network& net, const Potential& p, std::ostream& out);

} // namespace rwlab
