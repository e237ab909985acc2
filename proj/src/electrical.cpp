#include "rwlab/electrical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "linsolve.hpp"
#include "rwlab/error.hpp"

namespace rwlab {

namespace {

double slot_conductance(const Network& net, std::size_t slot) {
    return net.conductance.empty() ? 1.0 : net.conductance[slot];
}

void check_boundary_sets(const Graph& g, const std::vector<Vertex>& sources,
                         const std::vector<Vertex>& sinks) {
    if (sources.empty() || sinks.empty()) fail(errc::invalid_argument, "boundary sets must be nonempty");
    std::vector<char> mark(g.vertex_count(), 0);
    for (Vertex v : sources) {
        if (v >= g.vertex_count()) fail(errc::invalid_argument, "source vertex out of range");
        mark[v] = 1;
    }
    for (Vertex v : sinks) {
        if (v >= g.vertex_count()) fail(errc::invalid_argument, "sink vertex out of range");
        if (mark[v]) fail(errc::invalid_argument, "source and sink sets must be disjoint");
    }
}

} // namespace

Potential solve_potential(const Network& net, const std::vector<Vertex>& sources,
                          const std::vector<Vertex>& sinks) {
    const Graph& g = *net.graph;
    check_boundary_sets(g, sources, sinks);
    const std::size_t n = g.vertex_count();

    std::vector<char> boundary(n, 0);
    std::vector<double> value(n, 0.0);
    for (Vertex v : sources) boundary[v] = 1;
    for (Vertex v : sinks) {
        boundary[v] = 1;
        value[v] = 1.0;
    }
    std::vector<double> f =
        detail::solve_dirichlet(g, boundary, value, std::vector<double>(n, 0.0), net.conductance);

    // Current drawn by the raw 0/1 potential; scaling by 1/I makes it a
    // unit flow and puts R_eff on the sinks.
    std::vector<char> is_source(n, 0);
    for (Vertex s : sources) is_source[s] = 1;
    double current = 0.0;
    std::size_t slot = 0;
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < g.adj[v].size(); ++j, ++slot) {
            Vertex w = g.adj[v][j];
            if (w == v) continue;
            if (is_source[v] && !is_source[w]) current += slot_conductance(net, slot) * (f[w] - f[v]);
        }
    }
    if (!(current > 0.0)) fail(errc::internal, "no current between boundary sets");
    const double reff = 1.0 / current;
    for (double& x : f) x *= reff;

    Potential p;
    p.f = std::move(f);
    p.sources = sources;
    p.sinks = sinks;
    p.effective_resistance = reff;
    return p;
}

double effective_resistance(const Network& net, const std::vector<Vertex>& sources,
                            const std::vector<Vertex>& sinks) {
    return solve_potential(net, sources, sinks).effective_resistance;
}

double escape_probability(const Network& net, Vertex v, const std::vector<Vertex>& targets) {
    const Graph& g = *net.graph;
    for (Vertex a : targets)
        if (a == v) fail(errc::invalid_argument, "escape target contains the start vertex");
    const double reff = effective_resistance(net, {v}, targets);
    return 1.0 / (static_cast<double>(g.degree(v)) * reff);
}

std::vector<double> expected_hitting_times(const Graph& g, const std::vector<Vertex>& targets) {
    if (targets.empty()) fail(errc::invalid_argument, "target set must be nonempty");
    const std::size_t n = g.vertex_count();
    std::vector<char> boundary(n, 0);
    for (Vertex v : targets) {
        if (v >= n) fail(errc::invalid_argument, "target vertex out of range");
        boundary[v] = 1;
    }
    // (L E)(u) = d_u for u off the target set, E == 0 on it.
    std::vector<double> rhs(n, 0.0);
    for (Vertex v = 0; v < n; ++v) rhs[v] = static_cast<double>(g.degree(v));
    return detail::solve_dirichlet(g, boundary, std::vector<double>(n, 0.0), rhs);
}

double expected_hitting_time(const Graph& g, Vertex start, const std::vector<Vertex>& targets) {
    if (start >= g.vertex_count()) fail(errc::invalid_argument, "start vertex out of range");
    return expected_hitting_times(g, targets)[start];
}

double lipschitz_margin(const Network& net, const Potential& p) {
    const Graph& g = *net.graph;
    double worst = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.adj[v])
            if (w != v) worst = std::max(worst, std::abs(p.f[v] - p.f[w]));
    return worst;
}

SublevelCut sublevel_cut(const Network& net, const Potential& p, double threshold) {
    const Graph& g = *net.graph;
    const double fmax = *std::max_element(p.f.begin(), p.f.end());
    if (!(threshold > 0.0 && threshold < fmax))
        fail(errc::invalid_argument, "threshold must lie strictly between 0 and max potential");
    const std::size_t n = g.vertex_count();
    std::vector<char> in_s(n, 0);
    SublevelCut cut;
    for (Vertex v = 0; v < n; ++v)
        if (p.f[v] < threshold) {
            in_s[v] = 1;
            cut.inside.push_back(v);
        }
    std::vector<char> on_boundary(n, 0);
    for (Vertex v : cut.inside)
        for (Vertex w : g.adj[v])
            if (!in_s[w] && !on_boundary[w]) {
                on_boundary[w] = 1;
                cut.boundary.push_back(w);
            }
    std::sort(cut.boundary.begin(), cut.boundary.end());
    if (cut.boundary.empty()) fail(errc::invalid_argument, "degenerate cut: empty outer boundary");
    cut.reff_to_boundary = effective_resistance(net, p.sources, cut.boundary);
    return cut;
}

void write_potential_csv(const Potential& p, std::ostream& out) {
    out << "vertex,f\n";
    char buf[64];
    for (std::size_t v = 0; v < p.f.size(); ++v) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", v, p.f[v]);
        out << buf;
    }
}

void write_flow_csv(const Network& net, const Potential& p, std::ostream& out) {
    const Graph& g = *net.graph;
    out << "u,v,i\n";
    char buf[96];
    std::size_t slot = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t j = 0; j < g.adj[v].size(); ++j, ++slot) {
            Vertex w = g.adj[v][j];
            if (w <= v) continue; // one line per undirected edge, loops carry none
            double i = slot_conductance(net, slot) * (p.f[w] - p.f[v]);
            Vertex a = v, b = w;
            if (i < 0) {
                std::swap(a, b);
                i = -i;
            }
            std::snprintf(buf, sizeof buf, "%u,%u,%.17g\n", a, b, i);
            out << buf;
        }
    }
}

} // namespace rwlab
