#include "rwlab/rational.hpp"

#include "rwlab/error.hpp"

namespace rwlab {

namespace {

// One killed step of the mass vector; returns the mass absorbed at target.
Rational push_mass_exact(const Graph& g, Vertex target, const std::vector<Rational>& in,
                         std::vector<Rational>& out) {
    const std::size_t n = g.vertex_count();
    out.assign(n, Rational(0));
    Rational absorbed(0);
    for (Vertex u = 0; u < n; ++u) {
        if (in[u] == 0) continue;
        const Rational share = in[u] / g.degree(u);
        for (Vertex w : g.adj[u]) {
            if (w == target)
                absorbed += share;
            else
                out[w] += share;
        }
    }
    return absorbed;
}

} // namespace

RationalTable rational_hitting_table(const Graph& g, Vertex start, Vertex target, long horizon) {
    if (horizon < 1) fail(errc::invalid_argument, "horizon must be >= 1");
    if (start >= g.vertex_count() || target >= g.vertex_count())
        fail(errc::invalid_argument, "vertex out of range");
    RationalTable table;
    table.v = target;
    table.start = start;
    table.horizon = horizon;
    table.p.assign(horizon + 1, Rational(0));
    table.s.assign(horizon + 2, Rational(0));
    table.s[1] = 1;
    std::vector<Rational> mass(g.vertex_count(), Rational(0)), next;
    mass[start] = 1;
    for (long t = 1; t <= horizon; ++t) {
        table.p[t] = push_mass_exact(g, target, mass, next);
        table.s[t + 1] = table.s[t] - table.p[t];
        mass.swap(next);
    }
    return table;
}

RationalTable rational_return_table(const Graph& g, Vertex v, long horizon) {
    return rational_hitting_table(g, v, v, horizon);
}

bool reversibility_identity_exact(const Graph& g, Vertex v, long t) {
    if (t < 2) fail(errc::invalid_argument, "reversibility identity needs t >= 2");
    const std::size_t n = g.vertex_count();
    const long half_up = (t + 1) / 2;
    const long half_down = t / 2;

    // h_s(u) = P_u(tau_v = s) via the averaging operator killed at v.
    std::vector<Rational> h(n, Rational(0)), tmp(n);
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        long mult = 0;
        for (Vertex w : g.adj[u])
            if (w == v) ++mult;
        if (mult > 0) h[u] = Rational(mult) / g.degree(u);
    }
    std::vector<Rational> h_up, h_down;
    for (long s = 1; s <= half_up; ++s) {
        if (s == half_down) h_down = h;
        if (s == half_up) h_up = h;
        if (s < half_up) {
            for (Vertex u = 0; u < n; ++u) {
                tmp[u] = 0;
                if (u == v) continue;
                Rational acc(0);
                for (Vertex w : g.adj[u])
                    if (w != v) acc += h[w];
                tmp[u] = acc / g.degree(u);
            }
            h.swap(tmp);
        }
    }

    Rational rhs(0);
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        rhs += Rational(g.degree(u)) * h_up[u] * h_down[u];
    }
    rhs /= g.degree(v);

    RationalTable table = rational_return_table(g, v, t);
    return table.p[t] == rhs;
}

} // namespace rwlab
