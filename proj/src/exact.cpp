#include "rwlab/exact.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "linsolve.hpp"
#include "rwlab/error.hpp"

namespace rwlab {

KilledWalkOperator::KilledWalkOperator(const Graph& g, Vertex absorbing)
    : g_(&g), absorbing_(absorbing) {
    if (absorbing >= g.vertex_count()) fail(errc::invalid_argument, "absorbing vertex out of range");
}

void KilledWalkOperator::apply(const std::vector<double>& f, std::vector<double>& out) const {
    const Graph& g = *g_;
    const std::size_t n = g.vertex_count();
    out.assign(n, 0.0);
    for (Vertex u = 0; u < n; ++u) {
        if (u == absorbing_) continue;
        double acc = 0.0;
        for (Vertex w : g.adj[u])
            if (w != absorbing_) acc += f[w];
        out[u] = acc / static_cast<double>(g.degree(u));
    }
}

double KilledWalkOperator::push_mass(const std::vector<double>& in, std::vector<double>& out) const {
    const Graph& g = *g_;
    const std::size_t n = g.vertex_count();
    out.assign(n, 0.0);
    double absorbed = 0.0;
    for (Vertex u = 0; u < n; ++u) {
        const double mass = in[u];
        if (mass == 0.0) continue;
        const double share = mass / static_cast<double>(g.degree(u));
        for (Vertex w : g.adj[u]) {
            if (w == absorbing_)
                absorbed += share;
            else
                out[w] += share;
        }
    }
    return absorbed;
}

namespace {

ReturnTimeTable killed_table(const Graph& g, Vertex start, Vertex target, long horizon,
                             bool waive_exactness) {
    if (horizon < 1) fail(errc::invalid_argument, "horizon must be >= 1");
    if (start >= g.vertex_count() || target >= g.vertex_count())
        fail(errc::invalid_argument, "vertex out of range");

    ReturnTimeTable table;
    table.v = target;
    table.start = start;
    table.horizon = horizon;
    if (auto radius = g.truncation_radius(); radius && horizon > *radius) {
        table.exact = false;
        table.truncation_warning = true;
        if (!waive_exactness)
            fail(errc::invalid_argument,
                 "horizon " + std::to_string(horizon) + " exceeds truncation radius " +
                     std::to_string(*radius) + " (pass waive_exactness to proceed)");
    }

    KilledWalkOperator op(g, target);
    std::vector<double> mass(g.vertex_count(), 0.0), next;
    mass[start] = 1.0;
    table.p.assign(horizon + 1, 0.0);
    table.s.assign(horizon + 2, 0.0);
    table.s[1] = 1.0;
    for (long t = 1; t <= horizon; ++t) {
        table.p[t] = op.push_mass(mass, next);
        table.s[t + 1] = table.s[t] - table.p[t];
        mass.swap(next);
    }
    return table;
}

} // namespace

double ReturnTimeTable::hazard(long t) const {
    if (s[t] < 1e-300) return std::numeric_limits<double>::quiet_NaN();
    return p[t] / s[t];
}

ReturnTimeTable return_time_distribution(const Graph& g, Vertex v, long horizon,
                                         bool waive_exactness) {
    return killed_table(g, v, v, horizon, waive_exactness);
}

ReturnTimeTable hitting_time_distribution(const Graph& g, Vertex start, Vertex target, long horizon,
                                          bool waive_exactness) {
    return killed_table(g, start, target, horizon, waive_exactness);
}

std::vector<double> green_function(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) fail(errc::invalid_argument, "vertex out of range");
    const std::size_t n = g.vertex_count();
    // With f = N/d the expected-visit equations become the Dirichlet system
    // killed at v: d_u f(u) - sum_{w ~ u, w != v} f(w) = A(u,v)/d_v.
    std::vector<char> boundary(n, 0);
    boundary[v] = 1;
    std::vector<double> rhs(n, 0.0);
    const double dv = static_cast<double>(g.degree(v));
    for (Vertex w : g.adj[v])
        if (w != v) rhs[w] += 1.0 / dv;
    std::vector<double> f = detail::solve_dirichlet(g, boundary, std::vector<double>(n, 0.0), rhs);
    std::vector<double> visits(n, 0.0);
    for (Vertex u = 0; u < n; ++u) visits[u] = f[u] * static_cast<double>(g.degree(u));
    visits[v] = 1.0;
    return visits;
}

double reversibility_residual(const Graph& g, Vertex v, long t) {
    if (t < 2) fail(errc::invalid_argument, "reversibility identity needs t >= 2");
    const std::size_t n = g.vertex_count();
    KilledWalkOperator op(g, v);

    // h_s(u) = P_u(tau_v = s), built by iterating the killed operator on
    // h_1(u) = A(u,v)/d_u.
    std::vector<double> h(n, 0.0), tmp;
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        double mult = 0.0;
        for (Vertex w : g.adj[u])
            if (w == v) mult += 1.0;
        h[u] = mult / static_cast<double>(g.degree(u));
    }
    const long half_up = (t + 1) / 2;
    const long half_down = t / 2;
    std::vector<double> h_up, h_down;
    std::vector<double> cur = h;
    for (long s = 1; s <= half_up; ++s) {
        if (s == half_down) h_down = cur;
        if (s == half_up) h_up = cur;
        if (s < half_up) {
            op.apply(cur, tmp);
            cur.swap(tmp);
        }
    }
    if (half_down == half_up) h_down = h_up;

    double rhs = 0.0;
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        rhs += static_cast<double>(g.degree(u)) * h_up[u] * h_down[u];
    }
    rhs /= static_cast<double>(g.degree(v));

    ReturnTimeTable table = return_time_distribution(g, v, t, /*waive_exactness=*/true);
    return std::abs(table.p[t] - rhs);
}

MonotonicityResult even_monotonicity_check(const ReturnTimeTable& table, double tol) {
    MonotonicityResult res;
    for (long t = 2; t + 2 <= table.horizon; t += 2) {
        const double gap = table.p[t] - table.p[t + 2];
        if (gap < res.worst_gap) res.worst_gap = gap;
        if (gap < -tol && res.pass) {
            res.pass = false;
            res.first_violation = t;
        }
    }
    return res;
}

std::vector<double> moment_sequence(const ReturnTimeTable& table) {
    std::vector<double> m;
    for (long t = 2; t <= table.horizon; ++t) m.push_back(table.p[t]);
    return m;
}

double hankel_min_eigenvalue(const std::vector<double>& moments, long order, bool shifted) {
    if (order < 1) fail(errc::invalid_argument, "hankel order must be >= 1");
    const long need = 2 * (order - 1) + (shifted ? 2 : 0);
    if (need >= static_cast<long>(moments.size()))
        fail(errc::invalid_argument, "moment sequence too short for requested order");
    Eigen::MatrixXd h(order, order);
    for (long i = 0; i < order; ++i)
        for (long j = 0; j < order; ++j) {
            double x = moments[i + j];
            if (shifted) x -= moments[i + j + 2];
            h(i, j) = x;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

double theorem1_margin(const ReturnTimeTable& table, long d_v) {
    double margin = std::numeric_limits<double>::infinity();
    for (long t = 1; t <= table.horizon; ++t)
        margin = std::min(margin, static_cast<double>(d_v) * std::sqrt(static_cast<double>(t)) *
                                      table.s[t]);
    return margin;
}

HazardProfile theorem2_hazard_profile(const ReturnTimeTable& table, long d_v) {
    HazardProfile prof;
    prof.values.assign(table.horizon + 1, std::numeric_limits<double>::quiet_NaN());
    const double late_threshold = std::exp(10.0) / static_cast<double>(d_v);
    for (long t = 1; t <= table.horizon; ++t) {
        const double hz = table.hazard(t);
        if (std::isnan(hz)) continue;
        const double denom = std::log(static_cast<double>(d_v) * static_cast<double>(t));
        double value;
        if (denom <= 0.0) {
            // only d_v = 1, t = 1, where the hazard is 0 on a simple graph
            value = hz == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        } else {
            value = static_cast<double>(t) * hz / denom;
        }
        prof.values[t] = value;
        if (value > prof.max_value) {
            prof.max_value = value;
            prof.argmax = t;
        }
        if (static_cast<double>(t) >= late_threshold &&
            static_cast<double>(t) * hz / std::log(static_cast<double>(t)) > 24.0)
            ++prof.late_exceedances;
    }
    return prof;
}

void write_table_csv(const ReturnTimeTable& table, std::ostream& out) {
    out << "t,p,s,hazard\n";
    char buf[128];
    for (long t = 1; t <= table.horizon; ++t) {
        std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g\n", t, table.p[t], table.s[t],
                      table.hazard(t));
        out << buf;
    }
}

} // namespace rwlab
