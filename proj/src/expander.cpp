#include "rwlab/expander.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "rwlab/electrical.hpp"
#include "rwlab/error.hpp"
#include "rwlab/rng.hpp"

namespace rwlab {

Graph random_regular(long n, long d, std::uint64_t seed, long max_retries) {
    if (d < 1) fail(errc::invalid_argument, "degree must be >= 1");
    if (n < d + 1) fail(errc::invalid_argument, "regular graph needs n >= d+1");
    if ((n * d) % 2 != 0) fail(errc::invalid_argument, "n*d must be even");

    std::vector<std::uint32_t> stubs(n * d);
    for (long attempt = 0; attempt < max_retries; ++attempt) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(attempt), 0xE0);
        for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<std::uint32_t>(i);
        // Fisher-Yates; pairing consecutive entries gives a uniform matching.
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = rng.below(static_cast<std::uint32_t>(i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        Graph g;
        g.adj.assign(n, {});
        bool rejected = false;
        for (std::size_t i = 0; i + 1 < stubs.size() && !rejected; i += 2) {
            Vertex u = stubs[i] / static_cast<std::uint32_t>(d);
            Vertex w = stubs[i + 1] / static_cast<std::uint32_t>(d);
            if (u == w) rejected = true; // loop
            g.adj[u].push_back(w);
            g.adj[w].push_back(u);
        }
        if (rejected) continue;
        for (Vertex v = 0; v < static_cast<Vertex>(n) && !rejected; ++v) {
            std::sort(g.adj[v].begin(), g.adj[v].end());
            for (std::size_t i = 0; i + 1 < g.adj[v].size(); ++i)
                if (g.adj[v][i] == g.adj[v][i + 1]) {
                    rejected = true; // multi-edge
                    break;
                }
        }
        if (rejected || !is_connected(g)) continue;
        g.name = "regular(" + std::to_string(n) + "," + std::to_string(d) + ")";
        g.meta["seed"] = std::to_string(seed);
        g.meta["retries"] = std::to_string(attempt);
        return g;
    }
    fail(errc::generation_failed, "configuration model rejected " + std::to_string(max_retries) +
                                      " pairings for n=" + std::to_string(n) +
                                      " d=" + std::to_string(d));
}

double estimate_lambda2(const Graph& g, long max_iterations, std::uint64_t seed, double tol,
                        int restarts) {
    const std::size_t n = g.vertex_count();
    const std::uint32_t d = g.degree(0);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != d)
            fail(errc::invalid_argument, "lambda2 estimation assumes a regular graph");
    if (!is_connected(g)) fail(errc::invalid_argument, "lambda2 estimation needs a connected graph");

    auto subtract_mean = [n](std::vector<double>& x) {
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(n);
        for (double& v : x) v -= mean;
    };

    double best = 0.0;
    std::vector<double> x(n), y(n);
    for (int restart = 0; restart < restarts; ++restart) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(restart), 0x7A);
        for (double& v : x) v = rng.next_double() - 0.5;
        subtract_mean(x);
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (double& v : x) v /= norm;

        double rayleigh = 0.0, prev = 2.0;
        for (long it = 0; it < max_iterations; ++it) {
            for (Vertex u = 0; u < n; ++u) {
                double acc = 0.0;
                for (Vertex w : g.adj[u]) acc += x[w];
                y[u] = acc / static_cast<double>(d);
            }
            subtract_mean(y);
            rayleigh = 0.0;
            for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * y[i];
            double ynorm = 0.0;
            for (double v : y) ynorm += v * v;
            ynorm = std::sqrt(ynorm);
            if (ynorm < 1e-300) break; // started orthogonal to everything
            for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ynorm;
            if (std::abs(rayleigh - prev) <= tol) break;
            prev = rayleigh;
        }
        best = std::max(best, std::min(1.0, std::abs(rayleigh)));
    }
    return best;
}

MixingCheck check_mixing_bound(const Graph& g, double rho, long t_max, long sample_starts,
                               std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    MixingCheck res;
    res.bipartite = is_bipartite(g);
    res.pass = true;
    res.worst_margin = std::numeric_limits<double>::infinity();

    std::vector<Vertex> starts;
    if (sample_starts <= 0 || static_cast<std::size_t>(sample_starts) >= n) {
        for (Vertex v = 0; v < n; ++v) starts.push_back(v);
    } else {
        SplitMix64 rng = substream(seed, 0, 0x5B);
        for (long i = 0; i < sample_starts; ++i)
            starts.push_back(rng.below(static_cast<std::uint32_t>(n)));
    }

    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> mass(n), next(n);
    for (Vertex s : starts) {
        std::fill(mass.begin(), mass.end(), 0.0);
        mass[s] = 1.0;
        for (long t = 0; t <= t_max; ++t) {
            double dev = 0.0;
            for (double m : mass) dev = std::max(dev, std::abs(m - uniform));
            const double bound = std::exp(-(1.0 - rho) * static_cast<double>(t));
            const double margin = bound - dev;
            if (margin < res.worst_margin) {
                res.worst_margin = margin;
                res.worst_t = t;
                res.worst_deviation = dev;
            }
            if (margin < 0.0) res.pass = false;
            if (t == t_max) break;
            std::fill(next.begin(), next.end(), 0.0);
            for (Vertex u = 0; u < n; ++u) {
                if (mass[u] == 0.0) continue;
                const double share = mass[u] / static_cast<double>(g.degree(u));
                for (Vertex w : g.adj[u]) next[w] += share;
            }
            mass.swap(next);
        }
    }
    return res;
}

ExpanderReport expander_report(const Graph& g, std::uint64_t seed, long pairs) {
    ExpanderReport r;
    r.n = static_cast<long>(g.vertex_count());
    r.d = g.degree(0);
    r.connected = is_connected(g);
    r.bipartite = is_bipartite(g);
    r.lambda2_abs = estimate_lambda2(g, 100000, seed);
    if (const std::string* s = g.meta_value("retries")) r.retries = std::atol(s->c_str());

    Network net = Network::unit(g);
    SplitMix64 rng = substream(seed, 0, 0x1F);
    double worst = 0.0;
    for (long k = 0; k < pairs; ++k) {
        Vertex u = rng.below(static_cast<std::uint32_t>(r.n));
        Vertex w = rng.below(static_cast<std::uint32_t>(r.n));
        if (u == w) continue;
        worst = std::max(worst, effective_resistance(net, {u}, {w}));
    }
    r.resistance_diameter_sample = worst;
    return r;
}

std::string to_json(const ExpanderReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["lambda2_abs"] = r.lambda2_abs;
    j["connected"] = r.connected;
    j["bipartite"] = r.bipartite;
    j["resistance_diameter_sample"] = r.resistance_diameter_sample;
    j["retries"] = r.retries;
    return j.dump(2);
}

} // namespace rwlab
