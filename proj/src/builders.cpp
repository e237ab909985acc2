#include "rwlab/builders.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rwlab/error.hpp"
#include "rwlab/expander.hpp"
#include "rwlab/rng.hpp"

namespace rwlab {

Graph build_halfline(long length) {
    if (length < 1) fail(errc::invalid_argument, "halfline length must be >= 1");
    Graph g;
    g.adj.resize(length + 1);
    g.heights.resize(length + 1);
    for (long v = 0; v <= length; ++v) {
        if (v > 0) g.adj[v].push_back(static_cast<Vertex>(v - 1));
        if (v < length) g.adj[v].push_back(static_cast<Vertex>(v + 1));
        g.heights[v] = v;
    }
    g.name = "halfline(" + std::to_string(length) + ")";
    g.meta["trunc_radius"] = std::to_string(length);
    return g;
}

Graph build_segment(long radius) {
    if (radius < 1) fail(errc::invalid_argument, "segment radius must be >= 1");
    const long n = 2 * radius + 1;
    Graph g;
    g.adj.resize(n);
    for (long v = 0; v < n; ++v) {
        if (v > 0) g.adj[v].push_back(static_cast<Vertex>(v - 1));
        if (v < n - 1) g.adj[v].push_back(static_cast<Vertex>(v + 1));
    }
    g.name = "segment(" + std::to_string(radius) + ")";
    g.meta["center"] = std::to_string(radius);
    g.meta["trunc_radius"] = std::to_string(radius);
    return g;
}

Graph build_star_halfline(long length, long pendants) {
    if (length < 1) fail(errc::invalid_argument, "star_halfline length must be >= 1");
    if (pendants < 0) fail(errc::invalid_argument, "pendants must be >= 0");
    Graph g = build_halfline(length);
    for (long k = 0; k < pendants; ++k) {
        Vertex p = static_cast<Vertex>(g.adj.size());
        g.adj.emplace_back();
        g.adj[p].push_back(0);
        g.adj[0].push_back(p);
        g.heights.push_back(0);
    }
    g.name = "star_halfline(" + std::to_string(length) + "," + std::to_string(pendants) + ")";
    return g;
}

Graph attach_expander(const Graph& base, Vertex anchor, const Graph& expander, Vertex port) {
    if (anchor >= base.vertex_count()) fail(errc::invalid_argument, "anchor out of range");
    if (port >= expander.vertex_count()) fail(errc::invalid_argument, "port out of range");
    const std::size_t nb = base.vertex_count();
    const std::size_t ne = expander.vertex_count();
    Graph g;
    g.adj.resize(nb + ne);
    for (Vertex v = 0; v < nb; ++v) g.adj[v] = base.adj[v];
    for (Vertex v = 0; v < ne; ++v) {
        g.adj[nb + v].reserve(expander.adj[v].size());
        for (Vertex w : expander.adj[v]) g.adj[nb + v].push_back(static_cast<Vertex>(nb + w));
    }
    const Vertex shifted_port = static_cast<Vertex>(nb + port);
    g.adj[anchor].push_back(shifted_port);
    g.adj[shifted_port].push_back(anchor);
    if (base.has_heights()) {
        g.heights = base.heights;
        g.heights.resize(nb + ne, base.heights[anchor]);
    }
    g.meta = base.meta;
    g.name = base.name + "+" + expander.name;
    return g;
}

long gt_expander_size(long t, double delta, long expander_degree) {
    const double raw = 3.0 * std::log(1.0 / delta) * static_cast<double>(t) /
                       (delta * std::log(static_cast<double>(t)));
    long n = static_cast<long>(std::ceil(raw));
    if (n < expander_degree + 1)
        fail(errc::invalid_argument, "gt expander size " + std::to_string(n) + " below degree+1");
    if ((n * expander_degree) % 2 != 0) ++n;
    return n;
}

Graph build_gt(long t, double delta, long expander_degree, std::uint64_t seed, long min_halfline) {
    if (t < 3) fail(errc::invalid_argument, "gt requires t >= 3");
    if (!(delta > 0.0 && delta < 1.0)) fail(errc::invalid_argument, "gt requires 0 < delta < 1");
    const long n = gt_expander_size(t, delta, expander_degree);
    const long length = std::max(t, min_halfline);
    Graph line = build_halfline(length);
    Graph exp = random_regular(n, expander_degree, seed);
    Graph g = attach_expander(line, 0, exp, 0);
    g.name = "gt(" + std::to_string(t) + ")";
    g.meta["trunc_radius"] = std::to_string(length);
    g.meta["expander_n"] = std::to_string(n);
    g.meta["expander_first"] = std::to_string(length + 1);
    return g;
}

std::vector<std::string> check_construction_params(const ConstructionParams& params) {
    if (params.heights.empty()) fail(errc::invalid_argument, "construction needs at least one height");
    if (params.heights.size() != params.expander_sizes.size())
        fail(errc::invalid_argument, "heights and expander_sizes must have equal length");
    if (params.expander_degree < 3) fail(errc::invalid_argument, "expander degree must be >= 3");
    for (std::size_t i = 0; i < params.heights.size(); ++i) {
        if (params.heights[i] < 1) fail(errc::invalid_argument, "heights must be positive");
        if (params.expander_sizes[i] < params.expander_degree + 1)
            fail(errc::invalid_argument, "expander size below degree+1");
        if (i > 0 && params.heights[i] <= params.heights[i - 1])
            fail(errc::invalid_argument, "heights must be strictly increasing");
    }
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < params.heights.size(); ++i) {
        const long h = params.heights[i];
        const long n = params.expander_sizes[i];
        if (i > 0) {
            const long prev = params.expander_sizes[i - 1] * params.heights[i - 1] * params.heights[i - 1];
            if (h <= prev)
                warnings.push_back("scale " + std::to_string(i + 1) + ": h_i=" + std::to_string(h) +
                                   " not above n_{i-1}*h_{i-1}^2=" + std::to_string(prev));
        }
        if (n < h * h * h)
            warnings.push_back("scale " + std::to_string(i + 1) + ": n_i=" + std::to_string(n) +
                               " below h_i^3=" + std::to_string(h * h * h));
    }
    return warnings;
}

Graph build_construction(const ConstructionParams& params, long min_halfline) {
    std::vector<std::string> warnings = check_construction_params(params);
    const long h_max = params.heights.back();
    const long length = std::max(2 * h_max + 16, min_halfline);
    Graph g = build_halfline(length);
    std::string ranges;
    for (std::size_t i = 0; i < params.heights.size(); ++i) {
        const std::size_t first = g.vertex_count();
        Graph exp = random_regular(params.expander_sizes[i], params.expander_degree,
                                   substream_key(params.seed, i, 0xC0));
        g = attach_expander(g, static_cast<Vertex>(params.heights[i]), exp, 0);
        if (!ranges.empty()) ranges += ",";
        ranges += std::to_string(first) + ":" + std::to_string(g.vertex_count() - 1);
    }
    g.name = "construction(k=" + std::to_string(params.heights.size()) + ")";
    g.meta["trunc_radius"] = std::to_string(length);
    g.meta["expander_ranges"] = ranges;
    if (!warnings.empty()) {
        std::string joined;
        for (const auto& w : warnings) {
            if (!joined.empty()) joined += "; ";
            joined += w;
        }
        g.meta["warnings"] = joined;
    }
    return g;
}

Graph comb_product(const Graph& g, const Graph& h, Vertex root) {
    if (root >= h.vertex_count()) fail(errc::invalid_argument, "comb root out of range");
    const std::size_t ng = g.vertex_count();
    const std::size_t nh = h.vertex_count();
    Graph c;
    c.adj.resize(ng * nh);
    auto id = [nh](std::size_t x, std::size_t w) { return static_cast<Vertex>(x * nh + w); };
    for (std::size_t x = 0; x < ng; ++x) {
        for (std::size_t w = 0; w < nh; ++w) {
            auto& list = c.adj[id(x, w)];
            for (Vertex z : h.adj[w]) list.push_back(id(x, z));
            if (w == root)
                for (Vertex y : g.adj[x]) list.push_back(id(y, root));
        }
    }
    if (h.has_heights()) {
        c.heights.resize(ng * nh);
        for (std::size_t x = 0; x < ng; ++x)
            for (std::size_t w = 0; w < nh; ++w) c.heights[id(x, w)] = h.heights[w];
    }
    c.name = "comb(" + g.name + "," + h.name + ",root=" + std::to_string(root) + ")";
    c.meta["tooth_size"] = std::to_string(nh);
    c.meta["tooth_root"] = std::to_string(root);
    return c;
}

Graph add_loops(const Graph& g, Vertex v, long count) {
    if (v >= g.vertex_count()) fail(errc::invalid_argument, "loop vertex out of range");
    if (count < 0) fail(errc::invalid_argument, "loop count must be >= 0");
    Graph out = g;
    for (long k = 0; k < count; ++k) out.adj[v].push_back(v);
    if (count > 0) out.name = g.name + "+loops(" + std::to_string(v) + "," + std::to_string(count) + ")";
    return out;
}

Graph attach_pendant(const Graph& g, Vertex anchor) {
    if (anchor >= g.vertex_count()) fail(errc::invalid_argument, "anchor out of range");
    Graph out = g;
    const Vertex p = static_cast<Vertex>(out.adj.size());
    out.adj.emplace_back();
    out.adj[p].push_back(anchor);
    out.adj[anchor].push_back(p);
    if (out.has_heights()) out.heights.push_back(out.heights[anchor]);
    out.name = g.name + "+pendant(" + std::to_string(anchor) + ")";
    return out;
}

Graph build_cycle(long n) {
    if (n < 3) fail(errc::invalid_argument, "cycle needs n >= 3");
    Graph g;
    g.adj.resize(n);
    for (long v = 0; v < n; ++v) {
        g.adj[v].push_back(static_cast<Vertex>((v + 1) % n));
        g.adj[v].push_back(static_cast<Vertex>((v + n - 1) % n));
    }
    g.name = "cycle(" + std::to_string(n) + ")";
    return g;
}

Graph build_complete(long n) {
    if (n < 2) fail(errc::invalid_argument, "complete graph needs n >= 2");
    Graph g;
    g.adj.resize(n);
    for (long v = 0; v < n; ++v)
        for (long w = 0; w < n; ++w)
            if (w != v) g.adj[v].push_back(static_cast<Vertex>(w));
    g.name = "complete(" + std::to_string(n) + ")";
    return g;
}

Graph build_torus(long rows, long cols) {
    if (rows < 3 || cols < 3) fail(errc::invalid_argument, "torus needs rows, cols >= 3");
    Graph g;
    g.adj.resize(rows * cols);
    auto id = [cols](long r, long c) { return static_cast<Vertex>(r * cols + c); };
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            g.adj[id(r, c)] = {id((r + 1) % rows, c), id((r + rows - 1) % rows, c),
                               id(r, (c + 1) % cols), id(r, (c + cols - 1) % cols)};
        }
    }
    g.name = "torus(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
    return g;
}

} // namespace rwlab
