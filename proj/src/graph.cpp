#include "rwlab/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

#include "rwlab/error.hpp"

namespace rwlab {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0; // every non-loop entry appears twice, loops once
    std::size_t loops = 0;
    for (Vertex v = 0; v < adj.size(); ++v) {
        twice += adj[v].size();
        for (Vertex w : adj[v])
            if (w == v) ++loops;
    }
    return (twice + loops) / 2;
}

std::uint32_t Graph::loops_at(Vertex v) const {
    std::uint32_t k = 0;
    for (Vertex w : adj[v])
        if (w == v) ++k;
    return k;
}

const std::string* Graph::meta_value(const std::string& key) const {
    auto it = meta.find(key);
    return it == meta.end() ? nullptr : &it->second;
}

std::optional<long> Graph::truncation_radius() const {
    if (const std::string* s = meta_value("trunc_radius")) return std::atol(s->c_str());
    return std::nullopt;
}

void validate(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) fail(errc::invalid_argument, "graph has no vertices");
    for (Vertex v = 0; v < n; ++v) {
        if (g.adj[v].empty()) fail(errc::invalid_argument, "vertex " + std::to_string(v) + " has degree 0");
        for (Vertex w : g.adj[v])
            if (w >= n) fail(errc::invalid_argument, "neighbor id out of range at vertex " + std::to_string(v));
    }
    // Symmetry with multiplicities (loops counted once, on their own vertex).
    std::map<std::pair<Vertex, Vertex>, long> balance;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.adj[v]) {
            if (w == v) continue;
            if (v < w)
                ++balance[{v, w}];
            else
                --balance[{w, v}];
        }
    }
    for (const auto& [e, b] : balance) {
        if (b != 0)
            fail(errc::invalid_argument, "asymmetric adjacency between " + std::to_string(e.first) + " and " +
                                             std::to_string(e.second));
    }
    if (!g.heights.empty()) {
        if (g.heights.size() != n) fail(errc::invalid_argument, "heights size mismatch");
        for (long h : g.heights)
            if (h < 0) fail(errc::invalid_argument, "negative height label");
    }
    if (!is_connected(g)) fail(errc::invalid_argument, "graph is not connected");
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::queue<Vertex> q;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.adj[v]) {
                if (w == v) return false;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::uint32_t edge_multiplicity(const Graph& g, Vertex u, Vertex w) {
    return static_cast<std::uint32_t>(std::count(g.adj[u].begin(), g.adj[u].end(), w));
}

CsrGraph::CsrGraph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    offsets.resize(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
    neighbors.reserve(offsets[n]);
    for (Vertex v = 0; v < n; ++v) neighbors.insert(neighbors.end(), g.adj[v].begin(), g.adj[v].end());
}

} // namespace rwlab
