#include "rwlab/edgelist.hpp"

#include <fstream>
#include <sstream>

#include "rwlab/error.hpp"

namespace rwlab {

void write_edgelist(const Graph& g, std::ostream& out) {
    const std::size_t n = g.vertex_count();
    out << n << " " << g.edge_count() << "\n";
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.adj[v]) {
            if (w > v) {
                out << v << " " << w << "\n";
            } else if (w == v) {
                out << v << " " << v << "\n"; // loops live only in v's own list
            }
        }
    }
    if (g.has_heights())
        for (Vertex v = 0; v < n; ++v) out << "H " << v << " " << g.heights[v] << "\n";
}

void write_edgelist_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_failure, "cannot open for writing: " + path);
    write_edgelist(g, out);
    if (!out) fail(errc::io_failure, "write failed: " + path);
}

Graph read_edgelist(std::istream& in) {
    std::size_t n = 0, m = 0;
    std::string line;
    if (!std::getline(in, line)) fail(errc::io_failure, "empty edge-list input");
    {
        std::istringstream head(line);
        if (!(head >> n >> m)) fail(errc::io_failure, "bad edge-list header (want 'n m')");
    }
    Graph g;
    g.adj.resize(n);
    std::size_t edges_seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string first;
        row >> first;
        if (first == "H") {
            long v = -1, h = -1;
            if (!(row >> v >> h) || v < 0 || static_cast<std::size_t>(v) >= n || h < 0)
                fail(errc::io_failure, "bad height line: " + line);
            if (g.heights.empty()) g.heights.assign(n, 0);
            g.heights[v] = h;
            continue;
        }
        long u = -1, v = -1;
        try {
            u = std::stol(first);
        } catch (...) {
            fail(errc::io_failure, "bad edge line: " + line);
        }
        if (!(row >> v) || u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n)
            fail(errc::io_failure, "bad edge line: " + line);
        ++edges_seen;
        if (u == v) {
            g.adj[u].push_back(static_cast<Vertex>(u));
        } else {
            g.adj[u].push_back(static_cast<Vertex>(v));
            g.adj[v].push_back(static_cast<Vertex>(u));
        }
    }
    if (edges_seen != m)
        fail(errc::io_failure, "edge count mismatch: header says " + std::to_string(m) + ", found " +
                                   std::to_string(edges_seen));
    validate(g);
    return g;
}

Graph read_edgelist_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open for reading: " + path);
    Graph g = read_edgelist(in);
    g.name = path;
    return g;
}

} // namespace rwlab
