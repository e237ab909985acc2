#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rwlab {

using Vertex = std::uint32_t;

// Finite simple graph with optional loop edges and optional per-vertex
// height labels. A loop is encoded by a vertex appearing once in its own
// adjacency list and contributes 1 to the degree; a loop step stays put.
// Graphs are immutable after construction: builders return new values.
struct Graph {
    std::vector<std::vector<Vertex>> adj;
    std::vector<long> heights; // empty when heights are unset
    std::string name;
    std::map<std::string, std::string> meta;

    std::size_t vertex_count() const { return adj.size(); }

    // Number of edges; a loop counts as one edge.
    std::size_t edge_count() const;

    std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adj[v].size()); }

    std::uint32_t loops_at(Vertex v) const;

    bool has_heights() const { return !heights.empty(); }

    long height(Vertex v) const { return heights.empty() ? -1 : heights[v]; }

    const std::string* meta_value(const std::string& key) const;

    // Truncation radius recorded by builders of infinite-graph truncations;
    // nullopt for graphs that are not truncations (exact as they stand).
    std::optional<long> truncation_radius() const;
};

// Throws Error(invalid_argument) if adjacency is asymmetric, a degree is
// zero, or the graph is disconnected.
void validate(const Graph& g);

bool is_connected(const Graph& g);

// Two-colorability ignoring loops; a loop makes the graph non-bipartite.
bool is_bipartite(const Graph& g);

// Number of parallel edges between u and w (count of w in u's list).
std::uint32_t edge_multiplicity(const Graph& g, Vertex u, Vertex w);

// Finite window of an infinite graph: walks of length <= horizon started at
// `center` cannot feel the boundary as long as radius >= horizon.
struct TruncationSpec {
    Vertex center = 0;
    long radius = 0;
    long horizon = 0;

    bool exact() const { return radius >= horizon; }
};

// Flat CSR view used by the simulators and operator iterations.
struct CsrGraph {
    std::vector<std::uint32_t> offsets; // size n+1
    std::vector<Vertex> neighbors;

    explicit CsrGraph(const Graph& g);

    std::uint32_t degree(Vertex v) const { return offsets[v + 1] - offsets[v]; }
    const Vertex* begin(Vertex v) const { return neighbors.data() + offsets[v]; }
    std::size_t vertex_count() const { return offsets.size() - 1; }
};

} // namespace rwlab
