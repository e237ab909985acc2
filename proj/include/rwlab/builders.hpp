#pragma once

#include <cstdint>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

// Half-line 0-1-...-length with heights h(v)=v. Truncation of the infinite
// half-line, exact for horizons <= length when walks start at 0.
Graph build_halfline(long length);

// Path on vertices -radius..+radius relabeled to 0..2*radius; the center is
// at index `radius` (also in meta["center"]). Exact truncation of the
// integers for horizons <= radius.
Graph build_segment(long radius);

// Half-line plus `pendants` degree-1 vertices attached to 0, so
// degree(0) = pendants + 1. Pendant ids follow the line vertices.
Graph build_star_halfline(long length, long pendants);

// Disjoint union of base and expander plus the single edge {anchor, port}.
// Expander vertex ids are shifted by base's vertex count. When the base has
// heights, every expander vertex inherits h(anchor).
Graph attach_expander(const Graph& base, Vertex anchor, const Graph& expander, Vertex port);

// Expander size used by build_gt: ceil(3*log(1/delta)*t / (delta*log t)),
// bumped by one when n*d is odd. Throws when the raw value is below d+1.
long gt_expander_size(long t, double delta, long expander_degree);

// Half-line of the given length with a d-regular expander of size
// gt_expander_size(t, delta, d) attached at 0 by one edge; degree(0)
// becomes 2. Meta: expander_n, expander_first (id of first expander
// vertex).
Graph build_gt(long t, double delta, long expander_degree, std::uint64_t seed, long min_halfline = 0);

struct ConstructionParams {
    std::vector<long> heights;        // strictly increasing h_1 < h_2 < ...
    std::vector<long> expander_sizes; // n_1, n_2, ...
    long expander_degree = 3;
    std::uint64_t seed = 1;
};

// Validates sizes/monotonicity (throws) and soft-checks the scaled growth
// condition h_i > n_{i-1}*h_{i-1}^2 and n_i >= h_i^3, returning one warning
// line per violation.
std::vector<std::string> check_construction_params(const ConstructionParams& params);

// Half-line with expander E_i of size n_i attached at vertex h_i via the
// edge {v_i, h_i}; heights are h(v)=v on the line and h_i on E_i. The line
// extends to at least max(heights) + buffer and min_halfline. Warnings from
// check_construction_params land in meta["warnings"]; expander vertex
// ranges in meta["expander_ranges"] as "first:last" pairs (inclusive).
Graph build_construction(const ConstructionParams& params, long min_halfline = 0);

// Comb product: vertex set V(g) x V(h); edges {(x,w),(x,z)} for {w,z} in
// E(h), plus {(x,root),(y,root)} for {x,y} in E(g). Vertex (x,w) gets id
// x*|V(h)| + w. Tooth heights are inherited when h has them.
Graph comb_product(const Graph& g, const Graph& h, Vertex root);

// Adds `count` loop edges at v; each loop contributes 1 to the degree and a
// loop step stays at v.
Graph add_loops(const Graph& g, Vertex v, long count);

// New degree-1 vertex attached to `anchor` by one edge; the pendant gets
// the last vertex id. Decorates an expander with the v' of the hitting
// window experiments.
Graph attach_pendant(const Graph& g, Vertex anchor);

// Plain families used by the verification corpus and tests.
Graph build_cycle(long n);
Graph build_complete(long n);
Graph build_torus(long rows, long cols);

} // namespace rwlab
