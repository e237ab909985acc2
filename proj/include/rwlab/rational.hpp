#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

using Rational = boost::multiprecision::cpp_rational;

// Exact-arithmetic twin of ReturnTimeTable. Denominators grow with the
// horizon, so this is meant for small graphs and short horizons (the
// oracle suite and the --rational verification path).
struct RationalTable {
    Vertex v = 0;
    Vertex start = 0;
    long horizon = 0;
    std::vector<Rational> p; // index 0 unused
    std::vector<Rational> s;
};

RationalTable rational_return_table(const Graph& g, Vertex v, long horizon);

RationalTable rational_hitting_table(const Graph& g, Vertex start, Vertex target, long horizon);

// Both sides of the half-time reversibility identity, exactly; returns
// true when they agree as rationals.
bool reversibility_identity_exact(const Graph& g, Vertex v, long t);

} // namespace rwlab
