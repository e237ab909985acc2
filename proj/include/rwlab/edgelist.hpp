#pragma once

#include <iosfwd>
#include <string>

#include "rwlab/graph.hpp"

namespace rwlab {

// Text edge-list format: first line "n m", then m lines "u v" with 0-based
// ids (a loop as "u u", one line per loop), then one "H v h" line per
// vertex when heights are set. Writing then reading reproduces the graph
// bit-exactly.
void write_edgelist(const Graph& g, std::ostream& out);
void write_edgelist_file(const Graph& g, const std::string& path);

Graph read_edgelist(std::istream& in);
Graph read_edgelist_file(const std::string& path);

} // namespace rwlab
