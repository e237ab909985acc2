#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

// Builder mini-language used by the CLI and the verification corpus:
//   halfline:L            segment:R            star_halfline:L,P
//   cycle:N               complete:N           torus:R,C
//   regular:N,D           gt:T,DELTA,D         construction:h1:n1[,h2:n2...]
//   pendant:<spec>        comb:<specG>|<specH>|ROOT
//   file:PATH
// A trailing "+loops=V,C" adds C loops at vertex V. Seeded builders use
// `seed`; `min_halfline` stretches halfline-backed families so deeper
// horizons stay exact.
Graph graph_from_spec(const std::string& spec, std::uint64_t seed, long min_halfline = 0);

// Specs of the built-in verification corpus (identity suite + cmd_verify).
std::vector<std::string> verification_corpus();

} // namespace rwlab
