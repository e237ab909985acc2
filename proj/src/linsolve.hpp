#pragma once

#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab::detail {

// Solves the Dirichlet problem for the (weighted) graph Laplacian:
//   sum_{w ~ u} c(uw) * (f(u) - f(w)) = rhs(u)   for interior u,
//   f(u) = boundary_value(u)                      for boundary u.
// Loops carry no current and drop out of the Laplacian. Uses a dense
// LDLT factorization below `dense_cutoff` interior unknowns and
// Jacobi-preconditioned conjugate gradients (relative residual 1e-12)
// above it. `edge_weight` may be empty for unit conductances; otherwise
// it maps each adjacency slot of CsrGraph order to its conductance.
std::vector<double> solve_dirichlet(const Graph& g, const std::vector<char>& is_boundary,
                                    const std::vector<double>& boundary_value,
                                    const std::vector<double>& rhs,
                                    const std::vector<double>& slot_weight = {},
                                    long dense_cutoff = 500);

} // namespace rwlab::detail
