#include "linsolve.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "rwlab/error.hpp"

namespace rwlab::detail {

namespace {

struct InteriorSystem {
    std::vector<long> index;           // vertex -> interior index, -1 on boundary
    std::vector<Vertex> vertices;      // interior index -> vertex
    std::vector<double> diag;          // Laplacian diagonal (loops excluded)
    std::vector<double> rhs;           // rhs + boundary coupling
    // interior-interior couplings in CSR form
    std::vector<std::size_t> row_off;
    std::vector<long> col;
    std::vector<double> wgt;
};

InteriorSystem assemble(const Graph& g, const std::vector<char>& is_boundary,
                        const std::vector<double>& boundary_value, const std::vector<double>& rhs,
                        const std::vector<double>& slot_weight) {
    const std::size_t n = g.vertex_count();
    InteriorSystem sys;
    sys.index.assign(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (!is_boundary[v]) {
            sys.index[v] = static_cast<long>(sys.vertices.size());
            sys.vertices.push_back(v);
        }
    const std::size_t k = sys.vertices.size();
    sys.diag.assign(k, 0.0);
    sys.rhs.assign(k, 0.0);
    sys.row_off.assign(k + 1, 0);

    std::size_t slot_base = 0;
    std::vector<std::size_t> first_slot(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        first_slot[v] = slot_base;
        slot_base += g.adj[v].size();
    }
    auto weight_of = [&](Vertex v, std::size_t j) {
        return slot_weight.empty() ? 1.0 : slot_weight[first_slot[v] + j];
    };

    for (std::size_t i = 0; i < k; ++i) {
        Vertex u = sys.vertices[i];
        std::size_t nnz = 0;
        for (std::size_t j = 0; j < g.adj[u].size(); ++j)
            if (g.adj[u][j] != u && sys.index[g.adj[u][j]] >= 0) ++nnz;
        sys.row_off[i + 1] = sys.row_off[i] + nnz;
    }
    sys.col.resize(sys.row_off[k]);
    sys.wgt.resize(sys.row_off[k]);

    for (std::size_t i = 0; i < k; ++i) {
        Vertex u = sys.vertices[i];
        sys.rhs[i] = rhs[u];
        std::size_t pos = sys.row_off[i];
        for (std::size_t j = 0; j < g.adj[u].size(); ++j) {
            Vertex w = g.adj[u][j];
            if (w == u) continue; // loop: no current
            const double c = weight_of(u, j);
            sys.diag[i] += c;
            if (sys.index[w] >= 0) {
                sys.col[pos] = sys.index[w];
                sys.wgt[pos] = c;
                ++pos;
            } else {
                sys.rhs[i] += c * boundary_value[w];
            }
        }
    }
    return sys;
}

std::vector<double> solve_dense(const InteriorSystem& sys) {
    const long k = static_cast<long>(sys.vertices.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
    Eigen::VectorXd b(k);
    for (long i = 0; i < k; ++i) {
        a(i, i) = sys.diag[i];
        b(i) = sys.rhs[i];
        for (std::size_t p = sys.row_off[i]; p < sys.row_off[i + 1]; ++p) a(i, sys.col[p]) -= sys.wgt[p];
    }
    Eigen::VectorXd x = a.ldlt().solve(b);
    return std::vector<double>(x.data(), x.data() + k);
}

std::vector<double> solve_cg(const InteriorSystem& sys) {
    const std::size_t k = sys.vertices.size();
    std::vector<double> x(k, 0.0), r(sys.rhs), z(k), p(k), ap(k);

    double bnorm = 0.0;
    for (double v : r) bnorm += v * v;
    bnorm = std::sqrt(bnorm);
    if (bnorm == 0.0) return x;
    const double tol = 1e-12 * bnorm;

    auto matvec = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (std::size_t i = 0; i < k; ++i) {
            double acc = sys.diag[i] * v[i];
            for (std::size_t q = sys.row_off[i]; q < sys.row_off[i + 1]; ++q)
                acc -= sys.wgt[q] * v[sys.col[q]];
            out[i] = acc;
        }
    };

    double rz = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        z[i] = r[i] / sys.diag[i];
        p[i] = z[i];
        rz += r[i] * z[i];
    }
    const std::size_t max_iter = 40 * k + 1000;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        matvec(p, ap);
        double pap = 0.0;
        for (std::size_t i = 0; i < k; ++i) pap += p[i] * ap[i];
        if (pap <= 0.0) fail(errc::internal, "CG breakdown: matrix not positive definite");
        const double alpha = rz / pap;
        double rnorm = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
            rnorm += r[i] * r[i];
        }
        if (std::sqrt(rnorm) <= tol) return x;
        double rz_next = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            z[i] = r[i] / sys.diag[i];
            rz_next += r[i] * z[i];
        }
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < k; ++i) p[i] = z[i] + beta * p[i];
    }
    fail(errc::internal, "CG did not converge");
}

} // namespace

std::vector<double> solve_dirichlet(const Graph& g, const std::vector<char>& is_boundary,
                                    const std::vector<double>& boundary_value,
                                    const std::vector<double>& rhs,
                                    const std::vector<double>& slot_weight, long dense_cutoff) {
    const std::size_t n = g.vertex_count();
    InteriorSystem sys = assemble(g, is_boundary, boundary_value, rhs, slot_weight);
    std::vector<double> interior = sys.vertices.size() <= static_cast<std::size_t>(dense_cutoff)
                                       ? solve_dense(sys)
                                       : solve_cg(sys);
    std::vector<double> f(n, 0.0);
    for (Vertex v = 0; v < n; ++v)
        if (is_boundary[v]) f[v] = boundary_value[v];
    for (std::size_t i = 0; i < sys.vertices.size(); ++i) f[sys.vertices[i]] = interior[i];
    return f;
}

} // namespace rwlab::detail
