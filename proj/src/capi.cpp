#include "rwlab.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <json.hpp>
#include <sstream>
#include <string>

#include "rwlab/builders.hpp"
#include "rwlab/edgelist.hpp"
#include "rwlab/electrical.hpp"
#include "rwlab/error.hpp"
#include "rwlab/exact.hpp"
#include "rwlab/expander.hpp"
#include "rwlab/graphspec.hpp"
#include "rwlab/montecarlo.hpp"
#include "rwlab/rational.hpp"

struct rwl_graph {
    rwlab::Graph g;
};

struct rwl_table {
    rwlab::ReturnTimeTable t;
};

namespace {

thread_local std::string g_last_error;

rwl_status status_of(rwlab::errc code) {
    switch (code) {
        case rwlab::errc::invalid_argument: return RWL_ERR_INVALID_ARGUMENT;
        case rwlab::errc::generation_failed: return RWL_ERR_GENERATION_FAILED;
        case rwlab::errc::resource_limit: return RWL_ERR_RESOURCE_LIMIT;
        case rwlab::errc::io_failure: return RWL_ERR_IO;
        case rwlab::errc::internal: return RWL_ERR_INTERNAL;
    }
    return RWL_ERR_INTERNAL;
}

template <class Fn>
rwl_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return RWL_OK;
    } catch (const rwlab::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RWL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RWL_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rwl_status make_graph(rwl_graph** out, rwlab::Graph g) {
    *out = new rwl_graph{std::move(g)};
    return RWL_OK;
}

std::vector<rwlab::Vertex> vertex_set(const long* ids, long n) {
    std::vector<rwlab::Vertex> v;
    v.reserve(n > 0 ? static_cast<std::size_t>(n) : 0);
    for (long i = 0; i < n; ++i) {
        if (ids[i] < 0) rwlab::fail(rwlab::errc::invalid_argument, "negative vertex id");
        v.push_back(static_cast<rwlab::Vertex>(ids[i]));
    }
    return v;
}

rwlab::TrialPlan plan_of(uint64_t seed, long trials, int workers) {
    rwlab::TrialPlan plan;
    plan.master_seed = seed;
    plan.trials = trials;
    plan.workers = workers;
    return plan;
}

} // namespace

extern "C" {

const char* rwl_version(void) { return "0.1.0"; }

const char* rwl_last_error(void) { return g_last_error.c_str(); }

void rwl_string_free(char* s) { delete[] s; }

rwl_status rwl_graph_halfline(long length, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_halfline(length)); });
}

rwl_status rwl_graph_segment(long radius, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_segment(radius)); });
}

rwl_status rwl_graph_star_halfline(long length, long pendants, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_star_halfline(length, pendants)); });
}

rwl_status rwl_graph_cycle(long n, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_cycle(n)); });
}

rwl_status rwl_graph_complete(long n, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_complete(n)); });
}

rwl_status rwl_graph_torus(long rows, long cols, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_torus(rows, cols)); });
}

rwl_status rwl_graph_random_regular(long n, long d, uint64_t seed, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::random_regular(n, d, seed)); });
}

rwl_status rwl_graph_gt(long t, double delta, long d, uint64_t seed, long min_halfline,
                        rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::build_gt(t, delta, d, seed, min_halfline)); });
}

rwl_status rwl_graph_construction(const long* heights, const long* sizes, long scales, long d,
                                  uint64_t seed, long min_halfline, rwl_graph** out) {
    return wrap([&] {
        rwlab::ConstructionParams params;
        params.heights.assign(heights, heights + scales);
        params.expander_sizes.assign(sizes, sizes + scales);
        params.expander_degree = d;
        params.seed = seed;
        make_graph(out, rwlab::build_construction(params, min_halfline));
    });
}

rwl_status rwl_graph_comb(const rwl_graph* g, const rwl_graph* h, long root, rwl_graph** out) {
    return wrap([&] {
        make_graph(out, rwlab::comb_product(g->g, h->g, static_cast<rwlab::Vertex>(root)));
    });
}

rwl_status rwl_graph_attach_expander(const rwl_graph* base, long anchor, const rwl_graph* expander,
                                     long port, rwl_graph** out) {
    return wrap([&] {
        make_graph(out, rwlab::attach_expander(base->g, static_cast<rwlab::Vertex>(anchor),
                                               expander->g, static_cast<rwlab::Vertex>(port)));
    });
}

rwl_status rwl_graph_attach_pendant(const rwl_graph* g, long anchor, rwl_graph** out) {
    return wrap([&] {
        make_graph(out, rwlab::attach_pendant(g->g, static_cast<rwlab::Vertex>(anchor)));
    });
}

rwl_status rwl_graph_add_loops(const rwl_graph* g, long v, long count, rwl_graph** out) {
    return wrap([&] {
        make_graph(out, rwlab::add_loops(g->g, static_cast<rwlab::Vertex>(v), count));
    });
}

rwl_status rwl_graph_from_spec(const char* spec, uint64_t seed, long min_halfline, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::graph_from_spec(spec, seed, min_halfline)); });
}

rwl_status rwl_graph_read(const char* path, rwl_graph** out) {
    return wrap([&] { make_graph(out, rwlab::read_edgelist_file(path)); });
}

rwl_status rwl_graph_write(const rwl_graph* g, const char* path) {
    return wrap([&] { rwlab::write_edgelist_file(g->g, path); });
}

rwl_status rwl_graph_to_edgelist(const rwl_graph* g, char** out) {
    return wrap([&] {
        std::ostringstream os;
        rwlab::write_edgelist(g->g, os);
        *out = dup_string(os.str());
    });
}

void rwl_graph_free(rwl_graph* g) { delete g; }

long rwl_graph_n(const rwl_graph* g) { return static_cast<long>(g->g.vertex_count()); }

long rwl_graph_m(const rwl_graph* g) { return static_cast<long>(g->g.edge_count()); }

long rwl_graph_degree(const rwl_graph* g, long v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g->g.vertex_count()) return -1;
    return g->g.degree(static_cast<rwlab::Vertex>(v));
}

long rwl_graph_neighbors(const rwl_graph* g, long v, long* buf, long cap) {
    if (v < 0 || static_cast<std::size_t>(v) >= g->g.vertex_count()) return -1;
    const auto& list = g->g.adj[static_cast<rwlab::Vertex>(v)];
    for (long i = 0; i < cap && static_cast<std::size_t>(i) < list.size(); ++i) buf[i] = list[i];
    return static_cast<long>(list.size());
}

long rwl_graph_height(const rwl_graph* g, long v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g->g.vertex_count()) return -1;
    return g->g.height(static_cast<rwlab::Vertex>(v));
}

const char* rwl_graph_meta(const rwl_graph* g, const char* key) {
    const std::string* s = g->g.meta_value(key);
    return s ? s->c_str() : nullptr;
}

const char* rwl_graph_name(const rwl_graph* g) { return g->g.name.c_str(); }

rwl_status rwl_graph_validate(const rwl_graph* g) {
    return wrap([&] { rwlab::validate(g->g); });
}

int rwl_graph_is_bipartite(const rwl_graph* g) { return rwlab::is_bipartite(g->g) ? 1 : 0; }

long rwl_corpus_count(void) { return static_cast<long>(rwlab::verification_corpus().size()); }

const char* rwl_corpus_spec(long i) {
    static thread_local std::string holder;
    const auto corpus = rwlab::verification_corpus();
    if (i < 0 || static_cast<std::size_t>(i) >= corpus.size()) return nullptr;
    holder = corpus[static_cast<std::size_t>(i)];
    return holder.c_str();
}

rwl_status rwl_return_table(const rwl_graph* g, long v, long horizon, int waive, rwl_table** out) {
    return wrap([&] {
        *out = new rwl_table{rwlab::return_time_distribution(
            g->g, static_cast<rwlab::Vertex>(v), horizon, waive != 0)};
    });
}

rwl_status rwl_hitting_table(const rwl_graph* g, long start, long target, long horizon, int waive,
                             rwl_table** out) {
    return wrap([&] {
        *out = new rwl_table{rwlab::hitting_time_distribution(
            g->g, static_cast<rwlab::Vertex>(start), static_cast<rwlab::Vertex>(target), horizon,
            waive != 0)};
    });
}

void rwl_table_free(rwl_table* t) { delete t; }

long rwl_table_horizon(const rwl_table* t) { return t->t.horizon; }

int rwl_table_exact(const rwl_table* t) { return t->t.exact ? 1 : 0; }

double rwl_table_p(const rwl_table* t, long time) {
    if (time < 1 || time > t->t.horizon) return -1.0;
    return t->t.p[time];
}

double rwl_table_s(const rwl_table* t, long time) {
    if (time < 1 || time > t->t.horizon + 1) return -1.0;
    return t->t.s[time];
}

double rwl_table_hazard(const rwl_table* t, long time) {
    if (time < 1 || time > t->t.horizon) return -1.0;
    return t->t.hazard(time);
}

rwl_status rwl_table_to_csv(const rwl_table* t, char** out) {
    return wrap([&] {
        std::ostringstream os;
        rwlab::write_table_csv(t->t, os);
        *out = dup_string(os.str());
    });
}

double rwl_theorem1_margin(const rwl_table* t, long d_v) {
    return rwlab::theorem1_margin(t->t, d_v);
}

rwl_status rwl_theorem2_profile(const rwl_table* t, long d_v, double* buf, long cap,
                                double* max_out) {
    return wrap([&] {
        rwlab::HazardProfile prof = rwlab::theorem2_hazard_profile(t->t, d_v);
        for (long i = 0; i < cap && static_cast<std::size_t>(i) < prof.values.size(); ++i)
            buf[i] = prof.values[i];
        if (max_out) *max_out = prof.max_value;
    });
}

long rwl_even_monotonicity_violation(const rwl_table* t) {
    return rwlab::even_monotonicity_check(t->t).first_violation;
}

rwl_status rwl_hankel_min_eig(const rwl_table* t, long order, int shifted, double* out) {
    return wrap([&] {
        *out = rwlab::hankel_min_eigenvalue(rwlab::moment_sequence(t->t), order, shifted != 0);
    });
}

rwl_status rwl_reversibility_residual(const rwl_graph* g, long v, long time, double* out) {
    return wrap([&] {
        *out = rwlab::reversibility_residual(g->g, static_cast<rwlab::Vertex>(v), time);
    });
}

rwl_status rwl_reversibility_exact(const rwl_graph* g, long v, long time, int* equal) {
    return wrap([&] {
        *equal = rwlab::reversibility_identity_exact(g->g, static_cast<rwlab::Vertex>(v), time)
                     ? 1
                     : 0;
    });
}

rwl_status rwl_green_function(const rwl_graph* g, long v, double* buf, long cap) {
    return wrap([&] {
        std::vector<double> green = rwlab::green_function(g->g, static_cast<rwlab::Vertex>(v));
        if (cap < static_cast<long>(green.size()))
            rwlab::fail(rwlab::errc::invalid_argument, "green buffer too small");
        for (std::size_t i = 0; i < green.size(); ++i) buf[i] = green[i];
    });
}

rwl_status rwl_effective_resistance(const rwl_graph* g, const long* sources, long n_sources,
                                    const long* sinks, long n_sinks, double* out) {
    return wrap([&] {
        rwlab::Network net = rwlab::Network::unit(g->g);
        *out = rwlab::effective_resistance(net, vertex_set(sources, n_sources),
                                           vertex_set(sinks, n_sinks));
    });
}

rwl_status rwl_solve_potential(const rwl_graph* g, const long* sources, long n_sources,
                               const long* sinks, long n_sinks, double* f_buf, long cap,
                               double* reff) {
    return wrap([&] {
        if (cap < static_cast<long>(g->g.vertex_count()))
            rwlab::fail(rwlab::errc::invalid_argument, "potential buffer too small");
        rwlab::Network net = rwlab::Network::unit(g->g);
        rwlab::Potential p = rwlab::solve_potential(net, vertex_set(sources, n_sources),
                                                    vertex_set(sinks, n_sinks));
        for (std::size_t i = 0; i < p.f.size(); ++i) f_buf[i] = p.f[i];
        if (reff) *reff = p.effective_resistance;
    });
}

rwl_status rwl_escape_probability(const rwl_graph* g, long v, const long* targets, long n_targets,
                                  double* out) {
    return wrap([&] {
        rwlab::Network net = rwlab::Network::unit(g->g);
        *out = rwlab::escape_probability(net, static_cast<rwlab::Vertex>(v),
                                         vertex_set(targets, n_targets));
    });
}

rwl_status rwl_expected_hitting_time(const rwl_graph* g, long start, const long* targets,
                                     long n_targets, double* out) {
    return wrap([&] {
        *out = rwlab::expected_hitting_time(g->g, static_cast<rwlab::Vertex>(start),
                                            vertex_set(targets, n_targets));
    });
}

rwl_status rwl_lipschitz_margin(const rwl_graph* g, const double* f, double* out) {
    return wrap([&] {
        double worst = 0.0;
        for (rwlab::Vertex v = 0; v < g->g.vertex_count(); ++v)
            for (rwlab::Vertex w : g->g.adj[v])
                if (w != v) worst = std::max(worst, std::abs(f[v] - f[w]));
        *out = worst;
    });
}

rwl_status rwl_sublevel_cut(const rwl_graph* g, const double* f, double threshold, long* inside,
                            long inside_cap, long* n_inside, long* boundary, long boundary_cap,
                            long* n_boundary) {
    return wrap([&] {
        const std::size_t n = g->g.vertex_count();
        std::vector<char> in_s(n, 0);
        long ni = 0;
        for (rwlab::Vertex v = 0; v < n; ++v)
            if (f[v] < threshold) {
                in_s[v] = 1;
                if (ni < inside_cap) inside[ni] = v;
                ++ni;
            }
        long nb = 0;
        std::vector<char> seen(n, 0);
        for (rwlab::Vertex v = 0; v < n; ++v) {
            if (!in_s[v]) continue;
            for (rwlab::Vertex w : g->g.adj[v])
                if (!in_s[w] && !seen[w]) {
                    seen[w] = 1;
                    if (nb < boundary_cap) boundary[nb] = w;
                    ++nb;
                }
        }
        if (nb == 0) rwlab::fail(rwlab::errc::invalid_argument, "degenerate cut: empty boundary");
        *n_inside = ni;
        *n_boundary = nb;
    });
}

rwl_status rwl_estimate_lambda2(const rwl_graph* g, long max_iterations, uint64_t seed,
                                double* out) {
    return wrap([&] { *out = rwlab::estimate_lambda2(g->g, max_iterations, seed); });
}

rwl_status rwl_mixing_check(const rwl_graph* g, double rho, long t_max, long sample_starts,
                            uint64_t seed, char** json_out) {
    return wrap([&] {
        rwlab::MixingCheck check = rwlab::check_mixing_bound(g->g, rho, t_max, sample_starts, seed);
        nlohmann::ordered_json j;
        j["pass"] = check.pass;
        j["bipartite"] = check.bipartite;
        j["worst_margin"] = check.worst_margin;
        j["worst_t"] = check.worst_t;
        j["worst_deviation"] = check.worst_deviation;
        *json_out = dup_string(j.dump(2));
    });
}

rwl_status rwl_expander_report(const rwl_graph* g, uint64_t seed, long pairs, char** json_out) {
    return wrap([&] { *json_out = dup_string(rwlab::to_json(rwlab::expander_report(g->g, seed, pairs))); });
}

rwl_status rwl_mc_sample_return(const rwl_graph* g, long v, uint64_t seed, long trial,
                                long step_cap, long* time, int* censored) {
    return wrap([&] {
        rwlab::CsrGraph csr(g->g);
        rwlab::SplitMix64 rng = rwlab::substream(seed, static_cast<std::uint64_t>(trial), 1);
        rwlab::ReturnSample sample =
            rwlab::sample_return_time(csr, static_cast<rwlab::Vertex>(v), step_cap, rng);
        *time = sample.time;
        *censored = sample.censored ? 1 : 0;
    });
}

rwl_status rwl_mc_escape(const rwl_graph* g, long x, long y, double eps, uint64_t seed, long trials,
                         int workers, char** json_out) {
    return wrap([&] {
        rwlab::EscapeReport rep = rwlab::escape_experiment(
            g->g, static_cast<rwlab::Vertex>(x), static_cast<rwlab::Vertex>(y), eps,
            plan_of(seed, trials, workers));
        *json_out = dup_string(rwlab::to_json(rep));
    });
}

rwl_status rwl_mc_expander_window(const rwl_graph* decorated, long v_prime, uint64_t seed,
                                  long trials, int workers, char** json_out) {
    return wrap([&] {
        rwlab::WindowExperimentReport rep = rwlab::expander_window_experiment(
            decorated->g, static_cast<rwlab::Vertex>(v_prime), plan_of(seed, trials, workers));
        *json_out = dup_string(rwlab::to_json(rep));
    });
}

rwl_status rwl_mc_collision_inside(const rwl_graph* decorated, long v_prime, long u1, long u2,
                                   long n_window, uint64_t seed, long trials, int workers,
                                   char** json_out) {
    return wrap([&] {
        rwlab::CollisionInsideReport rep = rwlab::collision_inside_expander(
            decorated->g, static_cast<rwlab::Vertex>(v_prime), static_cast<rwlab::Vertex>(u1),
            static_cast<rwlab::Vertex>(u2), n_window, plan_of(seed, trials, workers));
        *json_out = dup_string(rwlab::to_json(rep));
    });
}

rwl_status rwl_mc_comb_collision(const long* heights, const long* sizes, long scales, long d,
                                 uint64_t seed, long trials, int workers, int control,
                                 uint64_t step_budget, char** json_out, char** csv_out) {
    return wrap([&] {
        rwlab::ConstructionParams params;
        params.heights.assign(heights, heights + scales);
        params.expander_sizes.assign(sizes, sizes + scales);
        params.expander_degree = d;
        params.seed = seed;
        rwlab::CollisionReport rep = rwlab::comb_collision_experiment(
            params, plan_of(seed, trials, workers), control != 0, step_budget);
        *json_out = dup_string(rwlab::to_json(rep));
        if (csv_out) {
            std::ostringstream os;
            rwlab::write_windows_csv(rep, os);
            *csv_out = dup_string(os.str());
        }
    });
}

rwl_status rwl_proportion_contrast(long succ1, long n1, long succ2, long n2, double* z,
                                   double* p_value) {
    return wrap([&] {
        rwlab::ContrastTest t = rwlab::proportion_contrast(succ1, n1, succ2, n2);
        if (z) *z = t.z;
        if (p_value) *p_value = t.p_value;
    });
}

} // extern "C"
