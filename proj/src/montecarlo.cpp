#include "rwlab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <queue>
#include <thread>

#include "rwlab/electrical.hpp"
#include "rwlab/error.hpp"
#include "rwlab/exact.hpp"

namespace rwlab {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Trials are independent work units; workers pull indices from a shared
// counter and write into disjoint slots, so the aggregate is identical for
// any worker count.
template <class R, class Fn>
std::vector<R> run_trials(long trials, int workers, Fn&& fn) {
    std::vector<R> results(static_cast<std::size_t>(std::max(0l, trials)));
    if (trials <= 0) return results;
    const int w = std::max(1, workers);
    if (w == 1) {
        for (long i = 0; i < trials; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<long> next{0};
    auto loop = [&]() {
        for (;;) {
            const long i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= trials) return;
            results[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int k = 0; k < w; ++k) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
    return results;
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

std::vector<long> bfs_distances(const Graph& g, Vertex s) {
    std::vector<long> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

Estimate wilson_interval(long successes, long trials) {
    Estimate e;
    e.n = trials;
    if (trials <= 0) {
        e.ci_high = 1.0;
        return e;
    }
    const double n = static_cast<double>(trials);
    const double ph = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (ph + z2 / (2.0 * n)) / denom;
    const double half = kZ95 * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
    e.value = ph;
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    return e;
}

Estimate mean_interval(double sum, double sum_sq, long n) {
    Estimate e;
    e.n = n;
    if (n <= 0) return e;
    const double mean = sum / static_cast<double>(n);
    e.value = mean;
    if (n == 1) {
        e.ci_low = e.ci_high = mean;
        return e;
    }
    const double var = std::max(0.0, (sum_sq - static_cast<double>(n) * mean * mean) /
                                         static_cast<double>(n - 1));
    const double half = kZ95 * std::sqrt(var / static_cast<double>(n));
    e.ci_low = mean - half;
    e.ci_high = mean + half;
    return e;
}

ContrastTest proportion_contrast(long succ1, long n1, long succ2, long n2) {
    ContrastTest t;
    if (n1 <= 0 || n2 <= 0) return t;
    t.freq1 = static_cast<double>(succ1) / static_cast<double>(n1);
    t.freq2 = static_cast<double>(succ2) / static_cast<double>(n2);
    const double pool =
        static_cast<double>(succ1 + succ2) / static_cast<double>(n1 + n2);
    const double se = std::sqrt(pool * (1.0 - pool) *
                                (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)));
    if (se == 0.0) {
        t.z = 0.0;
        t.p_value = 1.0;
        return t;
    }
    t.z = (t.freq1 - t.freq2) / se;
    t.p_value = normal_upper_tail(t.z);
    t.significant = t.p_value < 0.01;
    return t;
}

ReturnSample sample_return_time(const CsrGraph& g, Vertex v, long step_cap, SplitMix64& rng) {
    if (step_cap < 1) fail(errc::invalid_argument, "step cap must be >= 1");
    Vertex x = v;
    for (long t = 1; t <= step_cap; ++t) {
        x = walk_step(g, x, rng);
        if (x == v) return {t, false};
    }
    return {step_cap, true};
}

EscapeReport escape_experiment(const Graph& g, Vertex x, Vertex y, double eps,
                               const TrialPlan& plan) {
    if (x == y) fail(errc::invalid_argument, "escape experiment needs x != y");
    if (!(eps > 0.0)) fail(errc::invalid_argument, "eps must be positive");
    EscapeReport rep;
    rep.x = x;
    rep.y = y;
    rep.eps = eps;
    rep.master_seed = plan.master_seed;
    rep.trials = plan.trials;
    Network net = Network::unit(g);
    rep.reff = effective_resistance(net, {x}, {y});
    rep.threshold_steps = static_cast<long>(std::floor(eps * rep.reff * rep.reff));

    const CsrGraph csr(g);
    const long threshold = rep.threshold_steps;
    auto one = [&](long trial) -> char {
        if (threshold < 1) return 0;
        SplitMix64 rng = substream(plan.master_seed, static_cast<std::uint64_t>(trial), 1);
        Vertex pos = x;
        for (long t = 1; t <= threshold; ++t) {
            pos = walk_step(csr, pos, rng);
            if (pos == y) return 1;
        }
        return 0;
    };
    std::vector<char> hits = run_trials<char>(plan.trials, plan.workers, one);
    long successes = 0;
    for (char h : hits) successes += h;
    rep.probability = wilson_interval(successes, plan.trials);
    rep.pass = rep.probability.ci_low <= eps;
    return rep;
}

std::string to_json(const EscapeReport& r) {
    nlohmann::ordered_json j;
    j["experiment"] = "escape";
    j["plan"] = {{"master_seed", r.master_seed}, {"trials", r.trials}};
    j["x"] = r.x;
    j["y"] = r.y;
    j["eps"] = r.eps;
    j["reff"] = r.reff;
    j["threshold_steps"] = r.threshold_steps;
    j["estimate"] = r.probability.value;
    j["ci_low"] = r.probability.ci_low;
    j["ci_high"] = r.probability.ci_high;
    j["pass"] = r.pass;
    return j.dump(2);
}

WindowExperimentReport expander_window_experiment(const Graph& decorated, Vertex v_prime,
                                                  const TrialPlan& plan) {
    const std::size_t count = decorated.vertex_count();
    if (v_prime >= count) fail(errc::invalid_argument, "v' out of range");
    if (decorated.degree(v_prime) != 1)
        fail(errc::invalid_argument, "v' must be a pendant vertex");

    WindowExperimentReport rep;
    rep.n = static_cast<long>(count) - 1;
    rep.v_prime = v_prime;
    rep.master_seed = plan.master_seed;
    rep.trials = plan.trials;
    const long n = rep.n;
    rep.window_lo = std::max<long>(2, static_cast<long>(std::ceil(3.0 * std::log(static_cast<double>(n)))));
    rep.window_hi = n;

    const Vertex attach = decorated.adj[v_prime][0];
    std::vector<Vertex> starts{attach};
    {
        SplitMix64 rng = substream(plan.master_seed, 0, 0xA0);
        std::vector<char> used(count, 0);
        used[v_prime] = 1;
        used[attach] = 1;
        const long want = std::min<long>(n, 16);
        while (static_cast<long>(starts.size()) < want) {
            Vertex u = rng.below(static_cast<std::uint32_t>(count));
            if (used[u]) continue;
            used[u] = 1;
            starts.push_back(u);
        }
    }
    rep.starts = static_cast<long>(starts.size());

    // Exact hitting tables from every sampled start.
    std::vector<ReturnTimeTable> tables;
    tables.reserve(starts.size());
    for (Vertex u : starts)
        tables.push_back(hitting_time_distribution(decorated, u, v_prime, n, /*waive=*/true));

    double c_min = std::numeric_limits<double>::infinity();
    for (const auto& table : tables)
        for (long t = rep.window_lo; t <= rep.window_hi; ++t)
            c_min = std::min(c_min, static_cast<double>(n) * table.p[t]);
    rep.c_min = c_min;

    for (long grid = 99; grid >= 1; --grid) {
        const double delta = static_cast<double>(grid) / 100.0;
        const long dn = std::max<long>(1, static_cast<long>(std::ceil(delta * static_cast<double>(n))));
        bool ok = dn <= n + 1;
        for (const auto& table : tables) {
            if (!ok) break;
            const double survive = table.s[std::min<long>(dn, n + 1)];
            const double hit_by_n = 1.0 - table.s[n + 1];
            if (survive < delta || hit_by_n < delta) ok = false;
        }
        if (ok) {
            rep.delta_star = delta;
            break;
        }
    }

    // Simulation cross-check of P_u(tau_v' <= n) for the first starts.
    const CsrGraph csr(decorated);
    rep.mc_consistent = true;
    for (std::size_t si = 0; si < std::min<std::size_t>(3, starts.size()); ++si) {
        const Vertex u = starts[si];
        auto one = [&](long trial) -> char {
            SplitMix64 rng = substream(plan.master_seed, static_cast<std::uint64_t>(trial),
                                       0xB0 + static_cast<std::uint64_t>(si));
            Vertex pos = u;
            for (long t = 1; t <= n; ++t) {
                pos = walk_step(csr, pos, rng);
                if (pos == v_prime) return 1;
            }
            return 0;
        };
        std::vector<char> hits = run_trials<char>(plan.trials, plan.workers, one);
        long successes = 0;
        for (char h : hits) successes += h;
        const double exact = 1.0 - tables[si].s[n + 1];
        const double ph = plan.trials > 0 ? static_cast<double>(successes) / plan.trials : exact;
        const double sigma = std::sqrt(std::max(exact * (1.0 - exact), 1e-12) /
                                       std::max<long>(1, plan.trials));
        const double dev_sigmas = std::abs(ph - exact) / sigma;
        rep.mc_worst_sigma = std::max(rep.mc_worst_sigma, dev_sigmas);
        if (dev_sigmas > 4.0) rep.mc_consistent = false;
    }
    return rep;
}

std::string to_json(const WindowExperimentReport& r) {
    nlohmann::ordered_json j;
    j["experiment"] = "expander_window";
    j["plan"] = {{"master_seed", r.master_seed}, {"trials", r.trials}};
    j["n"] = r.n;
    j["v_prime"] = r.v_prime;
    j["delta_star"] = r.delta_star;
    j["window_lo"] = r.window_lo;
    j["window_hi"] = r.window_hi;
    j["c_min"] = r.c_min;
    j["starts"] = r.starts;
    j["mc_consistent"] = r.mc_consistent;
    j["mc_worst_sigma"] = r.mc_worst_sigma;
    return j.dump(2);
}

CollisionInsideReport collision_inside_expander(const Graph& decorated, Vertex v_prime, Vertex u1,
                                                Vertex u2, long n_window, const TrialPlan& plan) {
    if (u1 == v_prime || u2 == v_prime) fail(errc::invalid_argument, "start vertices must differ from v'");
    CollisionInsideReport rep;
    rep.u1 = u1;
    rep.u2 = u2;
    rep.n_window = n_window;
    rep.master_seed = plan.master_seed;
    rep.trials = plan.trials;

    if (is_bipartite(decorated)) {
        std::vector<long> dist = bfs_distances(decorated, u1);
        if (dist[u2] % 2 == 1) rep.parity_obstruction = true;
    }

    const CsrGraph csr(decorated);
    auto one = [&](long trial) -> char {
        SplitMix64 rx = substream(plan.master_seed, static_cast<std::uint64_t>(trial), 1);
        SplitMix64 ry = substream(plan.master_seed, static_cast<std::uint64_t>(trial), 2);
        Vertex x = u1, y = u2;
        for (long t = 1; t <= n_window; ++t) {
            x = walk_step(csr, x, rx);
            y = walk_step(csr, y, ry);
            if (x == y) return 1; // simultaneous arrival at v' still counts
            if (x == v_prime || y == v_prime) return 0;
        }
        return 0;
    };
    std::vector<char> hits = run_trials<char>(plan.trials, plan.workers, one);
    long successes = 0;
    for (char h : hits) successes += h;
    rep.probability = wilson_interval(successes, plan.trials);
    return rep;
}

std::string to_json(const CollisionInsideReport& r) {
    nlohmann::ordered_json j;
    j["experiment"] = "collision_inside_expander";
    j["plan"] = {{"master_seed", r.master_seed}, {"trials", r.trials}};
    j["u1"] = r.u1;
    j["u2"] = r.u2;
    j["n_window"] = r.n_window;
    j["estimate"] = r.probability.value;
    j["ci_low"] = r.probability.ci_low;
    j["ci_high"] = r.probability.ci_high;
    j["parity_obstruction"] = r.parity_obstruction;
    return j.dump(2);
}

namespace {

struct ExpanderRanges {
    std::vector<std::pair<Vertex, Vertex>> ranges; // inclusive

    bool contains(int scale, Vertex v) const {
        const auto& r = ranges[scale];
        return v >= r.first && v <= r.second;
    }
};

ExpanderRanges parse_ranges(const Graph& g) {
    ExpanderRanges out;
    const std::string* s = g.meta_value("expander_ranges");
    if (!s) return out;
    std::size_t pos = 0;
    while (pos < s->size()) {
        std::size_t colon = s->find(':', pos);
        std::size_t comma = s->find(',', pos);
        if (comma == std::string::npos) comma = s->size();
        const Vertex lo = static_cast<Vertex>(std::stoul(s->substr(pos, colon - pos)));
        const Vertex hi = static_cast<Vertex>(std::stoul(s->substr(colon + 1, comma - colon - 1)));
        out.ranges.emplace_back(lo, hi);
        pos = comma + 1;
    }
    return out;
}

struct CombTrial {
    std::vector<long> collisions;
    std::vector<char> window_hit;
    std::vector<char> checkpoint_hit;
    std::vector<long> inband;
    long long max_base = 0;
    long max_height = 0;
    long total_collisions = 0;
};

struct WindowShape {
    long h = 0;
    long n = 0;
    long long t_begin = 0;
    long long t_end = 0;
};

// Walker on Comb_0(Z, H): teeth are copies of H planted at every integer,
// glued along the tooth root. Kept implicit in the Z coordinate.
struct MainCombWalker {
    const CsrGraph* tooth;
    Vertex root;
    long long base = 0;
    Vertex pos; // tooth coordinate

    void step(SplitMix64& rng) {
        const std::uint32_t deg = tooth->degree(pos);
        if (pos == root) {
            const std::uint32_t r = rng.below(deg + 2);
            if (r < deg)
                pos = tooth->begin(pos)[r];
            else
                base += (r == deg) ? -1 : 1;
        } else {
            pos = tooth->begin(pos)[rng.below(deg)];
        }
    }

    bool base_move_possible() const { return pos == root; }
};

// Walker on Comb_0(G, Z): teeth are copies of Z planted at every vertex of
// the base graph G.
struct ControlCombWalker {
    const CsrGraph* base_graph;
    Vertex base = 0;
    long long pos = 0; // Z tooth coordinate

    void step(SplitMix64& rng) {
        if (pos == 0) {
            const std::uint32_t deg = base_graph->degree(base);
            const std::uint32_t r = rng.below(deg + 2);
            if (r < 2)
                pos += (r == 0) ? -1 : 1;
            else
                base = base_graph->begin(base)[r - 2];
        } else {
            pos += rng.coin() ? 1 : -1;
        }
    }
};

} // namespace

CollisionReport comb_collision_experiment(const ConstructionParams& params, const TrialPlan& plan,
                                          bool control, unsigned long long step_budget) {
    CollisionReport rep;
    rep.control = control;
    rep.trials = plan.trials;
    rep.master_seed = plan.master_seed;

    std::vector<WindowShape> shapes;
    unsigned long long total = 0;
    for (std::size_t i = 0; i < params.heights.size(); ++i) {
        WindowShape w;
        w.h = params.heights[i];
        w.n = params.expander_sizes[i];
        w.t_begin = static_cast<long long>(total);
        total += static_cast<unsigned long long>(w.n) * static_cast<unsigned long long>(w.h) *
                 static_cast<unsigned long long>(w.h);
        w.t_end = static_cast<long long>(total);
        shapes.push_back(w);
    }
    rep.steps_per_walker = total;

    const unsigned long long demanded =
        2ull * total * static_cast<unsigned long long>(std::max(0l, plan.trials));
    if (demanded > step_budget)
        fail(errc::resource_limit, "comb experiment needs " + std::to_string(demanded) +
                                       " walker steps, budget is " + std::to_string(step_budget));

    const std::size_t n_windows = shapes.size();
    if (plan.trials <= 0) {
        for (std::size_t i = 0; i < n_windows; ++i) {
            CollisionReport::Window w;
            w.index = static_cast<int>(i + 1);
            w.h = shapes[i].h;
            w.n = shapes[i].n;
            w.t_begin = shapes[i].t_begin;
            w.t_end = shapes[i].t_end;
            w.collision_freq = wilson_interval(0, 0);
            w.checkpoint_freq = wilson_interval(0, 0);
            rep.windows.push_back(w);
        }
        return rep;
    }

    // The tooth (or base, for the control run) must be long enough that a
    // walker cannot feel the truncation within the step budget.
    Graph h_graph = build_construction(params, static_cast<long>(total) + 1);
    const ExpanderRanges ranges = parse_ranges(h_graph);
    const std::vector<long> heights = h_graph.heights;
    const CsrGraph csr(h_graph);
    h_graph.adj.clear();
    h_graph.adj.shrink_to_fit();

    auto one = [&](long trial) -> CombTrial {
        CombTrial res;
        res.collisions.assign(n_windows, 0);
        res.window_hit.assign(n_windows, 0);
        res.checkpoint_hit.assign(n_windows, 0);
        res.inband.assign(n_windows, 0);
        SplitMix64 rx = substream(plan.master_seed, static_cast<std::uint64_t>(trial), 1);
        SplitMix64 ry = substream(plan.master_seed, static_cast<std::uint64_t>(trial), 2);

        MainCombWalker mx{&csr, 0}, my{&csr, 0};
        mx.pos = my.pos = 0;
        ControlCombWalker cx{&csr}, cy{&csr};

        std::size_t win = 0;
        long cp_k = 1;
        long long next_cp = shapes.empty() ? -1 : shapes[0].t_begin + shapes[0].h * shapes[0].n;
        long base_steps_x = 0; // l(t) within the current scale window

        for (long long t = 1; t <= static_cast<long long>(total); ++t) {
            while (t > shapes[win].t_end) {
                ++win;
                cp_k = 1;
                next_cp = shapes[win].t_begin +
                          static_cast<long long>(shapes[win].h) * shapes[win].n;
                base_steps_x = 0;
            }
            bool collided, base_equal;
            if (!control) {
                const long long base_before = mx.base;
                mx.step(rx);
                my.step(ry);
                if (mx.base != base_before) ++base_steps_x;
                collided = (mx.base == my.base) && (mx.pos == my.pos);
                base_equal = (mx.base == my.base);
                res.max_base = std::max(res.max_base, std::abs(mx.base));
                res.max_height = std::max(res.max_height, heights[mx.pos]);
            } else {
                const Vertex base_before = cx.base;
                cx.step(rx);
                cy.step(ry);
                if (cx.base != base_before) ++base_steps_x;
                collided = (cx.base == cy.base) && (cx.pos == cy.pos);
                base_equal = (cx.base == cy.base);
                res.max_base = std::max(res.max_base, std::abs(cx.pos));
                res.max_height = std::max(res.max_height, heights[cx.base]);
            }
            if (collided) {
                ++res.collisions[win];
                res.window_hit[win] = 1;
                ++res.total_collisions;
            }
            if (t == next_cp) {
                bool coincide = base_equal;
                if (!control && coincide && win < ranges.ranges.size())
                    coincide = ranges.contains(static_cast<int>(win), mx.pos) &&
                               ranges.contains(static_cast<int>(win), my.pos);
                if (coincide) res.checkpoint_hit[win] = 1;
                const double expected = static_cast<double>(cp_k) * shapes[win].h;
                if (base_steps_x >= expected / 4.0 && base_steps_x <= 4.0 * expected)
                    ++res.inband[win];
                ++cp_k;
                next_cp = (cp_k <= shapes[win].h)
                              ? shapes[win].t_begin +
                                    static_cast<long long>(cp_k) * shapes[win].h * shapes[win].n
                              : -1;
            }
        }
        return res;
    };

    std::vector<CombTrial> trials = run_trials<CombTrial>(plan.trials, plan.workers, one);

    double total_collisions_sum = 0.0;
    for (std::size_t i = 0; i < n_windows; ++i) {
        CollisionReport::Window w;
        w.index = static_cast<int>(i + 1);
        w.h = shapes[i].h;
        w.n = shapes[i].n;
        w.t_begin = shapes[i].t_begin;
        w.t_end = shapes[i].t_end;
        long coll_sum = 0, inband_sum = 0;
        for (const auto& tr : trials) {
            w.trials_with_collision += tr.window_hit[i];
            w.trials_with_checkpoint_coincidence += tr.checkpoint_hit[i];
            coll_sum += tr.collisions[i];
            inband_sum += tr.inband[i];
        }
        w.collision_freq = wilson_interval(w.trials_with_collision, plan.trials);
        w.checkpoint_freq = wilson_interval(w.trials_with_checkpoint_coincidence, plan.trials);
        w.mean_collisions = static_cast<double>(coll_sum) / static_cast<double>(plan.trials);
        w.base_steps_in_band = static_cast<double>(inband_sum) /
                               (static_cast<double>(plan.trials) * static_cast<double>(shapes[i].h));
        rep.windows.push_back(w);
    }
    for (const auto& tr : trials) {
        total_collisions_sum += static_cast<double>(tr.total_collisions);
        rep.max_base_coordinate = std::max(rep.max_base_coordinate, tr.max_base);
        rep.max_tooth_height = std::max(rep.max_tooth_height, tr.max_height);
    }
    rep.mean_total_collisions = total_collisions_sum / static_cast<double>(plan.trials);
    return rep;
}

std::string to_json(const CollisionReport& r) {
    nlohmann::ordered_json j;
    j["experiment"] = r.control ? "comb_collision_control" : "comb_collision";
    j["plan"] = {{"master_seed", r.master_seed}, {"trials", r.trials}};
    j["control"] = r.control;
    j["steps_per_walker"] = r.steps_per_walker;
    j["windows"] = nlohmann::ordered_json::array();
    for (const auto& w : r.windows) {
        nlohmann::ordered_json jw;
        jw["index"] = w.index;
        jw["h"] = w.h;
        jw["n"] = w.n;
        jw["t_begin"] = w.t_begin;
        jw["t_end"] = w.t_end;
        jw["trials_with_collision"] = w.trials_with_collision;
        jw["collision_freq"] = w.collision_freq.value;
        jw["collision_ci_low"] = w.collision_freq.ci_low;
        jw["collision_ci_high"] = w.collision_freq.ci_high;
        jw["trials_with_checkpoint_coincidence"] = w.trials_with_checkpoint_coincidence;
        jw["checkpoint_freq"] = w.checkpoint_freq.value;
        jw["mean_collisions"] = w.mean_collisions;
        jw["base_steps_in_band"] = w.base_steps_in_band;
        j["windows"].push_back(jw);
    }
    j["mean_total_collisions"] = r.mean_total_collisions;
    j["max_base_coordinate"] = r.max_base_coordinate;
    j["max_tooth_height"] = r.max_tooth_height;
    return j.dump(2);
}

void write_windows_csv(const CollisionReport& r, std::ostream& out) {
    out << "window,h,n,t_begin,t_end,collision_freq,ci_low,ci_high,checkpoint_freq,mean_collisions,"
           "base_steps_in_band\n";
    char buf[256];
    for (const auto& w : r.windows) {
        std::snprintf(buf, sizeof buf, "%d,%ld,%ld,%lld,%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      w.index, w.h, w.n, w.t_begin, w.t_end, w.collision_freq.value,
                      w.collision_freq.ci_low, w.collision_freq.ci_high, w.checkpoint_freq.value,
                      w.mean_collisions, w.base_steps_in_band);
        out << buf;
    }
}

ContrastTest final_window_contrast(const CollisionReport& main, const CollisionReport& control) {
    if (main.windows.empty() || control.windows.empty())
        fail(errc::invalid_argument, "contrast needs nonempty window reports");
    const auto& a = main.windows.back();
    const auto& b = control.windows.back();
    return proportion_contrast(a.trials_with_collision, main.trials, b.trials_with_collision,
                               control.trials);
}

} // namespace rwlab
