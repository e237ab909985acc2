#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "rwlab.h"

namespace rwlab_cli {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct GraphHandle {
    rwl_graph* g = nullptr;
    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { rwl_graph_free(g); }
};

struct TableHandle {
    rwl_table* t = nullptr;
    TableHandle() = default;
    TableHandle(const TableHandle&) = delete;
    TableHandle& operator=(const TableHandle&) = delete;
    ~TableHandle() { rwl_table_free(t); }
};

struct StringHandle {
    char* s = nullptr;
    StringHandle() = default;
    StringHandle(const StringHandle&) = delete;
    StringHandle& operator=(const StringHandle&) = delete;
    ~StringHandle() { rwl_string_free(s); }
};

int map_status(rwl_status st) {
    return st == RWL_ERR_RESOURCE_LIMIT ? kResourceGuard : kUsageError;
}

int report_error(const char* what, rwl_status st) {
    std::cerr << "error: " << what << ": " << rwl_last_error() << "\n";
    return map_status(st);
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

std::vector<long> parse_id_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

void emit_summary(const ordered_json& j, const CommonOpts& opts, std::ostream& os) {
    if (opts.format == "csv") {
        os << "key,value\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            os << it.key() << "," << (it.value().is_string() ? it.value().get<std::string>()
                                                             : it.value().dump())
               << "\n";
    } else {
        os << j.dump(2) << "\n";
    }
}

void print_graph_warnings(const rwl_graph* g) {
    if (const char* w = rwl_graph_meta(g, "warnings"))
        std::cerr << "warning: " << w << "\n";
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Exact return-time sequence of the half-line at 0 (equals the classical
// sequence on Z): p(2) = 1/2, p(2k+2) = p(2k) * (2k-1) / (2k+2).
struct HalflineTail {
    std::vector<double> p, s; // index by t, odd entries 0

    explicit HalflineTail(long horizon) {
        p.assign(horizon + 1, 0.0);
        s.assign(horizon + 2, 0.0);
        double pk = 0.5;
        long k = 1;
        s[1] = 1.0;
        for (long t = 1; t <= horizon; ++t) {
            if (t == 2 * k) {
                p[t] = pk;
                pk *= static_cast<double>(2 * k - 1) / static_cast<double>(2 * k + 2);
                ++k;
            }
            s[t + 1] = s[t] - p[t];
        }
    }

    double hazard(long t) const { return s[t] > 0 ? p[t] / s[t] : 0.0; }
};

} // namespace

int cmd_dist(const DistOpts& opts) {
    GraphHandle graph;
    if (rwl_status st = rwl_graph_from_spec(opts.graph.c_str(), opts.seed, 0, &graph.g))
        return report_error("building graph", st);
    print_graph_warnings(graph.g);

    TableHandle table;
    if (rwl_status st = rwl_return_table(graph.g, opts.v, opts.horizon, 1, &table.t))
        return report_error("computing return table", st);
    const bool exact = rwl_table_exact(table.t) != 0;
    if (!exact)
        std::cerr << "warning: horizon " << opts.horizon
                  << " exceeds the truncation radius; table is not exact for the infinite graph\n";

    const long d_v = rwl_graph_degree(graph.g, opts.v);
    const double margin = rwl_theorem1_margin(table.t, d_v);
    std::vector<double> profile(opts.horizon + 1, 0.0);
    double profile_max = 0.0;
    rwl_theorem2_profile(table.t, d_v, profile.data(), opts.horizon + 1, &profile_max);
    const long violation = rwl_even_monotonicity_violation(table.t);

    double hankel_min = 0.0;
    const long max_order = std::min<long>(5, (opts.horizon - 2) / 2);
    bool hankel_ok = true;
    double worst_eig = 1.0;
    for (long order = 1; order <= max_order; ++order) {
        if (rwl_hankel_min_eig(table.t, order, 0, &hankel_min) == RWL_OK) {
            worst_eig = std::min(worst_eig, hankel_min);
            if (hankel_min < -1e-10) hankel_ok = false;
        }
    }

    StringHandle csv;
    if (rwl_status st = rwl_table_to_csv(table.t, &csv.s)) return report_error("formatting CSV", st);

    ordered_json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["graph"] = opts.graph;
    summary["v"] = opts.v;
    summary["d_v"] = d_v;
    summary["horizon"] = opts.horizon;
    summary["exact"] = exact;
    summary["return_mass"] = 1.0 - rwl_table_s(table.t, opts.horizon + 1);
    summary["theorem1_margin"] = margin;
    summary["theorem1_pass"] = margin >= 0.25;
    summary["theorem2_profile_max"] = profile_max;
    summary["theorem2_pass"] = profile_max <= std::exp(10.0);
    summary["even_monotonicity_violation"] = violation;
    summary["hankel_min_eigenvalue"] = worst_eig;
    summary["hankel_pass"] = hankel_ok;

    if (!opts.out.empty()) {
        if (!write_file(opts.out, csv.s)) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
        emit_summary(summary, opts, std::cout);
    } else {
        std::cout << csv.s;
        emit_summary(summary, opts, std::cerr);
    }

    const bool bounds_ok = margin >= 0.25 && profile_max <= std::exp(10.0) && violation == 0 &&
                           hankel_ok;
    if (opts.strict && (!exact || !bounds_ok)) return kCheckFailure;
    return kPass;
}

int cmd_construct(const ConstructOpts& opts) {
    GraphHandle graph;
    if (rwl_status st = rwl_graph_from_spec(opts.graph.c_str(), opts.seed, 0, &graph.g))
        return report_error("building graph", st);
    print_graph_warnings(graph.g);
    StringHandle edges;
    if (rwl_status st = rwl_graph_to_edgelist(graph.g, &edges.s))
        return report_error("serializing graph", st);
    if (!opts.out.empty()) {
        if (!write_file(opts.out, edges.s)) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
        ordered_json summary;
        summary["schema_version"] = kSchemaVersion;
        summary["graph"] = opts.graph;
        summary["name"] = rwl_graph_name(graph.g);
        summary["n"] = rwl_graph_n(graph.g);
        summary["m"] = rwl_graph_m(graph.g);
        summary["out"] = opts.out;
        emit_summary(summary, opts, std::cout);
    } else {
        std::cout << edges.s;
    }
    return kPass;
}

int cmd_resistance(const ResistanceOpts& opts) {
    GraphHandle graph;
    if (rwl_status st = rwl_graph_from_spec(opts.graph.c_str(), opts.seed, 0, &graph.g))
        return report_error("building graph", st);
    const long n = rwl_graph_n(graph.g);
    std::vector<long> sources = parse_id_list(opts.source);
    std::vector<long> targets =
        opts.target.empty() ? std::vector<long>{n - 1} : parse_id_list(opts.target);

    std::vector<double> f(n, 0.0);
    double reff = 0.0;
    if (rwl_status st = rwl_solve_potential(graph.g, sources.data(), sources.size(),
                                            targets.data(), targets.size(), f.data(), n, &reff))
        return report_error("solving potential", st);
    double lipschitz = 0.0;
    rwl_lipschitz_margin(graph.g, f.data(), &lipschitz);

    if (!opts.out.empty()) {
        std::string csv = "vertex,f\n";
        for (long v = 0; v < n; ++v) csv += std::to_string(v) + "," + fmt17(f[v]) + "\n";
        if (!write_file(opts.out, csv)) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
    }
    if (!opts.flow_out.empty()) {
        // i(u,v) = f(v) - f(u) on unit conductances, oriented along the flow
        std::string csv = "u,v,i\n";
        std::vector<long> nbrs;
        for (long v = 0; v < n; ++v) {
            const long deg = rwl_graph_degree(graph.g, v);
            nbrs.assign(deg, 0);
            rwl_graph_neighbors(graph.g, v, nbrs.data(), deg);
            for (long j = 0; j < deg; ++j) {
                const long w = nbrs[j];
                if (w <= v) continue;
                double i = f[w] - f[v];
                long a = v, b = w;
                if (i < 0) {
                    std::swap(a, b);
                    i = -i;
                }
                csv += std::to_string(a) + "," + std::to_string(b) + "," + fmt17(i) + "\n";
            }
        }
        if (!write_file(opts.flow_out, csv)) {
            std::cerr << "error: cannot write " << opts.flow_out << "\n";
            return kUsageError;
        }
    }

    ordered_json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["graph"] = opts.graph;
    summary["effective_resistance"] = reff;
    summary["lipschitz_margin"] = lipschitz;
    summary["lipschitz_pass"] = lipschitz <= 1.0 + 1e-10;
    emit_summary(summary, opts, std::cout);
    if (opts.strict && lipschitz > 1.0 + 1e-10) return kCheckFailure;
    return kPass;
}

int cmd_expander(const ExpanderOpts& opts) {
    GraphHandle graph;
    if (rwl_status st = rwl_graph_random_regular(opts.n, opts.d, opts.seed, &graph.g))
        return report_error("generating expander", st);
    StringHandle report;
    if (rwl_status st = rwl_expander_report(graph.g, opts.seed, opts.pairs, &report.s))
        return report_error("building report", st);
    ordered_json j = ordered_json::parse(report.s);
    j.insert(j.begin(), {"schema_version", kSchemaVersion});

    bool mixing_pass = true;
    if (opts.rho >= 0.0) {
        StringHandle mixing;
        if (rwl_status st = rwl_mixing_check(graph.g, opts.rho, opts.t_max, 8, opts.seed, &mixing.s))
            return report_error("mixing check", st);
        j["mixing"] = ordered_json::parse(mixing.s);
        mixing_pass = j["mixing"]["pass"].get<bool>();
    }

    if (!opts.out.empty()) {
        if (!write_file(opts.out, j.dump(2) + "\n")) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
    }
    emit_summary(j, opts, std::cout);
    if (opts.strict && !mixing_pass) return kCheckFailure;
    return kPass;
}

int cmd_escape(const EscapeOpts& opts) {
    GraphHandle graph;
    if (rwl_status st = rwl_graph_from_spec(opts.graph.c_str(), opts.seed, 0, &graph.g))
        return report_error("building graph", st);
    StringHandle report;
    if (rwl_status st = rwl_mc_escape(graph.g, opts.x, opts.y, opts.eps, opts.seed, opts.trials,
                                      opts.workers, &report.s))
        return report_error("escape experiment", st);
    ordered_json j = ordered_json::parse(report.s);
    j.insert(j.begin(), {"schema_version", kSchemaVersion});
    if (!opts.out.empty()) {
        if (!write_file(opts.out, j.dump(2) + "\n")) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
    }
    emit_summary(j, opts, std::cout);
    return j["pass"].get<bool>() ? kPass : kCheckFailure;
}

int cmd_sharpness(const SharpnessOpts& opts) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    bool pass = true;

    if (opts.preset.empty()) {
        GraphHandle gt;
        if (rwl_status st = rwl_graph_gt(opts.t, opts.delta, opts.d, opts.seed, opts.t, &gt.g))
            return report_error("building G_t", st);
        print_graph_warnings(gt.g);
        TableHandle table;
        if (rwl_status st = rwl_return_table(gt.g, 0, opts.t, 0, &table.t))
            return report_error("computing G_t table", st);
        HalflineTail line(opts.t);

        const double hazard_gt = rwl_table_hazard(table.t, opts.t);
        const double hazard_line = line.hazard(opts.t);
        const double ratio = hazard_line > 0 ? hazard_gt / hazard_line
                                             : std::numeric_limits<double>::infinity();
        double best_ratio = 0.0;
        long best_t = 0;
        for (long t = 2; t <= opts.t; t += 1) {
            const double hl = line.hazard(t);
            if (hl <= 0) continue;
            const double r = rwl_table_hazard(table.t, t) / hl;
            if (r > best_ratio) {
                best_ratio = r;
                best_t = t;
            }
        }

        j["mode"] = "gt";
        j["t_star"] = opts.t;
        j["delta"] = opts.delta;
        j["d"] = opts.d;
        j["expander_n"] = std::stol(rwl_graph_meta(gt.g, "expander_n"));
        j["hazard_construction"] = hazard_gt;
        j["hazard_halfline"] = hazard_line;
        j["ratio"] = ratio;
        j["ratio_ge_5"] = ratio >= 5.0;
        j["best_ratio_over_t"] = best_ratio;
        j["best_ratio_t"] = best_t;
        pass = ratio >= 5.0;
    } else {
        long heights_small[] = {4};
        long sizes_small[] = {64};
        long heights_medium[] = {4, 16};
        long sizes_medium[] = {64, 4096};
        const long* heights = opts.preset == "small" ? heights_small : heights_medium;
        const long* sizes = opts.preset == "small" ? sizes_small : sizes_medium;
        const long scales = opts.preset == "small" ? 1 : 2;
        if (opts.preset != "small" && opts.preset != "medium") {
            std::cerr << "error: unknown preset '" << opts.preset << "'\n";
            return kUsageError;
        }

        std::vector<long> targets;
        long horizon = 0;
        for (long i = 0; i < scales; ++i) {
            const double tn = 0.1 * static_cast<double>(heights[i]) *
                              static_cast<double>(sizes[i]) * std::log(static_cast<double>(sizes[i]));
            targets.push_back(std::max<long>(4, static_cast<long>(tn)));
            horizon = std::max(horizon, targets.back());
        }
        GraphHandle graph;
        if (rwl_status st = rwl_graph_construction(heights, sizes, scales, opts.d, opts.seed,
                                                   horizon, &graph.g))
            return report_error("building construction", st);
        print_graph_warnings(graph.g);
        TableHandle table;
        if (rwl_status st = rwl_return_table(graph.g, 0, horizon, 0, &table.t))
            return report_error("computing construction table", st);
        HalflineTail line(horizon);

        j["mode"] = "construction";
        j["preset"] = opts.preset;
        j["scales"] = ordered_json::array();
        for (long i = 0; i < scales; ++i) {
            const long t_i = targets[i];
            const double hazard_c = rwl_table_hazard(table.t, t_i);
            const double hazard_l = line.hazard(t_i);
            const double ratio = hazard_l > 0 ? hazard_c / hazard_l
                                              : std::numeric_limits<double>::infinity();
            ordered_json je;
            je["scale"] = i + 1;
            je["h"] = heights[i];
            je["n"] = sizes[i];
            je["t_i"] = t_i;
            je["hazard_construction"] = hazard_c;
            je["hazard_halfline"] = hazard_l;
            je["ratio"] = ratio;
            j["scales"].push_back(je);
        }
    }

    if (!opts.out.empty()) {
        if (!write_file(opts.out, j.dump(2) + "\n")) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
    }
    emit_summary(j, opts, std::cout);
    if (opts.strict && !pass) return kCheckFailure;
    return kPass;
}

int cmd_collide(const CollideOpts& opts) {
    std::vector<long> heights = opts.heights;
    std::vector<long> sizes = opts.sizes;
    if (heights.empty()) {
        if (opts.preset == "small") {
            heights = {4};
            sizes = {64};
        } else if (opts.preset == "medium") {
            heights = {4, 16};
            sizes = {64, 4096};
        } else {
            std::cerr << "error: unknown preset '" << opts.preset << "'\n";
            return kUsageError;
        }
    }
    if (heights.size() != sizes.size()) {
        std::cerr << "error: --heights and --sizes must have equal length\n";
        return kUsageError;
    }

    StringHandle main_json, main_csv, control_json, control_csv;
    if (rwl_status st = rwl_mc_comb_collision(heights.data(), sizes.data(), heights.size(), 3,
                                              opts.seed, opts.trials, opts.workers, 0, opts.budget,
                                              &main_json.s, &main_csv.s))
        return report_error("comb collision experiment", st);
    if (rwl_status st = rwl_mc_comb_collision(heights.data(), sizes.data(), heights.size(), 3,
                                              opts.seed, opts.trials, opts.workers, 1, opts.budget,
                                              &control_json.s, &control_csv.s))
        return report_error("comb collision control", st);

    ordered_json jmain = ordered_json::parse(main_json.s);
    ordered_json jcontrol = ordered_json::parse(control_json.s);

    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["main"] = jmain;
    j["control"] = jcontrol;

    bool significant = false;
    if (!jmain["windows"].empty() && opts.trials > 0) {
        const long s1 = jmain["windows"].back()["trials_with_collision"].get<long>();
        const long s2 = jcontrol["windows"].back()["trials_with_collision"].get<long>();
        double z = 0.0, p = 1.0;
        rwl_proportion_contrast(s1, opts.trials, s2, opts.trials, &z, &p);
        significant = p < 0.01;
        j["contrast"] = {{"main_final_window", s1},
                         {"control_final_window", s2},
                         {"z", z},
                         {"p_value", p},
                         {"significant", significant}};
    }

    if (!opts.out.empty()) {
        if (!write_file(opts.out, j.dump(2) + "\n")) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
        const std::string stem =
            opts.out.size() > 5 && opts.out.substr(opts.out.size() - 5) == ".json"
                ? opts.out.substr(0, opts.out.size() - 5)
                : opts.out;
        write_file(stem + ".windows.csv", main_csv.s);
        write_file(stem + ".control.windows.csv", control_csv.s);
    }
    emit_summary(j, opts, std::cout);
    if (opts.strict && opts.trials > 0 && !significant) return kCheckFailure;
    return kPass;
}

namespace {

struct CheckSink {
    ordered_json results = ordered_json::array();
    long failures = 0;

    void add(const std::string& graph, const std::string& check, bool pass, double value) {
        ordered_json e;
        e["graph"] = graph;
        e["check"] = check;
        e["pass"] = pass;
        e["value"] = value;
        results.push_back(e);
        if (!pass) ++failures;
        std::cout << (pass ? "[ ok ] " : "[FAIL] ") << graph << " : " << check << " = "
                  << fmt17(value) << "\n";
    }
};

} // namespace

int cmd_verify(const VerifyOpts& opts) {
    std::vector<std::string> specs;
    for (long i = 0; i < rwl_corpus_count(); ++i) specs.push_back(rwl_corpus_spec(i));
    for (const std::string& s : opts.extra_graphs) specs.push_back(s);

    CheckSink sink;
    for (const std::string& spec : specs) {
        GraphHandle graph;
        if (rwl_status st = rwl_graph_from_spec(spec.c_str(), opts.seed, 0, &graph.g)) {
            std::cerr << "error: building '" << spec << "': " << rwl_last_error() << "\n";
            return map_status(st);
        }
        const long n = rwl_graph_n(graph.g);
        sink.add(spec, "graph_valid", rwl_graph_validate(graph.g) == RWL_OK, n);

        long horizon = 40;
        if (const char* radius = rwl_graph_meta(graph.g, "trunc_radius"))
            horizon = std::min<long>(horizon, std::stol(radius));

        for (long t : {2l, 3l, 4l, 7l, 12l}) {
            double residual = 0.0;
            rwl_reversibility_residual(graph.g, 0, t, &residual);
            sink.add(spec, "reversibility_t" + std::to_string(t), residual <= 1e-10, residual);
        }

        TableHandle table;
        if (rwl_return_table(graph.g, 0, horizon, 0, &table.t) == RWL_OK) {
            sink.add(spec, "even_monotonicity", rwl_even_monotonicity_violation(table.t) == 0, 0);
            double worst_eig = 1.0;
            for (long order = 2; order <= 5; ++order) {
                double eig = 0.0;
                if (rwl_hankel_min_eig(table.t, order, 0, &eig) == RWL_OK)
                    worst_eig = std::min(worst_eig, eig);
            }
            double shifted = 0.0;
            if (rwl_hankel_min_eig(table.t, 3, 1, &shifted) == RWL_OK)
                worst_eig = std::min(worst_eig, shifted);
            sink.add(spec, "hankel_psd", worst_eig >= -1e-10, worst_eig);
        } else {
            sink.add(spec, "table", false, 0);
        }

        {
            std::vector<double> green(n, 0.0);
            rwl_green_function(graph.g, 0, green.data(), n);
            const double d0 = rwl_graph_degree(graph.g, 0);
            double worst = 0.0;
            for (long u = 0; u < n; ++u)
                worst = std::max(worst,
                                 std::abs(green[u] - rwl_graph_degree(graph.g, u) / d0));
            sink.add(spec, "green_degree_ratio", worst <= 1e-10, worst);
        }

        {
            const long x = 0, y = n - 1;
            long sx[] = {x}, sy[] = {y};
            double exy = 0.0, eyx = 0.0, reff = 0.0;
            rwl_expected_hitting_time(graph.g, x, sy, 1, &exy);
            rwl_expected_hitting_time(graph.g, y, sx, 1, &eyx);
            rwl_effective_resistance(graph.g, sx, 1, sy, 1, &reff);
            double total_degree = 0.0;
            for (long v = 0; v < n; ++v) total_degree += rwl_graph_degree(graph.g, v);
            const double expect = total_degree * reff;
            const double err = std::abs(exy + eyx - expect) / std::max(1.0, expect);
            sink.add(spec, "commute_identity", err <= 1e-9, err);
        }

        {
            long sx[] = {0}, sy[] = {n - 1};
            std::vector<double> f(n, 0.0);
            double reff = 0.0;
            rwl_solve_potential(graph.g, sx, 1, sy, 1, f.data(), n, &reff);
            double lip = 0.0;
            rwl_lipschitz_margin(graph.g, f.data(), &lip);
            sink.add(spec, "lipschitz", lip <= 1.0 + 1e-10, lip);
        }

        if (opts.rational && n <= 12) {
            bool all_equal = true;
            for (long t : {2l, 3l, 5l, 8l}) {
                int equal = 0;
                rwl_reversibility_exact(graph.g, 0, t, &equal);
                all_equal = all_equal && equal == 1;
            }
            sink.add(spec, "reversibility_rational", all_equal, all_equal ? 1 : 0);
        }
    }

    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["checks"] = sink.results;
    j["failures"] = sink.failures;
    if (!opts.out.empty()) {
        if (!write_file(opts.out, j.dump(2) + "\n")) {
            std::cerr << "error: cannot write " << opts.out << "\n";
            return kUsageError;
        }
    }
    std::cout << (sink.failures == 0 ? "verify: all checks passed\n"
                                     : "verify: " + std::to_string(sink.failures) +
                                           " check(s) failed\n");
    return sink.failures == 0 ? kPass : kCheckFailure;
}

} // namespace rwlab_cli
