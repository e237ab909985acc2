#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "commands.hpp"
#include "rwlab.h"

namespace {

using namespace rwlab_cli;

// Reads a line-oriented key=value config file and returns CLI tokens
// ("--key=value"). Blank lines and '#' comments are skipped. Tokens get
// inserted before the user's flags, so explicit flags win.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open config file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::size_t end = line.find_last_not_of(" \t\r");
        std::string entry = line.substr(start, end - start + 1);
        if (entry.find('=') == std::string::npos)
            throw CLI::ValidationError("--config", "config line is not key=value: " + entry);
        tokens.push_back("--" + entry);
    }
    return tokens;
}

std::vector<std::string> expand_args(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string config_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        }
    }
    if (config_path.empty()) return args;
    std::vector<std::string> tokens = config_tokens(config_path);
    // insert right after the subcommand (first non-flag argument)
    std::size_t at = args.size();
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (!args[i].empty() && args[i][0] != '-') {
            at = i + 1;
            break;
        }
    }
    args.insert(args.begin() + at, tokens.begin(), tokens.end());
    return args;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "master seed");
    cmd->add_option("--out", opts.out, "output file");
    cmd->add_option("--format", opts.format, "summary format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--strict", opts.strict, "nonzero exit on warnings/bound failures");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = all cores)");
    cmd->add_option("--config", "key=value config file (flags override)")->type_name("FILE");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rwlab: return times of random walks on recurrent graphs"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rwl_version()));

    DistOpts dist;
    auto* cmd_d = app.add_subcommand("dist", "exact return-time table and theorem bounds");
    cmd_d->add_option("--graph", dist.graph, "graph spec")->required();
    cmd_d->add_option("--v", dist.v, "center vertex");
    cmd_d->add_option("--horizon", dist.horizon, "table horizon");
    add_common(cmd_d, dist);

    ConstructOpts construct;
    auto* cmd_c = app.add_subcommand("construct", "emit a graph as an edge list");
    cmd_c->add_option("--graph", construct.graph, "graph spec")->required();
    add_common(cmd_c, construct);

    ResistanceOpts resistance;
    auto* cmd_r = app.add_subcommand("resistance", "potentials and effective resistance");
    cmd_r->add_option("--graph", resistance.graph, "graph spec")->required();
    cmd_r->add_option("--source", resistance.source, "source vertex ids (comma separated)");
    cmd_r->add_option("--target", resistance.target, "target vertex ids (default: last vertex)");
    cmd_r->add_option("--flow-out", resistance.flow_out, "write unit current flow CSV");
    add_common(cmd_r, resistance);

    ExpanderOpts expander;
    auto* cmd_x = app.add_subcommand("expander", "generate an expander and report spectra");
    cmd_x->add_option("--n", expander.n, "vertices");
    cmd_x->add_option("--d", expander.d, "degree");
    cmd_x->add_option("--pairs", expander.pairs, "resistance sample pairs");
    cmd_x->add_option("--rho", expander.rho, "run the mixing-bound check with this rho");
    cmd_x->add_option("--tmax", expander.t_max, "mixing check horizon");
    add_common(cmd_x, expander);

    EscapeOpts escape;
    auto* cmd_e = app.add_subcommand("escape", "Monte Carlo check of the escape-time bound");
    cmd_e->add_option("--graph", escape.graph, "graph spec")->required();
    cmd_e->add_option("--x", escape.x, "start vertex");
    cmd_e->add_option("--y", escape.y, "target vertex")->required();
    cmd_e->add_option("--eps", escape.eps, "epsilon");
    cmd_e->add_option("--trials", escape.trials, "Monte Carlo trials");
    add_common(cmd_e, escape);

    SharpnessOpts sharpness;
    auto* cmd_s = app.add_subcommand("sharpness", "hazard of the sharpness construction vs the half-line");
    cmd_s->add_option("--t", sharpness.t, "target time t*");
    cmd_s->add_option("--delta", sharpness.delta, "delta parameter of G_t");
    cmd_s->add_option("--d", sharpness.d, "expander degree");
    cmd_s->add_option("--preset", sharpness.preset, "construction preset (small|medium) instead of G_t");
    add_common(cmd_s, sharpness);

    CollideOpts collide;
    auto* cmd_k = app.add_subcommand("collide", "two-walker comb collision experiment with control");
    cmd_k->add_option("--preset", collide.preset, "small|medium");
    cmd_k->add_option("--heights", collide.heights, "explicit h_i list")->delimiter(',');
    cmd_k->add_option("--sizes", collide.sizes, "explicit n_i list")->delimiter(',');
    cmd_k->add_option("--trials", collide.trials, "trials per comb");
    cmd_k->add_option("--budget", collide.budget, "total walker-step budget");
    add_common(cmd_k, collide);

    VerifyOpts verify;
    auto* cmd_v = app.add_subcommand("verify", "identity suite over the built-in corpus");
    cmd_v->add_flag("--rational", verify.rational, "exact-rational identity checks on small graphs");
    cmd_v->add_option("--graph", verify.extra_graphs, "extra graph specs")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    add_common(cmd_v, verify);

    std::vector<std::string> args;
    try {
        args = expand_args(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    std::vector<const char*> argp;
    argp.reserve(args.size());
    for (const std::string& a : args) argp.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsageError;
    }

    auto fill_workers = [](CommonOpts& opts) {
        if (opts.workers <= 0)
            opts.workers = std::max(1u, std::thread::hardware_concurrency());
    };

    if (cmd_d->parsed()) {
        fill_workers(dist);
        return cmd_dist(dist);
    }
    if (cmd_c->parsed()) return cmd_construct(construct);
    if (cmd_r->parsed()) return cmd_resistance(resistance);
    if (cmd_x->parsed()) return cmd_expander(expander);
    if (cmd_e->parsed()) {
        fill_workers(escape);
        return cmd_escape(escape);
    }
    if (cmd_s->parsed()) return cmd_sharpness(sharpness);
    if (cmd_k->parsed()) {
        fill_workers(collide);
        return cmd_collide(collide);
    }
    if (cmd_v->parsed()) return cmd_verify(verify);
    return kUsageError;
}
