#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rwlab_cli {

// Exit codes: 0 pass, 1 check failure, 2 usage/config error, 3 resource
// guard.
enum ExitCode { kPass = 0, kCheckFailure = 1, kUsageError = 2, kResourceGuard = 3 };

struct CommonOpts {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json"; // json|csv summaries
    bool strict = false;
    int workers = 0; // 0 = all available cores
};

struct DistOpts : CommonOpts {
    std::string graph;
    long v = 0;
    long horizon = 200;
};

struct ConstructOpts : CommonOpts {
    std::string graph;
};

struct ResistanceOpts : CommonOpts {
    std::string graph;
    std::string source = "0";
    std::string target;
    std::string flow_out;
};

struct ExpanderOpts : CommonOpts {
    long n = 64;
    long d = 3;
    long pairs = 16;
    double rho = -1.0; // >= 0 enables the mixing-bound check
    long t_max = 32;
};

struct EscapeOpts : CommonOpts {
    std::string graph;
    long x = 0;
    long y = 0;
    double eps = 0.25;
    long trials = 100000;
};

struct SharpnessOpts : CommonOpts {
    long t = 2000;
    double delta = 0.1;
    long d = 3;
    std::string preset; // empty = single-expander G_t; small|medium = full construction
};

struct CollideOpts : CommonOpts {
    std::string preset = "medium";
    std::vector<long> heights;
    std::vector<long> sizes;
    long trials = 200;
    std::uint64_t budget = 2000000000ull;
};

struct VerifyOpts : CommonOpts {
    bool rational = false;
    std::vector<std::string> extra_graphs;
};

int cmd_dist(const DistOpts& opts);
int cmd_construct(const ConstructOpts& opts);
int cmd_resistance(const ResistanceOpts& opts);
int cmd_expander(const ExpanderOpts& opts);
int cmd_escape(const EscapeOpts& opts);
int cmd_sharpness(const SharpnessOpts& opts);
int cmd_collide(const CollideOpts& opts);
int cmd_verify(const VerifyOpts& opts);

} // namespace rwlab_cli
