#include "rwlab/graphspec.hpp"

#include <sstream>

#include "rwlab/builders.hpp"
#include "rwlab/edgelist.hpp"
#include "rwlab/error.hpp"
#include "rwlab/expander.hpp"

namespace rwlab {

namespace {

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

long parse_long(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        fail(errc::invalid_argument, std::string("bad ") + what + " in graph spec: '" + s + "'");
    }
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        fail(errc::invalid_argument, std::string("bad ") + what + " in graph spec: '" + s + "'");
    }
}

Graph parse_spec(const std::string& spec, std::uint64_t seed, long min_halfline);

Graph dispatch(const std::string& head, const std::string& args, std::uint64_t seed,
               long min_halfline) {
    if (head == "file") return read_edgelist_file(args);
    if (head == "pendant") return attach_pendant(parse_spec(args, seed, min_halfline), 0);
    if (head == "comb") {
        std::vector<std::string> parts = split(args, '|');
        if (parts.size() != 3) fail(errc::invalid_argument, "comb spec wants comb:G|H|root");
        Graph g = parse_spec(parts[0], seed, min_halfline);
        Graph h = parse_spec(parts[1], seed + 1, min_halfline);
        return comb_product(g, h, static_cast<Vertex>(parse_long(parts[2], "comb root")));
    }
    if (head == "construction") {
        ConstructionParams params;
        params.seed = seed;
        for (const std::string& pair : split(args, ',')) {
            std::vector<std::string> hn = split(pair, ':');
            if (hn.size() != 2) fail(errc::invalid_argument, "construction spec wants h:n pairs");
            params.heights.push_back(parse_long(hn[0], "height"));
            params.expander_sizes.push_back(parse_long(hn[1], "expander size"));
        }
        return build_construction(params, min_halfline);
    }

    std::vector<std::string> a = args.empty() ? std::vector<std::string>{} : split(args, ',');
    auto want = [&](std::size_t k) {
        if (a.size() != k)
            fail(errc::invalid_argument, "graph spec '" + head + "' wants " + std::to_string(k) +
                                             " argument(s)");
    };
    if (head == "halfline") {
        want(1);
        return build_halfline(std::max(parse_long(a[0], "length"), min_halfline));
    }
    if (head == "segment") {
        want(1);
        return build_segment(std::max(parse_long(a[0], "radius"), min_halfline));
    }
    if (head == "star_halfline") {
        want(2);
        return build_star_halfline(std::max(parse_long(a[0], "length"), min_halfline),
                                   parse_long(a[1], "pendants"));
    }
    if (head == "cycle") {
        want(1);
        return build_cycle(parse_long(a[0], "n"));
    }
    if (head == "complete") {
        want(1);
        return build_complete(parse_long(a[0], "n"));
    }
    if (head == "torus") {
        want(2);
        return build_torus(parse_long(a[0], "rows"), parse_long(a[1], "cols"));
    }
    if (head == "regular") {
        want(2);
        return random_regular(parse_long(a[0], "n"), parse_long(a[1], "d"), seed);
    }
    if (head == "gt") {
        want(3);
        return build_gt(parse_long(a[0], "t"), parse_double(a[1], "delta"), parse_long(a[2], "d"),
                        seed, min_halfline);
    }
    fail(errc::invalid_argument, "unknown graph spec '" + head + "'");
}

Graph parse_spec(const std::string& spec, std::uint64_t seed, long min_halfline) {
    std::string body = spec;
    long loop_v = -1, loop_c = 0;
    if (std::size_t plus = body.find("+loops="); plus != std::string::npos) {
        std::vector<std::string> vc = split(body.substr(plus + 7), ',');
        if (vc.size() != 2) fail(errc::invalid_argument, "loops suffix wants +loops=V,C");
        loop_v = parse_long(vc[0], "loop vertex");
        loop_c = parse_long(vc[1], "loop count");
        body = body.substr(0, plus);
    }
    std::size_t colon = body.find(':');
    const std::string head = colon == std::string::npos ? body : body.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : body.substr(colon + 1);
    Graph g = dispatch(head, args, seed, min_halfline);
    if (loop_v >= 0) g = add_loops(g, static_cast<Vertex>(loop_v), loop_c);
    return g;
}

} // namespace

Graph graph_from_spec(const std::string& spec, std::uint64_t seed, long min_halfline) {
    if (spec.empty()) fail(errc::invalid_argument, "empty graph spec");
    return parse_spec(spec, seed, min_halfline);
}

std::vector<std::string> verification_corpus() {
    return {
        "segment:40",
        "halfline:64",
        "star_halfline:24,1",
        "star_halfline:24,4",
        "star_halfline:24,9",
        "complete:4",
        "cycle:5",
        "cycle:6",
        "torus:6,6",
        "regular:64,3",
        "pendant:regular:64,3",
        "gt:200,0.5,3",
        "construction:4:64",
        "comb:segment:6|star_halfline:4,2|0",
        "halfline:32+loops=0,2",
    };
}

} // namespace rwlab
