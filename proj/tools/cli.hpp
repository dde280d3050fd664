#ifndef HLNET_TOOLS_CLI_HPP
#define HLNET_TOOLS_CLI_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hlnet/acceptance.hpp"
#include "hlnet/hlnet.hpp"
#include "hlnet/report.hpp"

namespace hlnet::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidConfig = 2 };

struct RunConfig {
    std::string command;
    std::string graph;
    std::optional<Vertex> u;
    std::optional<Vertex> v;
    std::optional<std::string> faults_file;
    std::optional<unsigned> n;
    std::optional<std::string> oracle_graph;
    std::optional<std::int64_t> g_max;
    unsigned r = 0;
    std::optional<std::int64_t> m;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t samples = 10'000;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::uint64_t budget = kDefaultSubsetBudget;
    std::int64_t wall_seconds = 600;
    std::string format;
    std::optional<std::string> dot_file;
    bool exact = false;
    bool find_breaking = false;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void validate(const RunConfig& c) {
    if (c.budget == 0 || c.wall_seconds <= 0 || c.samples == 0) {
        throw ConfigError("budgets and sample counts must be positive");
    }
    if (c.workers == 0) {
        throw ConfigError("--workers must be at least 1");
    }
    if (c.mode == SearchMode::sampled && !c.seed) {
        throw ConfigError("--seed is required in sampled mode");
    }
}

inline SearchOptions search_options(const RunConfig& c) {
    SearchOptions o;
    o.mode = c.mode;
    o.samples = c.samples;
    o.seed = c.seed;
    o.workers = c.workers;
    o.budget = c.budget;
    o.wall_limit = std::chrono::seconds(c.wall_seconds);
    return o;
}

/// Self-describing header shared by every JSON report.
inline json envelope(const RunConfig& c) {
    json e{{"tool", "hlnet"},
           {"version", kToolVersion},
           {"command", c.command},
           {"graph", c.graph.empty() ? json(nullptr) : json(c.graph)},
           {"seed", c.seed ? json(*c.seed) : json(nullptr)},
           {"budget", {{"subsets", c.budget}, {"wall_seconds", c.wall_seconds}}},
           {"workers", c.workers}};
    return e;
}

inline const HLNetwork& require_network(const LoadedGraph& g) {
    if (!g.network) {
        throw ConfigError("graph '" + g.spec + "' is not an HL-network under the dense labelling");
    }
    return *g.network;
}

inline MaskedGraph apply_faults(const LoadedGraph& g, const std::optional<std::string>& file) {
    if (!file) {
        return MaskedGraph(g.graph);
    }
    std::ifstream in(*file);
    if (!in) {
        throw ConfigError("cannot open fault file '" + *file + "'");
    }
    return delete_edges(g.graph, read_edge_set(in, g.graph));
}

inline int cmd_build(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    if (c.format.empty() || c.format == "edgelist") {
        write_edge_list(out, g.graph, g.dimension);
    } else if (c.format == "dot") {
        write_dot(out, g.graph);
    } else if (c.format == "json") {
        json j = envelope(c);
        json edges = json::array();
        for (const Edge& e : g.graph.edges()) {
            edges.push_back(to_json(e));
        }
        j["result"] = {{"dimension", g.dimension}, {"vertices", g.graph.vertex_count()}, {"edges", edges}};
        out << j.dump() << '\n';
    } else {
        throw ConfigError("unknown format '" + c.format + "' for build");
    }
    return kOk;
}

inline int cmd_flow(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto view = apply_faults(g, c.faults_file);
    json j = envelope(c);
    j["result"] = to_json(max_edge_disjoint_paths(view, *c.u, *c.v));
    out << j.dump() << '\n';
    return kOk;
}

inline int cmd_smlambda(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto view = apply_faults(g, c.faults_file);
    const auto report = is_sm_lambda(view);
    json j = envelope(c);
    j["faults"] = c.faults_file ? json(*c.faults_file) : json(nullptr);
    j["result"] = to_json(report);
    out << j.dump() << '\n';
    return report.verdict ? kOk : kVerificationFailed;
}

inline int cmd_bounds(const RunConfig& c, std::ostream& out) {
    const unsigned n = *c.n;
    if (n < 1 || n > kMaxDimension) {
        throw ConfigError("--n must be in [1, " + std::to_string(kMaxDimension) + "]");
    }
    std::optional<LoadedGraph> oracle;
    if (c.oracle_graph) {
        oracle = load_graph(*c.oracle_graph);
    }
    const std::int64_t top = std::min<std::int64_t>(c.g_max.value_or(std::int64_t{1} << n), std::int64_t{1} << n);
    const bool table = c.format == "table";
    if (table) {
        out << std::setw(10) << "g" << std::setw(12) << "e_g" << std::setw(12) << "f(g)";
        if (oracle) {
            out << std::setw(12) << "oracle";
        }
        out << '\n';
    }
    bool all_pass = true;
    for (std::int64_t g = 1; g <= top; ++g) {
        BoundReport row;
        row.n = n;
        row.g = g;
        row.e_g = e_max(g);
        row.f_g = f(n, g);
        if (oracle && static_cast<std::size_t>(g) <= oracle->graph.vertex_count()) {
            row.oracle_e_g = brute_force_e_max(oracle->graph, static_cast<std::size_t>(g), c.budget);
        }
        const bool below_full = g < (std::int64_t{1} << n);
        row.pass = (!row.oracle_e_g || *row.oracle_e_g == row.e_g) && (!below_full || row.f_g >= n);
        all_pass = all_pass && row.pass;
        if (table) {
            out << std::setw(10) << row.g << std::setw(12) << row.e_g << std::setw(12) << row.f_g;
            if (oracle) {
                out << std::setw(12) << (row.oracle_e_g ? std::to_string(*row.oracle_e_g) : "-");
            }
            out << '\n';
        } else {
            json j = to_json(row);
            j["tool"] = "hlnet";
            j["version"] = kToolVersion;
            out << j.dump() << '\n';
        }
    }
    return all_pass ? kOk : kVerificationFailed;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto& net = require_network(g);
    const auto opt = search_options(c);
    json j = envelope(c);
    j["claimed_sm_lambda_r"] = c.r >= 1 ? json(claimed_sm_lambda(net.dimension(), c.r)) : json(nullptr);
    int code = kOk;
    if (c.exact) {
        const auto res = sm_lambda_r_exhaustive(net, c.r, opt);
        j["result"] = to_json(res);
        if (res.in_theorem_scope && res.value != claimed_sm_lambda(net.dimension(), c.r)) {
            code = kVerificationFailed;
        }
    } else if (c.find_breaking) {
        const auto res = find_breaking_fault_set(net, c.r, c.m, opt);
        j["result"] = to_json(res);
        code = res.verdict == Verdict::refuted ? kOk : kVerificationFailed;
    } else {
        const auto res = verify_lower_bound(net, c.r, c.m, opt);
        j["result"] = to_json(res);
        code = res.verdict == Verdict::refuted ? kVerificationFailed : kOk;
    }
    out << j.dump() << '\n';
    return code;
}

inline int cmd_witness(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto w = extremal_witness(require_network(g), c.r);
    if (c.format == "dot") {
        write_dot(out, g.graph, &w.faults);
        return kOk;
    }
    if (c.dot_file) {
        std::ofstream dot(*c.dot_file);
        if (!dot) {
            throw ConfigError("cannot write '" + *c.dot_file + "'");
        }
        write_dot(dot, g.graph, &w.faults);
    }
    json j = envelope(c);
    j["result"] = to_json(w);
    out << j.dump() << '\n';
    return kOk;
}

inline int cmd_lemma27(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c.graph);
    const auto res = verify_lemma_2_7(require_network(g), c.r, search_options(c));
    json j = envelope(c);
    j["result"] = to_json(res);
    out << j.dump() << '\n';
    return res.pass ? kOk : kVerificationFailed;
}

inline int cmd_reproduce(const RunConfig& c, std::ostream& out) {
    acceptance::Settings settings;
    settings.workers = c.workers;
    json rows = json::array();
    bool all = true;
    for (const auto& criterion : acceptance::all_criteria()) {
        const auto r = criterion(settings);
        all = all && r.pass;
        if (c.format == "json") {
            rows.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            out << std::left << std::setw(3) << r.id << (r.pass ? "PASS  " : "FAIL  ") << r.title << '\n';
        }
    }
    if (c.format == "json") {
        json j = envelope(c);
        j["result"] = {{"criteria", rows}, {"note", acceptance::kScopeNote}};
        out << j.dump() << '\n';
    } else {
        out << "note: " << acceptance::kScopeNote << '\n';
    }
    return all ? kOk : kVerificationFailed;
}

/// Executes one subcommand. Invalid configuration exits with 2, a failed
/// verification with 1.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        validate(c);
        if (c.command == "build") return cmd_build(c, out);
        if (c.command == "flow") return cmd_flow(c, out);
        if (c.command == "smlambda") return cmd_smlambda(c, out);
        if (c.command == "bounds") return cmd_bounds(c, out);
        if (c.command == "verify") return cmd_verify(c, out);
        if (c.command == "witness") return cmd_witness(c, out);
        if (c.command == "lemma27") return cmd_lemma27(c, out);
        if (c.command == "reproduce") return cmd_reproduce(c, out);
        throw ConfigError("unknown command '" + c.command + "'");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
    }
    return kInvalidConfig;
}

/// Parses argv into a RunConfig and runs it.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"hlnet: edge-fault-tolerance toolkit for hypercube-like networks"};
    app.require_subcommand(1);
    RunConfig c;

    const std::map<std::string, SearchMode> modes{{"exhaustive", SearchMode::exhaustive},
                                                  {"sampled", SearchMode::sampled}};
    auto search_flags = [&](CLI::App* sub) {
        sub->add_option("--mode", c.mode, "exhaustive or sampled")->transform(CLI::CheckedTransformer(modes));
        sub->add_option("--samples", c.samples, "sample count in sampled mode");
        sub->add_option("--seed", c.seed, "seed for sampled mode");
        sub->add_option("--workers", c.workers, "parallel workers");
        sub->add_option("--budget", c.budget, "subset-count ceiling for enumeration");
        sub->add_option("--wall-seconds", c.wall_seconds, "wall-clock ceiling");
    };

    auto* build = app.add_subcommand("build", "construct a graph and print it");
    build->add_option("--graph", c.graph, "qn:<n> | cq3 | random:<n>:<seed> | <file>")->required();
    build->add_option("--format", c.format, "edgelist (default) | dot | json");

    auto* flow = app.add_subcommand("flow", "edge-disjoint paths and minimum cut between two vertices");
    flow->add_option("graph", c.graph, "graph spec or edge-list file")->required();
    flow->add_option("u", c.u)->required();
    flow->add_option("v", c.v)->required();
    flow->add_option("--faults", c.faults_file, "edge file removed before the flow");

    auto* sm = app.add_subcommand("smlambda", "strong Menger edge connectivity report");
    sm->add_option("graph", c.graph, "graph spec or edge-list file")->required();
    sm->add_option("--faults", c.faults_file, "edge file removed before the check");

    auto* bounds = app.add_subcommand("bounds", "e_g and f(g) rows");
    bounds->add_option("--n", c.n, "dimension")->required();
    bounds->add_flag("--table", [&](std::int64_t) { c.format = "table"; }, "aligned table instead of JSON lines");
    bounds->add_option("--g-max", c.g_max, "last g to print");
    bounds->add_option("--oracle", c.oracle_graph, "graph for the brute-force e_g column");
    bounds->add_option("--budget", c.budget, "subset-count ceiling for the oracle");

    auto* verify = app.add_subcommand("verify", "search admissible fault sets for an SM-lambda break");
    verify->add_option("--graph", c.graph)->required();
    verify->add_option("--r", c.r, "residual degree bound")->required();
    verify->add_option("--m", c.m, "fault budget (default 2^r(n-r)-n)");
    verify->add_flag("--exact", c.exact, "compute sm_lambda^r exhaustively");
    verify->add_flag("--find-breaking", c.find_breaking, "look for a breaking set (default m = 2^r(n-r)-n+1)");
    search_flags(verify);

    auto* witness = app.add_subcommand("witness", "extremal fault set for the upper bound");
    witness->add_option("--graph", c.graph)->required();
    witness->add_option("--r", c.r)->required();
    witness->add_option("--dot", c.dot_file, "also write DOT with the fault set highlighted");
    witness->add_option("--format", c.format, "json (default) | dot");

    auto* lemma = app.add_subcommand("lemma27", "large-component check after edge deletion");
    lemma->add_option("--graph", c.graph)->required();
    lemma->add_option("--r", c.r)->required();
    search_flags(lemma);

    auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite and print a pass/fail matrix");
    reproduce->add_option("--workers", c.workers);
    reproduce->add_option("--format", c.format, "table (default) | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    }
    c.command = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

}  // namespace hlnet::cli

#endif  // HLNET_TOOLS_CLI_HPP
