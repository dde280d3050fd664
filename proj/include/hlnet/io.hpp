#ifndef HLNET_IO_HPP
#define HLNET_IO_HPP

#include <charconv>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "hl_network.hpp"
#include "isomorphism.hpp"

namespace hlnet {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Int>
Int parse_int(std::string_view text, const char* what) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    }
    return value;
}

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// Parses "u v"; returns nullopt for blank and comment lines.
inline std::optional<Edge> parse_edge_line(std::string_view line, std::size_t lineno) {
    line = trim(line);
    if (line.empty() || line.front() == '#') {
        return std::nullopt;
    }
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    }
    auto u = parse_int<Vertex>(trim(line.substr(0, sp)), "vertex");
    auto v = parse_int<Vertex>(trim(line.substr(sp)), "vertex");
    return Edge(u, v);
}

}  // namespace detail

/// "n=<dimension>" followed by one "u v" line per edge, u < v, sorted.
inline void write_edge_list(std::ostream& out, const Graph& g, unsigned dimension) {
    out << "n=" << dimension << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

inline void write_edge_list(std::ostream& out, const HLNetwork& g) { write_edge_list(out, g.graph(), g.dimension()); }

struct EdgeListFile {
    unsigned dimension = 0;
    Graph graph;
};

/// Reads the edge-list format; the graph has 2^n vertices.
inline EdgeListFile read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<unsigned> dimension;
    while (!dimension && std::getline(in, line)) {
        ++lineno;
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        if (t.substr(0, 2) != "n=") {
            throw ParseError("line " + std::to_string(lineno) + ": expected header 'n=<dimension>'");
        }
        dimension = detail::parse_int<unsigned>(detail::trim(t.substr(2)), "dimension");
    }
    if (!dimension) {
        throw ParseError("missing header 'n=<dimension>'");
    }
    check_dimension(*dimension);
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto e = detail::parse_edge_line(line, lineno)) {
            edges.push_back(*e);
        }
    }
    EdgeListFile file;
    file.dimension = *dimension;
    try {
        file.graph = Graph::from_edges(std::size_t{1} << *dimension, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return file;
}

/// Reads "u v" lines (header and comments ignored) and checks each is a host edge.
inline EdgeSet read_edge_set(std::istream& in, const Graph& host) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = detail::trim(line);
        if (t.substr(0, 2) == "n=") {
            continue;
        }
        if (auto e = detail::parse_edge_line(t, lineno)) {
            edges.push_back(*e);
        }
    }
    EdgeSet set(std::move(edges));
    edge_ids(host, set);
    return set;
}

/// Undirected DOT; edges in `highlight` are drawn red and dashed.
inline void write_dot(std::ostream& out, const Graph& g, const EdgeSet* highlight = nullptr,
                      std::string_view name = "G") {
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (highlight && highlight->contains(e)) {
            out << " [color=red, style=dashed]";
        }
        out << ";\n";
    }
    out << "}\n";
}

/// A graph named on the command line. `network` is set whenever the graph is
/// an HL-network under the dense labelling.
struct LoadedGraph {
    std::string spec;
    unsigned dimension = 0;
    Graph graph;
    std::shared_ptr<const HLNetwork> network;
};

/// Graph spec: "qn:<n>", "cq3", "random:<n>:<seed>", or an edge-list file path.
inline LoadedGraph load_graph(const std::string& spec) {
    LoadedGraph out;
    out.spec = spec;
    auto adopt = [&](HLNetwork g) {
        out.dimension = g.dimension();
        out.graph = g.graph();
        out.network = std::make_shared<const HLNetwork>(std::move(g));
    };
    std::string_view s = spec;
    if (s.substr(0, 3) == "qn:") {
        adopt(build_hypercube(detail::parse_int<unsigned>(s.substr(3), "dimension")));
    } else if (s == "cq3") {
        adopt(build_crossed_cube_3());
    } else if (s.substr(0, 7) == "random:") {
        auto rest = s.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("random graph spec needs a seed: random:<n>:<seed>");
        }
        adopt(build_random_hl(detail::parse_int<unsigned>(rest.substr(0, colon), "dimension"),
                              detail::parse_int<std::uint64_t>(rest.substr(colon + 1), "seed")));
    } else {
        std::ifstream in(spec);
        if (!in) {
            throw ParseError("cannot open graph file '" + spec + "'");
        }
        auto file = read_edge_list(in);
        out.dimension = file.dimension;
        out.graph = file.graph;
        try {
            out.network = std::make_shared<const HLNetwork>(HLNetwork::from_graph(std::move(file.graph), file.dimension));
        } catch (const std::invalid_argument&) {
            out.network.reset();
        }
    }
    return out;
}

}  // namespace hlnet

#endif  // HLNET_IO_HPP
