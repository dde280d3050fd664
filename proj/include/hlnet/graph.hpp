#ifndef HLNET_GRAPH_HPP
#define HLNET_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlnet {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr unsigned kMaxDimension = 20;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const Edge& operator[](std::size_t i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Simple undirected graph on dense vertex ids with an immutable edge list.
///
/// Edges are indexed lexicographically by (min endpoint, max endpoint); the
/// index is the EdgeId used by masks, fault enumeration and flow cuts.
/// Adjacency is stored in CSR form, each neighbour list ascending.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
        if (vertex_count > std::numeric_limits<Vertex>::max()) {
            throw std::invalid_argument("graph: too many vertices");
        }
        for (const Edge& e : edges) {
            if (e.u == e.v) {
                throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
            }
            if (e.v >= vertex_count) {
                throw std::invalid_argument("graph: unknown vertex " + std::to_string(e.v));
            }
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            throw std::invalid_argument("graph: parallel edge");
        }

        Graph g;
        g.vertex_count_ = vertex_count;
        g.edges_ = std::move(edges);
        g.offsets_.assign(vertex_count + 1, 0);
        for (const Edge& e : g.edges_) {
            ++g.offsets_[e.u + 1];
            ++g.offsets_[e.v + 1];
        }
        std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
        g.incidences_.resize(2 * g.edges_.size());
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        for (EdgeId id = 0; id < g.edges_.size(); ++id) {
            const Edge& e = g.edges_[id];
            g.incidences_[fill[e.u]++] = {e.v, id};
            g.incidences_[fill[e.v]++] = {e.u, id};
        }
        for (std::size_t v = 0; v < vertex_count; ++v) {
            std::sort(g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                      g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
                      [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
        }
        return g;
    }

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Incidence> incidences(Vertex v) const {
        return {incidences_.data() + offsets_[v], degree(v)};
    }

    template <typename Fn>
    void for_each_incidence(Vertex v, Fn&& fn) const {
        for (const Incidence& inc : incidences(v)) {
            fn(inc.neighbor, inc.edge);
        }
    }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
        const Edge key(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) {
            return std::nullopt;
        }
        return static_cast<EdgeId>(it - edges_.begin());
    }

    bool has_vertex(Vertex v) const { return v < vertex_count_; }
    const Graph& host() const { return *this; }
    bool is_removed(EdgeId) const { return false; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Incidence> incidences_;
};

/// Anything that exposes a host Graph plus a (possibly masked) incidence view.
template <typename G>
concept GraphView = requires(const G& g, Vertex v, EdgeId e) {
    { g.vertex_count() } -> std::convertible_to<std::size_t>;
    { g.degree(v) } -> std::convertible_to<std::size_t>;
    { g.host() } -> std::convertible_to<const Graph&>;
    { g.is_removed(e) } -> std::convertible_to<bool>;
    g.for_each_incidence(v, [](Vertex, EdgeId) {});
};

/// G - F as a mask over a host graph. The host is never copied or modified.
///
/// Edges can be removed and restored in place, which is how fault
/// enumeration walks millions of fault sets with a single view per worker.
class MaskedGraph {
public:
    explicit MaskedGraph(const Graph& host)
        : host_(&host), removed_(host.edge_count(), 0), degree_(host.vertex_count()) {
        for (Vertex v = 0; v < host.vertex_count(); ++v) {
            degree_[v] = static_cast<std::uint32_t>(host.degree(v));
        }
    }

    std::size_t vertex_count() const { return host_->vertex_count(); }
    std::size_t edge_count() const { return host_->edge_count() - removed_count_; }
    std::size_t degree(Vertex v) const { return degree_[v]; }
    const Graph& host() const { return *host_; }
    bool is_removed(EdgeId e) const { return removed_[e] != 0; }
    std::size_t removed_count() const { return removed_count_; }

    template <typename Fn>
    void for_each_incidence(Vertex v, Fn&& fn) const {
        for (const Incidence& inc : host_->incidences(v)) {
            if (!removed_[inc.edge]) {
                fn(inc.neighbor, inc.edge);
            }
        }
    }

    void remove(EdgeId e) {
        if (removed_[e]) {
            return;
        }
        removed_[e] = 1;
        ++removed_count_;
        const Edge& ed = host_->edge(e);
        --degree_[ed.u];
        --degree_[ed.v];
    }

    void restore(EdgeId e) {
        if (!removed_[e]) {
            return;
        }
        removed_[e] = 0;
        --removed_count_;
        const Edge& ed = host_->edge(e);
        ++degree_[ed.u];
        ++degree_[ed.v];
    }

    EdgeSet removed_edges() const {
        std::vector<Edge> out;
        for (EdgeId e = 0; e < removed_.size(); ++e) {
            if (removed_[e]) {
                out.push_back(host_->edge(e));
            }
        }
        return EdgeSet(std::move(out));
    }

private:
    const Graph* host_;
    std::vector<std::uint8_t> removed_;
    std::vector<std::uint32_t> degree_;
    std::size_t removed_count_ = 0;
};

static_assert(GraphView<Graph>);
static_assert(GraphView<MaskedGraph>);

/// Maps an edge set onto host edge ids; throws if any member is not a host edge.
inline std::vector<EdgeId> edge_ids(const Graph& host, const EdgeSet& set) {
    std::vector<EdgeId> ids;
    ids.reserve(set.size());
    for (const Edge& e : set) {
        auto id = (e.v < host.vertex_count()) ? host.find_edge(e.u, e.v) : std::nullopt;
        if (!id) {
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} is not in the graph");
        }
        ids.push_back(*id);
    }
    return ids;
}

inline EdgeSet edges_from_ids(const Graph& host, std::span<const EdgeId> ids) {
    std::vector<Edge> out;
    out.reserve(ids.size());
    for (EdgeId id : ids) {
        out.push_back(host.edge(id));
    }
    return EdgeSet(std::move(out));
}

/// G - F. Throws if some edge of F is not in G.
inline MaskedGraph delete_edges(const Graph& g, const EdgeSet& faults) {
    MaskedGraph view(g);
    for (EdgeId id : edge_ids(g, faults)) {
        view.remove(id);
    }
    return view;
}

template <GraphView G>
std::size_t min_degree(const G& g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        best = std::min(best, g.degree(v));
    }
    return g.vertex_count() == 0 ? 0 : best;
}

/// Component label per vertex; labels are assigned in order of smallest member.
template <GraphView G>
std::vector<std::uint32_t> component_labels(const G& g, std::uint32_t* count = nullptr) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(g.vertex_count(), unset);
    std::vector<Vertex> stack;
    std::uint32_t next = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != unset) {
            continue;
        }
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            g.for_each_incidence(x, [&](Vertex y, EdgeId) {
                if (label[y] == unset) {
                    label[y] = next;
                    stack.push_back(y);
                }
            });
        }
        ++next;
    }
    if (count) {
        *count = next;
    }
    return label;
}

/// Component sizes, ascending.
template <GraphView G>
std::vector<std::size_t> component_sizes(const G& g) {
    std::uint32_t count = 0;
    auto label = component_labels(g, &count);
    std::vector<std::size_t> sizes(count, 0);
    for (auto l : label) {
        ++sizes[l];
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

template <GraphView G>
std::size_t largest_component_size(const G& g) {
    auto sizes = component_sizes(g);
    return sizes.empty() ? 0 : sizes.back();
}

template <GraphView G>
bool is_connected(const G& g) {
    return component_sizes(g).size() <= 1;
}

/// E_X: edges with exactly one endpoint in `vertices`.
template <GraphView G>
EdgeSet edge_boundary(const G& g, std::span<const Vertex> vertices) {
    std::vector<std::uint8_t> inside(g.vertex_count(), 0);
    for (Vertex v : vertices) {
        if (v >= g.vertex_count()) {
            throw std::invalid_argument("edge_boundary: unknown vertex " + std::to_string(v));
        }
        inside[v] = 1;
    }
    std::vector<Edge> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!inside[v]) {
            continue;
        }
        g.for_each_incidence(v, [&](Vertex w, EdgeId) {
            if (!inside[w]) {
                out.emplace_back(v, w);
            }
        });
    }
    return EdgeSet(std::move(out));
}

/// Number of edges of `g` with both endpoints in `vertices`.
template <GraphView G>
std::size_t induced_edge_count(const G& g, std::span<const Vertex> vertices) {
    std::vector<std::uint8_t> inside(g.vertex_count(), 0);
    for (Vertex v : vertices) {
        inside[v] = 1;
    }
    std::size_t count = 0;
    for (Vertex v : vertices) {
        g.for_each_incidence(v, [&](Vertex w, EdgeId) {
            if (inside[w] && v < w) {
                ++count;
            }
        });
    }
    return count;
}

}  // namespace hlnet

#endif  // HLNET_GRAPH_HPP
