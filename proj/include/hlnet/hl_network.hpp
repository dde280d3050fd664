#ifndef HLNET_HL_NETWORK_HPP
#define HLNET_HL_NETWORK_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace hlnet {

class ConstructionTree;
using TreePtr = std::shared_ptr<const ConstructionTree>;

/// How an HL-network was assembled: a leaf (K_1) or two equal-dimension
/// children joined by a perfect matching. Immutable; subtrees may be shared.
class ConstructionTree {
public:
    static TreePtr leaf() {
        static const TreePtr k1(new ConstructionTree(0, nullptr, nullptr, {}));
        return k1;
    }

    /// `matching[i]` is the right-child vertex matched to left-child vertex i.
    static TreePtr node(TreePtr left, TreePtr right, std::vector<Vertex> matching) {
        if (!left || !right || left->dimension() != right->dimension()) {
            throw std::invalid_argument("construction tree: children must have equal dimension");
        }
        return TreePtr(new ConstructionTree(left->dimension() + 1, std::move(left), std::move(right),
                                            std::move(matching)));
    }

    unsigned dimension() const { return dimension_; }
    bool is_leaf() const { return dimension_ == 0; }
    const TreePtr& left() const { return left_; }
    const TreePtr& right() const { return right_; }
    std::span<const Vertex> matching() const { return matching_; }

private:
    ConstructionTree(unsigned dim, TreePtr l, TreePtr r, std::vector<Vertex> m)
        : dimension_(dim), left_(std::move(l)), right_(std::move(r)), matching_(std::move(m)) {}

    unsigned dimension_;
    TreePtr left_;
    TreePtr right_;
    std::vector<Vertex> matching_;
};

/// An n-dimensional hypercube-like network together with its construction tree.
///
/// Vertex ids are dense: the left child occupies [0, 2^{n-1}) and the right
/// child [2^{n-1}, 2^n), recursively, so every aligned block of 2^r ids
/// along the left spine is an r-dimensional subcube.
class HLNetwork {
public:
    HLNetwork() : HLNetwork(0, Graph::from_edges(1, {}), ConstructionTree::leaf()) {}

    unsigned dimension() const { return dimension_; }
    const Graph& graph() const { return graph_; }
    const TreePtr& tree() const { return tree_; }

    // GraphView surface, forwarded to the graph.
    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t edge_count() const { return graph_.edge_count(); }
    std::size_t degree(Vertex v) const { return graph_.degree(v); }
    const Graph& host() const { return graph_; }
    bool is_removed(EdgeId) const { return false; }
    template <typename Fn>
    void for_each_incidence(Vertex v, Fn&& fn) const {
        graph_.for_each_incidence(v, std::forward<Fn>(fn));
    }

    /// Rebuilds the construction tree from a graph labelled by the dense convention.
    /// Throws if the graph is not an HL-network under that labelling.
    static HLNetwork from_graph(Graph g, unsigned dimension);

    friend HLNetwork compose(const HLNetwork& left, const HLNetwork& right, std::span<const Vertex> matching);

private:
    HLNetwork(unsigned dim, Graph g, TreePtr tree) : dimension_(dim), graph_(std::move(g)), tree_(std::move(tree)) {}

    friend HLNetwork build_hypercube(unsigned n);

    unsigned dimension_;
    Graph graph_;
    TreePtr tree_;
};

static_assert(GraphView<HLNetwork>);

inline void check_dimension(unsigned n) {
    if (n > kMaxDimension) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the limit of " +
                                    std::to_string(kMaxDimension));
    }
}

/// left ⊕ right: right-half ids are offset by 2^{n-1}; vertex i of `left`
/// is joined to vertex matching[i] of `right`.
inline HLNetwork compose(const HLNetwork& left, const HLNetwork& right, std::span<const Vertex> matching) {
    if (left.dimension() != right.dimension()) {
        throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(left.dimension()) + " vs " +
                                    std::to_string(right.dimension()) + ")");
    }
    const unsigned n = left.dimension() + 1;
    check_dimension(n);
    const std::size_t half = left.vertex_count();
    if (matching.size() != half) {
        throw std::invalid_argument("compose: matching must cover all " + std::to_string(half) + " vertices");
    }
    std::vector<std::uint8_t> hit(half, 0);
    for (Vertex m : matching) {
        if (m >= half || hit[m]) {
            throw std::invalid_argument("compose: matching is not a bijection");
        }
        hit[m] = 1;
    }

    std::vector<Edge> edges;
    edges.reserve(left.edge_count() + right.edge_count() + half);
    edges.insert(edges.end(), left.graph().edges().begin(), left.graph().edges().end());
    const auto offset = static_cast<Vertex>(half);
    for (const Edge& e : right.graph().edges()) {
        edges.emplace_back(e.u + offset, e.v + offset);
    }
    for (Vertex i = 0; i < half; ++i) {
        edges.emplace_back(i, matching[i] + offset);
    }
    auto tree = ConstructionTree::node(left.tree(), right.tree(), {matching.begin(), matching.end()});
    return HLNetwork(n, Graph::from_edges(2 * half, std::move(edges)), std::move(tree));
}

/// Q_n: labels differing in exactly one bit are adjacent. The tree splits on
/// the highest bit with the identity matching and shares identical subtrees.
inline HLNetwork build_hypercube(unsigned n) {
    check_dimension(n);
    const std::size_t count = std::size_t{1} << n;
    std::vector<Edge> edges;
    edges.reserve(n * count / 2);
    for (Vertex v = 0; v < count; ++v) {
        for (unsigned b = 0; b < n; ++b) {
            Vertex w = v ^ (Vertex{1} << b);
            if (v < w) {
                edges.emplace_back(v, w);
            }
        }
    }
    TreePtr tree = ConstructionTree::leaf();
    for (unsigned d = 1; d <= n; ++d) {
        std::vector<Vertex> identity(std::size_t{1} << (d - 1));
        std::iota(identity.begin(), identity.end(), Vertex{0});
        tree = ConstructionTree::node(tree, tree, std::move(identity));
    }
    return HLNetwork(n, Graph::from_edges(count, std::move(edges)), std::move(tree));
}

namespace detail {

inline HLNetwork random_hl(unsigned n, Rng& rng) {
    if (n == 0) {
        return HLNetwork();
    }
    HLNetwork left = random_hl(n - 1, rng);
    HLNetwork right = random_hl(n - 1, rng);
    std::vector<Vertex> matching(left.vertex_count());
    std::iota(matching.begin(), matching.end(), Vertex{0});
    shuffle(std::span<Vertex>(matching), rng);
    return compose(left, right, matching);
}

}  // namespace detail

/// A random member of HL_n: two independent random HL_{n-1} members joined
/// by a uniformly random matching. Same seed, same graph.
inline HLNetwork build_random_hl(unsigned n, std::uint64_t seed) {
    check_dimension(n);
    Rng rng(seed);
    return detail::random_hl(n, rng);
}

inline HLNetwork HLNetwork::from_graph(Graph g, unsigned dimension) {
    check_dimension(dimension);
    const std::size_t count = std::size_t{1} << dimension;
    if (g.vertex_count() != count) {
        throw std::invalid_argument("not an HL-network: expected " + std::to_string(count) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
    }
    // Each vertex must have exactly one neighbour per level, where the level of
    // edge {x,y} is the highest bit in which x and y differ.
    for (Vertex x = 0; x < count; ++x) {
        std::vector<unsigned> per_level(dimension, 0);
        for (const Incidence& inc : g.incidences(x)) {
            unsigned level = std::bit_width(x ^ inc.neighbor) - 1;
            ++per_level[level];
        }
        for (unsigned d = 0; d < dimension; ++d) {
            if (per_level[d] != 1) {
                throw std::invalid_argument("not an HL-network under dense labelling: vertex " + std::to_string(x) +
                                            " has " + std::to_string(per_level[d]) + " neighbours at level " +
                                            std::to_string(d));
            }
        }
    }

    // Rebuild bottom-up: tree for the block starting at `base` of dimension d.
    auto build = [&](auto&& self, Vertex base, unsigned d) -> TreePtr {
        if (d == 0) {
            return ConstructionTree::leaf();
        }
        const Vertex half = Vertex{1} << (d - 1);
        TreePtr l = self(self, base, d - 1);
        TreePtr r = self(self, base + half, d - 1);
        std::vector<Vertex> matching(half);
        for (Vertex i = 0; i < half; ++i) {
            for (const Incidence& inc : g.incidences(base + i)) {
                if (std::bit_width((base + i) ^ inc.neighbor) == d) {
                    matching[i] = inc.neighbor - base - half;
                }
            }
        }
        return ConstructionTree::node(std::move(l), std::move(r), std::move(matching));
    };
    TreePtr tree = build(build, 0, dimension);
    return HLNetwork(dimension, std::move(g), std::move(tree));
}

/// An r-dimensional subcube reached by following left children n-r times.
struct SubcubeHandle {
    unsigned level = 0;
    std::vector<Vertex> vertices;
    TreePtr subtree;

    bool contains(Vertex v) const { return v < vertices.size(); }
};

inline SubcubeHandle subcube(const HLNetwork& g, unsigned r) {
    if (r > g.dimension()) {
        throw std::invalid_argument("subcube: level " + std::to_string(r) + " exceeds dimension " +
                                    std::to_string(g.dimension()));
    }
    TreePtr node = g.tree();
    for (unsigned i = 0; i < g.dimension() - r; ++i) {
        node = node->left();
    }
    SubcubeHandle handle;
    handle.level = r;
    handle.vertices.resize(std::size_t{1} << r);
    std::iota(handle.vertices.begin(), handle.vertices.end(), Vertex{0});
    handle.subtree = std::move(node);
    return handle;
}

}  // namespace hlnet

#endif  // HLNET_HL_NETWORK_HPP
