#ifndef HLNET_ISOMORPHISM_HPP
#define HLNET_ISOMORPHISM_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "hl_network.hpp"

namespace hlnet {

inline constexpr std::size_t kIsomorphismVertexLimit = 10;

namespace detail {

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.vertex_count()) {
        adj_a_.assign(n_ * n_, 0);
        adj_b_.assign(n_ * n_, 0);
        for (const Edge& e : a.edges()) {
            adj_a_[e.u * n_ + e.v] = adj_a_[e.v * n_ + e.u] = 1;
        }
        for (const Edge& e : b.edges()) {
            adj_b_[e.u * n_ + e.v] = adj_b_[e.v * n_ + e.u] = 1;
        }
        map_.assign(n_, 0);
        used_.assign(n_, 0);
    }

    bool run() { return extend(0); }

private:
    bool extend(std::size_t x) {
        if (x == n_) {
            return true;
        }
        for (std::size_t y = 0; y < n_; ++y) {
            if (used_[y] || a_.degree(static_cast<Vertex>(x)) != b_.degree(static_cast<Vertex>(y))) {
                continue;
            }
            bool consistent = true;
            for (std::size_t p = 0; p < x && consistent; ++p) {
                consistent = adj_a_[x * n_ + p] == adj_b_[y * n_ + map_[p]];
            }
            if (!consistent) {
                continue;
            }
            map_[x] = y;
            used_[y] = 1;
            if (extend(x + 1)) {
                return true;
            }
            used_[y] = 0;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::size_t n_;
    std::vector<std::uint8_t> adj_a_;
    std::vector<std::uint8_t> adj_b_;
    std::vector<std::size_t> map_;
    std::vector<std::uint8_t> used_;
};

}  // namespace detail

/// Exhaustive backtracking isomorphism test for graphs of at most ten vertices.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > kIsomorphismVertexLimit || b.vertex_count() > kIsomorphismVertexLimit) {
        throw std::invalid_argument("are_isomorphic: graphs above " + std::to_string(kIsomorphismVertexLimit) +
                                    " vertices are not supported");
    }
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) {
        return false;
    }
    return detail::IsomorphismSearch(a, b).run();
}

/// All 24 graphs C_4 ⊕ C_4, one per matching, in lexicographic matching order.
inline std::vector<std::pair<std::array<Vertex, 4>, HLNetwork>> all_c4_compositions() {
    const HLNetwork c4 = build_hypercube(2);
    std::array<Vertex, 4> sigma{0, 1, 2, 3};
    std::vector<std::pair<std::array<Vertex, 4>, HLNetwork>> out;
    do {
        out.emplace_back(sigma, compose(c4, c4, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// Groups graphs into isomorphism classes; returns the class index of each input.
inline std::vector<std::size_t> isomorphism_classes(const std::vector<const Graph*>& graphs,
                                                    std::size_t* class_count = nullptr) {
    std::vector<const Graph*> representatives;
    std::vector<std::size_t> cls;
    for (const Graph* g : graphs) {
        std::size_t k = 0;
        while (k < representatives.size() && !are_isomorphic(*representatives[k], *g)) {
            ++k;
        }
        if (k == representatives.size()) {
            representatives.push_back(g);
        }
        cls.push_back(k);
    }
    if (class_count) {
        *class_count = representatives.size();
    }
    return cls;
}

/// CQ_3: C_4 ⊕ C_4 under the lexicographically smallest matching whose
/// result is not isomorphic to Q_3.
inline const HLNetwork& build_crossed_cube_3() {
    static const HLNetwork cq3 = [] {
        const HLNetwork q3 = build_hypercube(3);
        for (auto& [sigma, g] : all_c4_compositions()) {
            if (!are_isomorphic(g.graph(), q3.graph())) {
                return g;
            }
        }
        throw std::logic_error("no C_4 matching yields a graph outside the Q_3 class");
    }();
    return cq3;
}

}  // namespace hlnet

#endif  // HLNET_ISOMORPHISM_HPP
