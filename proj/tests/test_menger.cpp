#include <gtest/gtest.h>

#include "hlnet/hlnet.hpp"
#include "oracles.hpp"

using namespace hlnet;

namespace {

Graph path_graph(std::size_t count) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < count; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(count, edges);
}

// Materialise the surviving edges of a masked view as a standalone graph.
Graph residual_graph(const MaskedGraph& view) {
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < view.host().edge_count(); ++e) {
        if (!view.is_removed(e)) kept.push_back(view.host().edge(e));
    }
    return Graph::from_edges(view.vertex_count(), kept);
}

// First failing pair by one independent flow per pair, ascending (u, v).
template <GraphView G>
std::optional<SmLambdaCounterexample> naive_first_failure(const G& g) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            const auto value = max_edge_disjoint_paths(g, u, v).value;
            const auto bound = std::min(g.degree(u), g.degree(v));
            if (value < bound) return SmLambdaCounterexample{u, v, value, bound};
        }
    }
    return std::nullopt;
}

}  // namespace

TEST(Flow, Q3AntipodalAndAdjacent) {
    const auto q3 = build_hypercube(3);
    const auto far = max_edge_disjoint_paths(q3, 0, 7);
    EXPECT_EQ(far.value, 3u);
    EXPECT_EQ(far.value, oracle::max_disjoint_path_family(q3.graph(), 0, 7));
    std::string why;
    EXPECT_TRUE(certify_flow(q3, far, &why)) << why;

    const auto near = max_edge_disjoint_paths(q3, 0, 1);
    EXPECT_EQ(near.value, 3u);
    EXPECT_EQ(min_edge_cut(q3, 0, 1).size(), oracle::brute_force_min_cut(q3.graph(), 0, 1));
}

TEST(Flow, Q3WithFaults) {
    const auto q3 = build_hypercube(3);
    const auto view = delete_edges(q3.graph(), EdgeSet({{0, 1}, {0, 2}}));
    const auto r = max_edge_disjoint_paths(view, 0, 1);
    EXPECT_EQ(r.value, 1u);
    EXPECT_EQ(r.value, oracle::max_disjoint_path_family(view, 0, 1));
    EXPECT_TRUE(certify_flow(view, r, nullptr));

    const auto view2 = delete_edges(q3.graph(), EdgeSet({{0, 1}}));
    EXPECT_EQ(max_edge_disjoint_paths(view2, 0, 1).value, 2u);
}

TEST(Flow, PathGraphCutIsOneEdge) {
    const auto p = path_graph(5);
    const auto r = max_edge_disjoint_paths(p, 0, 4);
    EXPECT_EQ(r.value, 1u);
    ASSERT_EQ(r.paths.size(), 1u);
    EXPECT_EQ(r.paths[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));
    EXPECT_EQ(r.cut.size(), 1u);
}

TEST(Flow, DisconnectedPairHasZeroFlow) {
    const auto q3 = build_hypercube(3);
    const auto cut_off = delete_edges(q3.graph(), EdgeSet({{0, 1}, {0, 2}, {0, 4}}));
    const auto r = max_edge_disjoint_paths(cut_off, 0, 7);
    EXPECT_EQ(r.value, 0u);
    EXPECT_TRUE(r.paths.empty());
    EXPECT_TRUE(r.cut.empty());
    EXPECT_TRUE(certify_flow(cut_off, r, nullptr));
}

TEST(Flow, RejectsBadPairs) {
    const auto q3 = build_hypercube(3);
    EXPECT_THROW(max_edge_disjoint_paths(q3, 2, 2), std::invalid_argument);
    EXPECT_THROW(max_edge_disjoint_paths(q3, 0, 8), std::invalid_argument);
}

TEST(Flow, CertifyRejectsTamperedResults) {
    const auto q3 = build_hypercube(3);
    auto r = max_edge_disjoint_paths(q3, 0, 7);
    auto more = r;
    more.value = 4;
    EXPECT_FALSE(certify_flow(q3, more, nullptr));
    auto shared = r;
    shared.paths[1] = shared.paths[0];
    std::string why;
    EXPECT_FALSE(certify_flow(q3, shared, &why));
    EXPECT_FALSE(why.empty());
}

TEST(Flow, MatchesOraclesOnRandomSmallInstances) {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(uniform_below(rng, 2));
        const auto g = build_random_hl(n, rng());
        const auto k = static_cast<std::uint32_t>(uniform_below(rng, g.edge_count() / 2 + 1));
        MaskedGraph view(g.graph());
        for (EdgeId e : sample_subset(static_cast<std::uint32_t>(g.edge_count()), k, rng)) view.remove(e);
        const auto residual = residual_graph(view);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                const auto r = max_edge_disjoint_paths(view, u, v);
                EXPECT_EQ(r.value, oracle::max_disjoint_path_family(view, u, v));
                EXPECT_EQ(r.value, oracle::brute_force_min_cut(residual, u, v));
                EXPECT_EQ(r.value, max_edge_disjoint_paths(view, v, u).value);
                EXPECT_TRUE(certify_flow(view, r, nullptr));
            }
        }
    }
}

TEST(Flow, DeletingEdgesNeverRaisesFlow) {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = build_random_hl(4, rng());
        MaskedGraph view(g.graph());
        const auto u = static_cast<Vertex>(uniform_below(rng, 16));
        const auto v = static_cast<Vertex>((u + 1 + uniform_below(rng, 15)) % 16);
        auto previous = max_edge_disjoint_paths(view, u, v).value;
        for (EdgeId e : sample_subset(32, 10, rng)) {
            view.remove(e);
            const auto now = max_edge_disjoint_paths(view, u, v).value;
            EXPECT_LE(now, previous);
            previous = now;
        }
    }
}

TEST(EdgeConnectivity, Examples) {
    EXPECT_EQ(edge_connectivity(build_hypercube(4)), 4u);
    EXPECT_EQ(edge_connectivity(build_crossed_cube_3()), 3u);
    EXPECT_EQ(edge_connectivity(build_hypercube(2)), 2u);
    EXPECT_EQ(edge_connectivity(path_graph(4)), 1u);
    EXPECT_THROW(edge_connectivity(build_hypercube(0)), std::invalid_argument);
}

TEST(SmLambda, FaultFreeNetworksHoldWithNPaths) {
    for (unsigned n = 1; n <= 5; ++n) {
        for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
            const auto g = build_random_hl(n, seed);
            const auto report = is_sm_lambda(g);
            EXPECT_TRUE(report.verdict);
            EXPECT_EQ(report.pairs_checked, g.vertex_count() * (g.vertex_count() - 1) / 2);
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                    EXPECT_EQ(max_edge_disjoint_paths(g, u, v).value, n);
                }
            }
        }
    }
}

TEST(SmLambda, WitnessMinusOneFaultFails) {
    // Q_3 with faults {1-3, 1-5}: vertex 1 keeps degree 1, and pair (0, 2)
    // only has two disjoint paths although both ends keep degree 3.
    const auto q3 = build_hypercube(3);
    const auto view = delete_edges(q3.graph(), EdgeSet({{1, 3}, {1, 5}}));
    const auto report = is_sm_lambda(view);
    EXPECT_FALSE(report.verdict);
    ASSERT_TRUE(report.counterexample);
    EXPECT_EQ(*report.counterexample, (SmLambdaCounterexample{0, 2, 2, 3}));
    EXPECT_EQ(oracle::brute_force_min_cut(residual_graph(view), 0, 2), 2u);
    EXPECT_FALSE(SmLambdaChecker{}.holds(view));
}

TEST(SmLambda, DisconnectedGraphFails) {
    const auto q3 = build_hypercube(3);
    const auto view = delete_edges(q3.graph(), EdgeSet({{0, 1}, {0, 2}, {0, 4}}));
    const auto report = is_sm_lambda(view);
    EXPECT_FALSE(report.verdict);
    ASSERT_TRUE(report.counterexample);
    EXPECT_EQ(report.counterexample->u, 0u);
    EXPECT_EQ(report.counterexample->v, 1u);
    EXPECT_EQ(report.counterexample->flow, 0u);
}

TEST(SmLambda, TrivialGraphs) {
    EXPECT_TRUE(is_sm_lambda(build_hypercube(0)).verdict);
    EXPECT_TRUE(is_sm_lambda(build_hypercube(1)).verdict);
    EXPECT_TRUE(is_sm_lambda(path_graph(3)).verdict);
    // The two inner vertices of P_4 have degree 2 but one path between them.
    EXPECT_FALSE(is_sm_lambda(path_graph(4)).verdict);
}

TEST(SmLambda, TreeVerdictAgreesWithPerPairFlows) {
    Rng rng(77);
    SmLambdaChecker checker;
    std::size_t failing = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const unsigned n = 3 + static_cast<unsigned>(uniform_below(rng, 2));
        const auto g = build_random_hl(n, rng());
        const auto k = static_cast<std::uint32_t>(1 + uniform_below(rng, 2 * n));
        MaskedGraph view(g.graph());
        for (EdgeId e : sample_subset(static_cast<std::uint32_t>(g.edge_count()), k, rng)) view.remove(e);
        const auto report = checker.check(view);
        const auto naive = naive_first_failure(view);
        EXPECT_EQ(report.verdict, !naive.has_value());
        EXPECT_EQ(checker.holds(view), report.verdict);
        if (naive && is_connected(view)) {
            ASSERT_TRUE(report.counterexample);
            EXPECT_EQ(*report.counterexample, *naive);
        }
        failing += report.verdict ? 0 : 1;
    }
    EXPECT_GT(failing, 0u);
    EXPECT_LT(failing, 150u);
}

TEST(SmLambda, CrossedCubeAgreesWithBruteForceCut) {
    const auto& cq3 = build_crossed_cube_3();
    for (EdgeId a = 0; a < cq3.edge_count(); ++a) {
        MaskedGraph view(cq3.graph());
        view.remove(a);
        const auto residual = residual_graph(view);
        bool brute_ok = true;
        for (Vertex u = 0; u < 8 && brute_ok; ++u) {
            for (Vertex v = u + 1; v < 8; ++v) {
                if (oracle::brute_force_min_cut(residual, u, v) < std::min(view.degree(u), view.degree(v))) {
                    brute_ok = false;
                    break;
                }
            }
        }
        EXPECT_EQ(is_sm_lambda(view).verdict, brute_ok);
    }
}
