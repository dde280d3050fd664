#include <gtest/gtest.h>

#include "hlnet/hlnet.hpp"
#include "oracles.hpp"

using namespace hlnet;

namespace {

struct NaiveScan {
    std::uint64_t admissible = 0;
    std::optional<std::vector<std::uint32_t>> first_break;
};

// Plain k-subset scan with an independent per-pair flow check; no pruning,
// no equivalent-flow tree, no partitioning.
NaiveScan naive_scan(const Graph& host, std::size_t k, unsigned r) {
    NaiveScan out;
    oracle::for_each_combination(host.edge_count(), k, [&](const std::vector<std::uint32_t>& ids) {
        if (out.first_break) return;
        MaskedGraph view(host);
        for (auto e : ids) view.remove(e);
        if (min_degree(view) < r) return;
        ++out.admissible;
        std::vector<Edge> kept;
        for (EdgeId e = 0; e < host.edge_count(); ++e) {
            if (!view.is_removed(e)) kept.push_back(host.edge(e));
        }
        auto root = oracle::union_find_roots(host.vertex_count(), kept);
        // A disconnected residual graph counts as a break.
        if (std::any_of(root.begin(), root.end(), [&](std::size_t x) { return x != root[0]; })) {
            out.first_break = ids;
            return;
        }
        for (Vertex u = 0; u < view.vertex_count(); ++u) {
            for (Vertex v = u + 1; v < view.vertex_count(); ++v) {
                if (max_edge_disjoint_paths(view, u, v).value < std::min(view.degree(u), view.degree(v))) {
                    out.first_break = ids;
                    return;
                }
            }
        }
    });
    return out;
}

SearchOptions with_workers(unsigned w) {
    SearchOptions o;
    o.workers = w;
    return o;
}

}  // namespace

TEST(Counts, ClaimedValueAndWitnessSize) {
    EXPECT_EQ(claimed_sm_lambda(3, 1), 1);
    EXPECT_EQ(claimed_sm_lambda(4, 1), 2);
    EXPECT_EQ(claimed_sm_lambda(4, 2), 4);
    EXPECT_EQ(witness_fault_count(3, 1), 2);
    EXPECT_EQ(witness_fault_count(4, 1), 3);
    EXPECT_EQ(witness_fault_count(4, 2), 5);
    EXPECT_EQ(witness_fault_count(10, 8), 503);
    EXPECT_EQ(reference_sm_lambda_r0(5), 3);
}

TEST(Admissible, Examples) {
    const auto q3 = build_hypercube(3);
    EXPECT_TRUE(admissible(q3, EdgeSet{}, 3));
    EXPECT_FALSE(admissible(q3, EdgeSet({{0, 1}}), 3));
    EXPECT_TRUE(admissible(q3, EdgeSet({{0, 1}, {0, 2}}), 1));
    EXPECT_FALSE(admissible(q3, EdgeSet({{0, 1}, {0, 2}, {0, 4}}), 1));
    ConditionalFaultModel model{1, 2};
    EXPECT_TRUE(model.admits(q3.graph(), EdgeSet({{1, 3}, {1, 5}})));
    EXPECT_FALSE(model.admits(q3.graph(), EdgeSet({{1, 3}, {1, 5}, {6, 7}})));
}

TEST(Witness, Q3R1) {
    const auto w = extremal_witness(build_hypercube(3), 1);
    EXPECT_EQ(w.faults, EdgeSet({{1, 3}, {1, 5}}));
    EXPECT_EQ(w.u, 0u);
    EXPECT_EQ(w.v, 6u);
    EXPECT_EQ(w.flow_value, 2u);
    EXPECT_TRUE(w.kept.empty());
    EXPECT_EQ(w.subcube_neighbors, (std::vector<Vertex>{1}));
}

TEST(Witness, LargeCubeQ10R8) {
    const auto g = build_hypercube(10);
    const auto w = extremal_witness(g, 8);
    EXPECT_EQ(w.faults.size(), 503u);
    EXPECT_EQ(w.flow_value, 9u);
    EXPECT_EQ(w.kept.size(), 7u);
    const auto residual = delete_edges(g.graph(), w.faults);
    EXPECT_GE(min_degree(residual), 8u);
    EXPECT_TRUE(certify_flow(residual, w.flow, nullptr));
}

TEST(Witness, SizeAndDegreesAcrossDimensions) {
    for (unsigned n = 3; n <= 12; ++n) {
        for (unsigned r = 1; r + 2 <= n; ++r) {
            const std::int64_t p = std::int64_t{1} << r;
            // Both closed forms of the fault count agree.
            EXPECT_EQ((p - 1) * (n - r) - (r - 1), witness_fault_count(n, r));
            if (n > 9) continue;
            const auto g = build_random_hl(n, n * 31 + r);
            const auto w = extremal_witness(g, r);
            EXPECT_EQ(static_cast<std::int64_t>(w.faults.size()), witness_fault_count(n, r));
            const auto residual = delete_edges(g.graph(), w.faults);
            for (Vertex x : w.subcube.vertices) {
                if (x == w.u) {
                    EXPECT_EQ(residual.degree(x), n);
                    continue;
                }
                const auto& nb = w.subcube_neighbors;
                const bool keeps = std::find(nb.begin(), nb.begin() + (r - 1), x) != nb.begin() + (r - 1);
                EXPECT_EQ(residual.degree(x), keeps ? r + 1 : r);
            }
            EXPECT_EQ(residual.degree(w.v), n);
            EXPECT_EQ(max_edge_disjoint_paths(residual, w.u, w.v).value, n - 1);
            EXPECT_FALSE(is_sm_lambda(residual).verdict);
        }
    }
}

TEST(Witness, RejectsOutOfRange) {
    EXPECT_THROW(extremal_witness(build_hypercube(3), 0), std::invalid_argument);
    EXPECT_THROW(extremal_witness(build_hypercube(3), 2), std::invalid_argument);
    EXPECT_THROW(extremal_witness(build_hypercube(2), 1), std::invalid_argument);
}

TEST(Enumeration, MatchesNaiveScan) {
    for (const auto& g : {build_hypercube(3), build_crossed_cube_3(), build_random_hl(4, 3)}) {
        for (unsigned r : {0u, 1u}) {
            for (std::size_t k = 0; k <= 3; ++k) {
                const auto naive = naive_scan(g.graph(), k, r);
                const auto fast = find_first_combination(g.graph(), k, r, 1, detail::sm_lambda_breaker());
                ASSERT_EQ(fast.first_hit.has_value(), naive.first_break.has_value());
                if (naive.first_break) {
                    EXPECT_EQ(std::vector<std::uint32_t>(fast.first_hit->begin(), fast.first_hit->end()),
                              *naive.first_break);
                } else {
                    EXPECT_EQ(fast.examined, naive.admissible);
                }
            }
        }
    }
}

TEST(Enumeration, CountsAllAdmissibleSubsets) {
    const auto q4 = build_hypercube(4);
    for (unsigned r : {0u, 2u, 3u}) {
        std::uint64_t expected = 0;
        oracle::for_each_combination(q4.edge_count(), 3, [&](const std::vector<std::uint32_t>& ids) {
            MaskedGraph view(q4.graph());
            for (auto e : ids) view.remove(e);
            expected += min_degree(view) >= r ? 1 : 0;
        });
        auto never = [] { return [](const MaskedGraph&, std::span<const EdgeId>) { return false; }; };
        EXPECT_EQ(find_first_combination(q4.graph(), 3, r, 1, never).examined, expected);
        EXPECT_EQ(find_first_combination(q4.graph(), 3, r, 4, never).examined, expected);
    }
    auto never = [] { return [](const MaskedGraph&, std::span<const EdgeId>) { return false; }; };
    EXPECT_EQ(find_first_combination(q4.graph(), 0, 0, 1, never).examined, 1u);
    EXPECT_EQ(find_first_combination(q4.graph(), 33, 0, 1, never).examined, 0u);
}

TEST(VerifyLowerBound, SmallNetworksHold) {
    auto q3 = verify_lower_bound(build_hypercube(3), 1, std::nullopt);
    EXPECT_EQ(q3.verdict, Verdict::holds);
    EXPECT_EQ(q3.m, 1);

    auto cq3 = verify_lower_bound(build_crossed_cube_3(), 1, std::nullopt);
    EXPECT_EQ(cq3.verdict, Verdict::holds);

    auto q4 = verify_lower_bound(build_hypercube(4), 1, std::nullopt);
    EXPECT_EQ(q4.verdict, Verdict::holds);
    EXPECT_EQ(q4.m, 2);
}

TEST(VerifyLowerBound, OneBeyondTheValueIsRefuted) {
    auto res = verify_lower_bound(build_hypercube(3), 1, 2);
    EXPECT_EQ(res.verdict, Verdict::refuted);
    ASSERT_TRUE(res.breaking);
    EXPECT_EQ(res.breaking->faults.size(), 2u);
    EXPECT_TRUE(admissible(build_hypercube(3), res.breaking->faults, 1));
    EXPECT_FALSE(is_sm_lambda(delete_edges(build_hypercube(3).graph(), res.breaking->faults)).verdict);
}

TEST(VerifyLowerBound, DeterministicAcrossWorkerCounts) {
    const auto g = build_hypercube(4);
    const auto one = verify_lower_bound(g, 2, std::nullopt, with_workers(1));
    const auto three = verify_lower_bound(g, 2, std::nullopt, with_workers(3));
    EXPECT_EQ(one.verdict, Verdict::holds);
    EXPECT_EQ(one.sets_examined, three.sets_examined);

    const auto a = sm_lambda_r_exhaustive(g, 1, with_workers(1));
    const auto b = sm_lambda_r_exhaustive(g, 1, with_workers(4));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.sets_examined, b.sets_examined);
    ASSERT_TRUE(a.breaking && b.breaking);
    EXPECT_EQ(a.breaking->faults, b.breaking->faults);
}

TEST(VerifyLowerBound, SampledModeIsSeeded) {
    SearchOptions opt;
    opt.mode = SearchMode::sampled;
    opt.samples = 200;
    EXPECT_THROW(verify_lower_bound(build_hypercube(5), 2, std::nullopt, opt), std::invalid_argument);
    opt.seed = 5;
    const auto a = verify_lower_bound(build_hypercube(5), 2, std::nullopt, opt);
    const auto b = verify_lower_bound(build_hypercube(5), 2, std::nullopt, opt);
    EXPECT_EQ(a.verdict, Verdict::holds);
    EXPECT_EQ(a.sets_examined, 200u);
    EXPECT_EQ(a.draws, b.draws);
    EXPECT_EQ(a.note, "sampled evidence, not a proof");
}

TEST(VerifyLowerBound, RangeAndReferenceOnly) {
    const auto q4 = build_hypercube(4);
    EXPECT_THROW(verify_lower_bound(q4, 3, std::nullopt), std::invalid_argument);
    EXPECT_THROW(verify_lower_bound(q4, 3, 1), std::invalid_argument);
    const auto r0 = verify_lower_bound(q4, 0, std::nullopt);
    EXPECT_EQ(r0.verdict, Verdict::reference_only);
    EXPECT_EQ(r0.m, 2);
    EXPECT_EQ(r0.sets_examined, 0u);
    // With an explicit m, r = 0 is searched like any other level.
    EXPECT_EQ(verify_lower_bound(q4, 0, 1).verdict, Verdict::holds);
    SearchOptions small;
    small.budget = 100;
    EXPECT_THROW(verify_lower_bound(build_hypercube(5), 2, 12, small), BudgetExceeded);
}

TEST(FindBreaking, WitnessSizes) {
    const std::tuple<unsigned, unsigned, std::size_t> cases[] = {{3, 1, 2}, {4, 1, 3}, {4, 2, 5}};
    for (auto [n, r, size] : cases) {
        const auto g = build_hypercube(n);
        const auto res = find_breaking_fault_set(g, r, std::nullopt);
        EXPECT_EQ(res.verdict, Verdict::refuted);
        EXPECT_EQ(res.source, "witness");
        ASSERT_TRUE(res.breaking);
        EXPECT_EQ(res.breaking->faults.size(), size);
        EXPECT_TRUE(admissible(g, res.breaking->faults, r));
        EXPECT_FALSE(is_sm_lambda(delete_edges(g.graph(), res.breaking->faults)).verdict);
    }
}

TEST(FindBreaking, BelowWitnessSizeFindsNothingOnSmallCubes) {
    const auto res = find_breaking_fault_set(build_hypercube(4), 2, 4);
    EXPECT_EQ(res.verdict, Verdict::not_found);
    EXPECT_EQ(res.source, "enumeration");
    SearchOptions tight;
    tight.budget = 10;
    const auto starved = find_breaking_fault_set(build_hypercube(5), 2, 4, tight);
    EXPECT_EQ(starved.verdict, Verdict::not_found);
    EXPECT_FALSE(starved.note.empty());
}

TEST(Exhaustive, SmallValues) {
    const auto q3 = sm_lambda_r_exhaustive(build_hypercube(3), 1);
    EXPECT_EQ(q3.value, 1);
    EXPECT_TRUE(q3.in_theorem_scope);
    ASSERT_TRUE(q3.breaking);
    EXPECT_EQ(q3.breaking->faults.size(), 2u);

    const auto cq3 = sm_lambda_r_exhaustive(build_crossed_cube_3(), 1);
    EXPECT_EQ(cq3.value, 1);

    const auto q4 = sm_lambda_r_exhaustive(build_hypercube(4), 2);
    EXPECT_EQ(q4.value, 4);

    const auto c4 = sm_lambda_r_exhaustive(build_hypercube(2), 0);
    EXPECT_FALSE(c4.in_theorem_scope);
    EXPECT_EQ(c4.value, 0);
}

TEST(LargeComponent, ExhaustiveQ3) {
    const auto res = verify_lemma_2_7(build_hypercube(3), 1);
    EXPECT_TRUE(res.pass);
    EXPECT_EQ(res.max_faults, 3);
    EXPECT_EQ(res.threshold, 7u);
    EXPECT_EQ(res.sets_examined, 1u + 12u + 66u + 220u);
    EXPECT_EQ(res.smallest_largest_component, 7u);
}

TEST(LargeComponent, OneMoreFaultCanIsolateTheSubcube) {
    // Cutting all four outside edges of an edge subcube in Q_3 leaves 6 < 7.
    const auto q3 = build_hypercube(3);
    const auto view = delete_edges(q3.graph(), EdgeSet({{0, 2}, {0, 4}, {1, 3}, {1, 5}}));
    EXPECT_EQ(largest_component_size(view), 6u);
}

TEST(LargeComponent, SampledRequiresSeed) {
    SearchOptions opt;
    opt.mode = SearchMode::sampled;
    opt.samples = 300;
    EXPECT_THROW(verify_lemma_2_7(build_hypercube(5), 2, opt), std::invalid_argument);
    opt.seed = 3;
    const auto res = verify_lemma_2_7(build_random_hl(5, 4), 2, opt);
    EXPECT_TRUE(res.pass);
    EXPECT_EQ(res.sets_examined, 300u);
    EXPECT_GE(res.smallest_largest_component, res.threshold);
}

TEST(Deadline, ExpiredDeadlineAborts) {
    const Deadline past{Clock::now() - std::chrono::seconds(1)};
    EXPECT_TRUE(past.passed());
    EXPECT_FALSE(Deadline::after(std::chrono::seconds(0)).passed());
    EXPECT_THROW(find_first_combination(build_hypercube(4).graph(), 2, 0, 1, detail::sm_lambda_breaker(), past),
                 BudgetExceeded);
}
