#ifndef HLNET_ACCEPTANCE_HPP
#define HLNET_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "fault.hpp"
#include "hl_network.hpp"
#include "isomorphism.hpp"
#include "menger.hpp"
#include "random.hpp"

namespace hlnet::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Settings {
    unsigned workers = 1;
    std::uint64_t random_hl4_seed = 1;
    std::uint64_t witness_seed = 1;
    std::uint64_t lemma27_seed = 27;
    std::uint64_t lemma27_samples = 10'000;
    std::uint64_t menger_seed = 2024;
    std::size_t menger_instances = 200;
};

namespace detail {

inline CriterionResult timed(int id, std::string title, const std::function<bool(std::ostringstream&)>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.pass = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.detail = detail.str();
    return r;
}

}  // namespace detail

/// sm_λ^1 = 1 on Q_3 and CQ_3, exhaustively.
inline CriterionResult exhaustive_n3(const Settings& s) {
    return detail::timed(1, "exhaustive sm_lambda^1 = 1 on Q_3 and CQ_3", [&](std::ostringstream& d) {
        SearchOptions opt;
        opt.workers = s.workers;
        bool ok = true;
        for (auto [name, g] : {std::pair{"Q_3", build_hypercube(3)}, std::pair{"CQ_3", build_crossed_cube_3()}}) {
            auto res = sm_lambda_r_exhaustive(g, 1, opt);
            d << name << " r=1: " << res.value << " (expected " << claimed_sm_lambda(3, 1) << ", "
              << res.sets_examined << " sets); ";
            ok = ok && res.value == claimed_sm_lambda(3, 1);
        }
        return ok;
    });
}

/// sm_λ^1 = 2 and sm_λ^2 = 4 on Q_4 and a seeded random HL_4, exhaustively.
inline CriterionResult exhaustive_n4(const Settings& s) {
    return detail::timed(2, "exhaustive sm_lambda^r on Q_4 and random HL_4 (r = 1, 2)", [&](std::ostringstream& d) {
        SearchOptions opt;
        opt.workers = s.workers;
        bool ok = true;
        const std::pair<std::string, HLNetwork> graphs[] = {
            {"Q_4", build_hypercube(4)},
            {"random:4:" + std::to_string(s.random_hl4_seed), build_random_hl(4, s.random_hl4_seed)}};
        for (const auto& [name, g] : graphs) {
            for (unsigned r : {1u, 2u}) {
                auto res = sm_lambda_r_exhaustive(g, r, opt);
                d << name << " r=" << r << ": " << res.value << " (expected " << claimed_sm_lambda(4, r) << ", "
                  << res.sets_examined << " sets); ";
                ok = ok && res.value == claimed_sm_lambda(4, r);
            }
        }
        return ok;
    });
}

/// The extremal witness on Q_n and random HL_n for 3 <= n <= 10, 1 <= r <= n-2.
inline CriterionResult witness_sweep(const Settings& s) {
    return detail::timed(3, "witness certification, 3 <= n <= 10", [&](std::ostringstream& d) {
        std::size_t checked = 0;
        for (unsigned n = 3; n <= 10; ++n) {
            const HLNetwork graphs[] = {build_hypercube(n), build_random_hl(n, s.witness_seed)};
            for (const auto& g : graphs) {
                for (unsigned r = 1; r + 2 <= n; ++r) {
                    auto w = extremal_witness(g, r);
                    const auto residual = delete_edges(g.graph(), w.faults);
                    const auto flow = max_edge_disjoint_paths(residual, w.u, w.v);
                    const bool ok = static_cast<std::int64_t>(w.faults.size()) == witness_fault_count(n, r) &&
                                    min_degree(residual) >= r && flow.value == n - 1 &&
                                    residual.degree(w.u) == n && residual.degree(w.v) == n;
                    ++checked;
                    if (!ok) {
                        d << "failed at n=" << n << " r=" << r << " |F|=" << w.faults.size()
                          << " flow=" << flow.value;
                        return false;
                    }
                }
            }
        }
        d << checked << " (graph, r) witnesses certified, upper bound only";
        return true;
    });
}

/// Brute-force maximum induced edges equals the closed form for every k.
inline CriterionResult e_max_oracle(const Settings& s) {
    return detail::timed(4, "brute-force e_g equals the closed form on n <= 4 graphs", [&](std::ostringstream& d) {
        const std::pair<std::string, HLNetwork> graphs[] = {
            {"Q_3", build_hypercube(3)},
            {"CQ_3", build_crossed_cube_3()},
            {"Q_4", build_hypercube(4)},
            {"random:4:" + std::to_string(s.random_hl4_seed), build_random_hl(4, s.random_hl4_seed)}};
        for (const auto& [name, g] : graphs) {
            for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
                const auto brute = brute_force_e_max(g, k);
                if (brute != e_max(static_cast<std::int64_t>(k))) {
                    d << name << " k=" << k << ": brute " << brute << " vs formula " << e_max(static_cast<std::int64_t>(k));
                    return false;
                }
            }
            d << name << " ok; ";
        }
        return true;
    });
}

inline CriterionResult lemma_sweeps(const Settings&) {
    return detail::timed(5, "f(g) sweeps (>= n, (n-2)g - 2e_g >= 0, >= f(2^r)) for 3 <= n <= 20",
                         [&](std::ostringstream& d) {
                             std::uint64_t checked = 0;
                             for (unsigned n = 3; n <= 20; ++n) {
                                 for (const auto& v : {sweep_lemma_2_4(n), sweep_lemma_2_5(n), sweep_lemma_2_6(n)}) {
                                     checked += v.checked;
                                     if (!v.pass) {
                                         d << "lemma " << v.lemma << " fails at n=" << n;
                                         return false;
                                     }
                                 }
                             }
                             d << checked << " inequalities checked";
                             return true;
                         });
}

inline CriterionResult lemma_2_7(const Settings& s) {
    return detail::timed(6, "large component after <= 2^r(n-r)-1 faults", [&](std::ostringstream& d) {
        SearchOptions ex;
        ex.workers = s.workers;
        bool ok = true;
        auto graphs_for = [&](unsigned n) {
            return std::vector<std::pair<std::string, HLNetwork>>{
                {"Q_" + std::to_string(n), build_hypercube(n)},
                {"random:" + std::to_string(n) + ":" + std::to_string(s.random_hl4_seed),
                 build_random_hl(n, s.random_hl4_seed)}};
        };
        for (auto [n, r] : {std::pair{3u, 0u}, {3u, 1u}, {4u, 0u}, {4u, 1u}}) {
            for (const auto& [name, g] : graphs_for(n)) {
                auto res = verify_lemma_2_7(g, r, ex);
                ok = ok && res.pass;
                d << name << " r=" << r << " exhaustive " << res.sets_examined << " sets, min largest "
                  << res.smallest_largest_component << "/" << res.threshold << "; ";
            }
        }
        SearchOptions sm;
        sm.mode = SearchMode::sampled;
        sm.samples = s.lemma27_samples;
        sm.seed = s.lemma27_seed;
        for (unsigned r : {1u, 2u, 3u}) {
            for (const auto& [name, g] : graphs_for(5)) {
                auto res = verify_lemma_2_7(g, r, sm);
                ok = ok && res.pass && res.sets_examined == s.lemma27_samples;
                d << name << " r=" << r << " sampled " << res.sets_examined << " sets, min largest "
                  << res.smallest_largest_component << "/" << res.threshold << "; ";
            }
        }
        return ok;
    });
}

/// Random (graph, fault set, pair) instances with n <= 5: Menger duality,
/// certified disjoint paths, degree bound and symmetry.
inline CriterionResult menger_duality(const Settings& s) {
    return detail::timed(7, "Menger duality on random faulty instances (n <= 5)", [&](std::ostringstream& d) {
        Rng rng(s.menger_seed);
        for (std::size_t i = 0; i < s.menger_instances; ++i) {
            const auto n = static_cast<unsigned>(2 + uniform_below(rng, 4));
            const HLNetwork g = build_random_hl(n, rng());
            const auto e = static_cast<std::uint32_t>(g.edge_count());
            const auto k = static_cast<std::uint32_t>(uniform_below(rng, e / 3 + 1));
            const auto faults = sample_subset(e, k, rng);
            MaskedGraph view(g.graph());
            for (EdgeId id : faults) {
                view.remove(id);
            }
            const auto u = static_cast<Vertex>(uniform_below(rng, g.vertex_count()));
            auto v = static_cast<Vertex>(uniform_below(rng, g.vertex_count() - 1));
            v += v >= u ? 1 : 0;
            const auto fwd = max_edge_disjoint_paths(view, u, v);
            const auto back = max_edge_disjoint_paths(view, v, u);
            std::string why;
            const bool ok = certify_flow(view, fwd, &why) && certify_flow(view, back, &why) &&
                            fwd.value <= std::min(view.degree(u), view.degree(v)) && fwd.value == back.value;
            if (!ok) {
                d << "instance " << i << " (n=" << n << ", |F|=" << k << ", u=" << u << ", v=" << v
                  << ") failed: " << why;
                return false;
            }
        }
        d << s.menger_instances << " instances certified";
        return true;
    });
}

/// The 24 matchings of C_4 ⊕ C_4 give exactly two isomorphism classes, one of them Q_3.
inline CriterionResult hl3_classification(const Settings&) {
    return detail::timed(8, "C_4 + C_4 over 24 matchings gives exactly {Q_3, CQ_3}", [&](std::ostringstream& d) {
        auto all = all_c4_compositions();
        std::vector<const Graph*> graphs;
        for (const auto& [sigma, g] : all) {
            graphs.push_back(&g.graph());
        }
        std::size_t classes = 0;
        auto cls = isomorphism_classes(graphs, &classes);
        const HLNetwork q3 = build_hypercube(3);
        std::size_t q3_class_hits = 0;
        for (std::size_t c = 0; c < classes; ++c) {
            auto rep = std::find(cls.begin(), cls.end(), c) - cls.begin();
            q3_class_hits += are_isomorphic(*graphs[static_cast<std::size_t>(rep)], q3.graph()) ? 1 : 0;
        }
        const auto in_q3 = std::count_if(graphs.begin(), graphs.end(),
                                         [&](const Graph* g) { return are_isomorphic(*g, q3.graph()); });
        d << classes << " classes; " << in_q3 << " of 24 matchings give Q_3";
        return classes == 2 && q3_class_hits == 1;
    });
}

inline std::vector<std::function<CriterionResult(const Settings&)>> all_criteria() {
    return {exhaustive_n3, exhaustive_n4, witness_sweep, e_max_oracle,
            lemma_sweeps,  lemma_2_7,     menger_duality, hl3_classification};
}

inline constexpr const char* kScopeNote =
    "large-n exact values are not reproduced: criteria 3 and 6 give witness-certified upper bounds and sampled "
    "lower-bound evidence only";

}  // namespace hlnet::acceptance

#endif  // HLNET_ACCEPTANCE_HPP
