#ifndef HLNET_FAULT_HPP
#define HLNET_FAULT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "hl_network.hpp"
#include "menger.hpp"
#include "random.hpp"

namespace hlnet {

/// 2^r (n - r) - n.
inline std::int64_t claimed_sm_lambda(unsigned n, unsigned r) {
    return (std::int64_t{1} << r) * (static_cast<std::int64_t>(n) - r) - static_cast<std::int64_t>(n);
}

/// Published value of sm_λ^0 for HL-networks with n >= 4; a reference constant only.
inline std::int64_t reference_sm_lambda_r0(unsigned n) { return static_cast<std::int64_t>(n) - 2; }

/// Size of the extremal fault set, 2^r (n - r) - n + 1.
inline std::int64_t witness_fault_count(unsigned n, unsigned r) { return claimed_sm_lambda(n, r) + 1; }

/// True iff every vertex of G - F keeps at least r incident edges.
template <GraphView G>
bool admissible(const G& g, const EdgeSet& faults, unsigned r) {
    return min_degree(delete_edges(g.host(), faults)) >= r;
}

struct ConditionalFaultModel {
    unsigned r = 0;
    std::int64_t m = 0;

    bool admits(const Graph& g, const EdgeSet& faults) const {
        return static_cast<std::int64_t>(faults.size()) <= m && admissible(g, faults, r);
    }
};

enum class SearchMode { exhaustive, sampled };
enum class Verdict { holds, refuted, not_found, reference_only };

inline const char* to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "sampled"; }

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::refuted: return "refuted";
        case Verdict::not_found: return "not found";
        case Verdict::reference_only: return "reference only";
    }
    return "?";
}

using Clock = std::chrono::steady_clock;

/// Wall-clock limit for a search; checked between enumeration partitions and samples.
struct Deadline {
    std::optional<Clock::time_point> at;

    static Deadline after(std::chrono::seconds limit) {
        if (limit.count() <= 0) {
            return {};
        }
        return {Clock::now() + limit};
    }
    bool passed() const { return at && Clock::now() >= *at; }
};

struct SearchOptions {
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t samples = 10'000;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::uint64_t budget = kDefaultSubsetBudget;
    std::chrono::seconds wall_limit{600};
};

struct BreakingExample {
    EdgeSet faults;
    SmLambdaCounterexample pair;
};

struct SearchResult {
    SearchMode mode = SearchMode::exhaustive;
    unsigned r = 0;
    std::int64_t m = 0;
    Verdict verdict = Verdict::holds;
    std::optional<BreakingExample> breaking;
    std::uint64_t sets_examined = 0;
    std::uint64_t draws = 0;
    bool starved = false;
    std::string source;
    std::string note;
};

// ---------------------------------------------------------------------------
// Fault-set enumeration

struct EnumerationOutcome {
    std::optional<std::vector<EdgeId>> first_hit;
    std::uint64_t examined = 0;
};

/// Visits the k-subsets of host edge ids in lexicographic order and returns
/// the first one on which the predicate reports a hit.
///
/// A prefix whose removal drops some vertex below `min_residual_degree` is
/// skipped together with all its extensions. Work is split by the first edge
/// index; partitions are claimed dynamically, and the result (including the
/// examined count) depends only on the input, never on the worker count.
///
/// `make_predicate()` is called once per worker and must return a callable
/// `bool(const MaskedGraph&, std::span<const EdgeId>)`.
template <typename MakePredicate>
EnumerationOutcome find_first_combination(const Graph& host, std::size_t k, unsigned min_residual_degree,
                                          unsigned workers, MakePredicate make_predicate,
                                          const Deadline& deadline = {}) {
    EnumerationOutcome outcome;
    const std::size_t edge_count = host.edge_count();
    if (k > edge_count) {
        return outcome;
    }
    if (k == 0) {
        MaskedGraph view(host);
        auto pred = make_predicate();
        if (min_degree(view) >= min_residual_degree) {
            outcome.examined = 1;
            if (pred(view, std::span<const EdgeId>{})) {
                outcome.first_hit.emplace();
            }
        }
        return outcome;
    }

    const std::size_t partitions = edge_count - k + 1;
    std::vector<std::uint64_t> examined(partitions, 0);
    std::vector<std::optional<std::vector<EdgeId>>> hits(partitions);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{partitions};
    std::atomic<bool> timed_out{false};

    auto worker = [&] {
        auto pred = make_predicate();
        MaskedGraph view(host);
        std::vector<EdgeId> chosen;
        chosen.reserve(k);

        auto take = [&](EdgeId e) {
            view.remove(e);
            const Edge& ed = host.edge(e);
            return view.degree(ed.u) >= min_residual_degree && view.degree(ed.v) >= min_residual_degree;
        };

        for (std::size_t first; (first = next.fetch_add(1)) < partitions;) {
            if (first > best.load()) {
                continue;
            }
            if (deadline.passed()) {
                timed_out = true;
                break;
            }
            std::uint64_t count = 0;
            bool found = false;
            auto recurse = [&](auto&& self, std::size_t from) -> void {
                if (chosen.size() == k) {
                    ++count;
                    found = pred(static_cast<const MaskedGraph&>(view), std::span<const EdgeId>(chosen));
                    return;
                }
                const std::size_t last = edge_count - (k - chosen.size());
                for (std::size_t e = from; e <= last && !found; ++e) {
                    const auto id = static_cast<EdgeId>(e);
                    if (take(id)) {
                        chosen.push_back(id);
                        self(self, e + 1);
                        if (!found) {
                            chosen.pop_back();
                        }
                    }
                    view.restore(id);
                }
            };
            const auto id = static_cast<EdgeId>(first);
            if (take(id)) {
                chosen.push_back(id);
                recurse(recurse, first + 1);
            }
            view.restore(id);
            examined[first] = count;
            if (found) {
                hits[first] = chosen;
                for (std::size_t cur = best.load(); first < cur && !best.compare_exchange_weak(cur, first);) {
                }
            }
            chosen.clear();
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    if (timed_out) {
        throw BudgetExceeded("wall-clock limit reached during fault-set enumeration");
    }
    const std::size_t winner = best.load();
    for (std::size_t i = 0; i < partitions && i <= winner; ++i) {
        outcome.examined += examined[i];
    }
    if (winner < partitions) {
        outcome.first_hit = std::move(hits[winner]);
    }
    return outcome;
}

/// Σ_{k <= m} C(E, k), saturating.
inline std::uint64_t subsets_up_to(std::uint64_t edges, std::int64_t m) {
    std::uint64_t total = 0;
    for (std::int64_t k = 0; k <= m; ++k) {
        const auto c = binomial(edges, static_cast<std::uint64_t>(k));
        total = (c > std::numeric_limits<std::uint64_t>::max() - total) ? std::numeric_limits<std::uint64_t>::max()
                                                                       : total + c;
    }
    return total;
}

namespace detail {

inline void check_residual_bound(const HLNetwork& g, unsigned r) {
    if (g.dimension() < 2 || r + 1 >= g.dimension()) {
        throw std::invalid_argument("r = " + std::to_string(r) + " is outside 0 <= r <= n-2 for n = " +
                                    std::to_string(g.dimension()));
    }
}

inline void check_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what) {
    if (needed > budget) {
        throw BudgetExceeded(what + ": " + std::to_string(needed) + " subsets exceed the budget of " +
                             std::to_string(budget));
    }
}

inline auto sm_lambda_breaker() {
    return [] {
        return [checker = SmLambdaChecker{}](const MaskedGraph& view, std::span<const EdgeId>) mutable {
            return !checker.holds(view);
        };
    };
}

inline BreakingExample describe_break(const Graph& host, std::span<const EdgeId> ids) {
    MaskedGraph view(host);
    for (EdgeId e : ids) {
        view.remove(e);
    }
    auto report = is_sm_lambda(view);
    if (report.verdict || !report.counterexample) {
        throw std::logic_error("fault set reported as breaking keeps SM-lambda");
    }
    return {edges_from_ids(host, ids), *report.counterexample};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Extremal witness

struct ExtremalWitness {
    unsigned n = 0;
    unsigned r = 0;
    SubcubeHandle subcube;
    Vertex u = 0;
    std::vector<Vertex> subcube_neighbors;  // u_1..u_r
    EdgeSet kept;                           // e_1..e_{r-1}
    EdgeSet faults;
    Vertex v = 0;
    std::size_t flow_value = 0;
    FlowResult flow;
};

/// Fault set that keeps δ >= r yet leaves two degree-n vertices with only
/// n - 1 edge-disjoint paths: every edge from the r-subcube minus u to the
/// rest of the graph, except one outside edge at each of u_1..u_{r-1}.
///
/// Ties are broken by ascending id. All invariants are checked before
/// returning; a failure throws std::logic_error.
inline ExtremalWitness extremal_witness(const HLNetwork& g, unsigned r) {
    const unsigned n = g.dimension();
    if (n < 3 || r < 1 || r > n - 2) {
        throw std::invalid_argument("extremal_witness: need n >= 3 and 1 <= r <= n-2 (n = " + std::to_string(n) +
                                    ", r = " + std::to_string(r) + ")");
    }
    const Graph& host = g.graph();
    ExtremalWitness w;
    w.n = n;
    w.r = r;
    w.subcube = subcube(g, r);
    const auto& sub = w.subcube;
    w.u = sub.vertices.front();

    for (const Incidence& inc : host.incidences(w.u)) {
        if (sub.contains(inc.neighbor)) {
            w.subcube_neighbors.push_back(inc.neighbor);
        }
    }

    std::vector<EdgeId> kept_ids;
    for (unsigned i = 0; i + 1 < r; ++i) {
        const Vertex ui = w.subcube_neighbors[i];
        for (const Incidence& inc : host.incidences(ui)) {
            if (!sub.contains(inc.neighbor)) {
                kept_ids.push_back(inc.edge);
                break;
            }
        }
    }
    std::sort(kept_ids.begin(), kept_ids.end());
    w.kept = edges_from_ids(host, kept_ids);

    std::vector<Edge> faults;
    for (Vertex x : sub.vertices) {
        if (x == w.u) {
            continue;
        }
        for (const Incidence& inc : host.incidences(x)) {
            if (!sub.contains(inc.neighbor) && !std::binary_search(kept_ids.begin(), kept_ids.end(), inc.edge)) {
                faults.emplace_back(x, inc.neighbor);
            }
        }
    }
    w.faults = EdgeSet(std::move(faults));

    std::vector<std::uint8_t> near(g.vertex_count(), 0);
    for (Vertex x : sub.vertices) {
        near[x] = 1;
        for (const Incidence& inc : host.incidences(x)) {
            near[inc.neighbor] = 1;
        }
    }
    auto far = std::find(near.begin(), near.end(), 0);
    if (far == near.end()) {
        throw std::logic_error("extremal_witness: every vertex touches the subcube");
    }
    w.v = static_cast<Vertex>(far - near.begin());

    const MaskedGraph residual = delete_edges(host, w.faults);
    w.flow = max_edge_disjoint_paths(residual, w.u, w.v);
    w.flow_value = w.flow.value;

    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw std::logic_error(std::string("extremal_witness: ") + what);
        }
    };
    const auto expected = witness_fault_count(n, r);
    const auto alternate = ((std::int64_t{1} << r) - 1) * (n - r) - (static_cast<std::int64_t>(r) - 1);
    require(static_cast<std::int64_t>(w.faults.size()) == expected && expected == alternate, "fault count");
    require(min_degree(residual) >= r, "residual minimum degree below r");
    require(residual.degree(w.u) == n && residual.degree(w.v) == n, "u or v lost an edge");
    for (Vertex x : sub.vertices) {
        if (x == w.u) {
            continue;
        }
        const bool keeps_outside = std::find(w.subcube_neighbors.begin(), w.subcube_neighbors.begin() + (r - 1), x) !=
                                   w.subcube_neighbors.begin() + (r - 1);
        require(residual.degree(x) == (keeps_outside ? r + 1 : r), "subcube residual degree");
    }
    require(w.flow_value == n - 1, "u-v flow differs from n-1");
    require(certify_flow(residual, w.flow), "flow certificate");
    return w;
}

// ---------------------------------------------------------------------------
// Lower bound, breaking sets and exhaustive sm_λ^r

/// Searches admissible fault sets of size <= m for one that destroys SM-λ.
/// Exhaustive mode enumerates every set in (size, lexicographic) order;
/// sampled mode draws uniform m-subsets and rejects inadmissible ones.
/// `m` defaults to 2^r (n - r) - n.
inline SearchResult verify_lower_bound(const HLNetwork& g, unsigned r, std::optional<std::int64_t> m,
                                       const SearchOptions& options = {}) {
    detail::check_residual_bound(g, r);
    SearchResult result;
    result.mode = options.mode;
    result.r = r;
    if (!m && r == 0) {
        result.m = reference_sm_lambda_r0(g.dimension());
        result.verdict = Verdict::reference_only;
        result.note = "r = 0 is outside the proven range; m = n-2 is a reference value, not verified";
        return result;
    }
    result.m = m.value_or(claimed_sm_lambda(g.dimension(), r));
    if (result.m < 0) {
        throw std::invalid_argument("verify_lower_bound: m must be non-negative");
    }
    const Graph& host = g.graph();
    const auto deadline = Deadline::after(options.wall_limit);

    if (options.mode == SearchMode::exhaustive) {
        detail::check_budget(subsets_up_to(host.edge_count(), result.m), options.budget, "verify_lower_bound");
        result.source = "enumeration";
        for (std::int64_t k = 0; k <= result.m; ++k) {
            auto out = find_first_combination(host, static_cast<std::size_t>(k), r, options.workers,
                                              detail::sm_lambda_breaker(), deadline);
            result.sets_examined += out.examined;
            if (out.first_hit) {
                result.verdict = Verdict::refuted;
                result.breaking = detail::describe_break(host, *out.first_hit);
                return result;
            }
        }
        result.verdict = Verdict::holds;
        return result;
    }

    if (!options.seed) {
        throw std::invalid_argument("verify_lower_bound: sampled mode requires a seed");
    }
    result.source = "sampling";
    result.note = "sampled evidence, not a proof";
    Rng rng(*options.seed);
    const auto k = static_cast<std::uint32_t>(std::min<std::int64_t>(result.m, host.edge_count()));
    const std::uint64_t cap = 100 * options.samples;
    SmLambdaChecker checker;
    MaskedGraph view(host);
    while (result.sets_examined < options.samples && result.draws < cap) {
        if (deadline.passed()) {
            throw BudgetExceeded("wall-clock limit reached during sampling");
        }
        auto ids = sample_subset(static_cast<std::uint32_t>(host.edge_count()), k, rng);
        ++result.draws;
        for (EdgeId e : ids) {
            view.remove(e);
        }
        const bool ok = min_degree(view) >= r;
        const bool breaks = ok && !checker.holds(view);
        for (EdgeId e : ids) {
            view.restore(e);
        }
        if (!ok) {
            continue;
        }
        ++result.sets_examined;
        if (breaks) {
            result.verdict = Verdict::refuted;
            result.breaking = detail::describe_break(host, ids);
            return result;
        }
    }
    result.starved = result.sets_examined < options.samples;
    result.verdict = Verdict::holds;
    return result;
}

/// Looks for an admissible fault set of size <= m that breaks SM-λ: the
/// extremal witness first, then enumeration within budget, then sampling
/// when a seed is given. `m` defaults to 2^r (n - r) - n + 1. Never claims
/// that no breaking set exists.
inline SearchResult find_breaking_fault_set(const HLNetwork& g, unsigned r, std::optional<std::int64_t> m,
                                            const SearchOptions& options = {}) {
    detail::check_residual_bound(g, r);
    const unsigned n = g.dimension();
    SearchResult result;
    result.mode = options.mode;
    result.r = r;
    result.m = m.value_or(witness_fault_count(n, r));
    if (result.m < 0) {
        throw std::invalid_argument("find_breaking_fault_set: m must be non-negative");
    }

    if (n >= 3 && r >= 1 && witness_fault_count(n, r) <= result.m) {
        auto w = extremal_witness(g, r);
        result.verdict = Verdict::refuted;
        result.source = "witness";
        result.sets_examined = 1;
        result.breaking = BreakingExample{w.faults, {w.u, w.v, w.flow_value, n}};
        return result;
    }

    const Graph& host = g.graph();
    if (subsets_up_to(host.edge_count(), result.m) <= options.budget) {
        SearchOptions exhaustive = options;
        exhaustive.mode = SearchMode::exhaustive;
        auto r2 = verify_lower_bound(g, r, result.m, exhaustive);
        r2.verdict = r2.verdict == Verdict::refuted ? Verdict::refuted : Verdict::not_found;
        return r2;
    }
    if (options.seed) {
        SearchOptions sampled = options;
        sampled.mode = SearchMode::sampled;
        auto r2 = verify_lower_bound(g, r, result.m, sampled);
        r2.verdict = r2.verdict == Verdict::refuted ? Verdict::refuted : Verdict::not_found;
        return r2;
    }
    result.verdict = Verdict::not_found;
    result.note = "enumeration exceeds budget and no seed was given for sampling";
    return result;
}

struct ExhaustiveSmResult {
    unsigned r = 0;
    std::int64_t value = 0;
    std::optional<BreakingExample> breaking;
    std::uint64_t sets_examined = 0;
    bool in_theorem_scope = true;
};

/// Largest m such that every admissible fault set of size <= m keeps SM-λ,
/// found by enumerating sizes 0, 1, 2, ... until a breaking set appears.
inline ExhaustiveSmResult sm_lambda_r_exhaustive(const HLNetwork& g, unsigned r, const SearchOptions& options = {}) {
    detail::check_residual_bound(g, r);
    const Graph& host = g.graph();
    ExhaustiveSmResult result;
    result.r = r;
    result.in_theorem_scope = g.dimension() >= 3 && r >= 1;
    const auto deadline = Deadline::after(options.wall_limit);
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(host.edge_count()); ++k) {
        detail::check_budget(subsets_up_to(host.edge_count(), k), options.budget, "sm_lambda_r_exhaustive");
        auto out = find_first_combination(host, static_cast<std::size_t>(k), r, options.workers,
                                          detail::sm_lambda_breaker(), deadline);
        result.sets_examined += out.examined;
        if (out.first_hit) {
            result.value = k - 1;
            result.breaking = detail::describe_break(host, *out.first_hit);
            return result;
        }
    }
    result.value = static_cast<std::int64_t>(host.edge_count());
    return result;
}

// ---------------------------------------------------------------------------
// Large-component check

struct Lemma27Result {
    unsigned n = 0;
    unsigned r = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::int64_t max_faults = 0;
    std::size_t threshold = 0;
    bool pass = true;
    std::uint64_t sets_examined = 0;
    std::size_t smallest_largest_component = 0;
    std::optional<EdgeSet> violation;
};

/// For every (or every sampled) S with |S| <= 2^r (n - r) - 1, G - S keeps a
/// component of at least 2^n - 2^r + 1 vertices. No admissibility filter.
///
/// Sampled mode draws sets of the maximum size only: the largest component
/// can only shrink when edges are added to S, so smaller sets are dominated.
inline Lemma27Result verify_lemma_2_7(const HLNetwork& g, unsigned r, const SearchOptions& options = {}) {
    detail::check_residual_bound(g, r);
    const unsigned n = g.dimension();
    const Graph& host = g.graph();
    Lemma27Result result;
    result.n = n;
    result.r = r;
    result.mode = options.mode;
    result.max_faults = (std::int64_t{1} << r) * (n - r) - 1;
    result.threshold = (std::size_t{1} << n) - (std::size_t{1} << r) + 1;
    std::atomic<std::size_t> smallest{g.vertex_count()};
    const auto deadline = Deadline::after(options.wall_limit);

    auto observe = [&](const MaskedGraph& view) {
        const std::size_t largest = largest_component_size(view);
        for (std::size_t cur = smallest.load(); largest < cur && !smallest.compare_exchange_weak(cur, largest);) {
        }
        return largest < result.threshold;
    };

    if (options.mode == SearchMode::exhaustive) {
        detail::check_budget(subsets_up_to(host.edge_count(), result.max_faults), options.budget, "verify_lemma_2_7");
        for (std::int64_t k = 0; k <= result.max_faults; ++k) {
            auto out = find_first_combination(host, static_cast<std::size_t>(k), 0, options.workers, [&] {
                return [&](const MaskedGraph& view, std::span<const EdgeId>) { return observe(view); };
            }, deadline);
            result.sets_examined += out.examined;
            if (out.first_hit) {
                result.pass = false;
                result.violation = edges_from_ids(host, *out.first_hit);
                break;
            }
        }
    } else {
        if (!options.seed) {
            throw std::invalid_argument("verify_lemma_2_7: sampled mode requires a seed");
        }
        Rng rng(*options.seed);
        const auto k = static_cast<std::uint32_t>(std::min<std::int64_t>(result.max_faults, host.edge_count()));
        MaskedGraph view(host);
        for (std::uint64_t s = 0; s < options.samples; ++s) {
            if (deadline.passed()) {
                throw BudgetExceeded("wall-clock limit reached during sampling");
            }
            auto ids = sample_subset(static_cast<std::uint32_t>(host.edge_count()), k, rng);
            for (EdgeId e : ids) {
                view.remove(e);
            }
            const bool bad = observe(view);
            for (EdgeId e : ids) {
                view.restore(e);
            }
            ++result.sets_examined;
            if (bad) {
                result.pass = false;
                result.violation = edges_from_ids(host, ids);
                break;
            }
        }
    }
    result.smallest_largest_component = smallest.load();
    return result;
}

}  // namespace hlnet

#endif  // HLNET_FAULT_HPP
