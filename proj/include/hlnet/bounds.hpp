#ifndef HLNET_BOUNDS_HPP
#define HLNET_BOUNDS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hlnet {

/// Exponents of the set bits of g, highest first: g = Σ 2^{t_i}, t_0 > t_1 > ...
struct BinaryDecomposition {
    std::int64_t g = 0;
    std::vector<unsigned> exponents;
};

inline BinaryDecomposition decompose(std::int64_t g) {
    if (g < 1) {
        throw std::invalid_argument("decompose: g must be positive, got " + std::to_string(g));
    }
    BinaryDecomposition d{g, {}};
    for (auto rest = static_cast<std::uint64_t>(g); rest != 0;) {
        unsigned t = static_cast<unsigned>(std::bit_width(rest)) - 1;
        d.exponents.push_back(t);
        rest -= std::uint64_t{1} << t;
    }
    return d;
}

/// e_g = Σ t_i 2^{t_i - 1} + Σ i 2^{t_i}: the most edges any g vertices of an
/// HL-network induce. t_i 2^{t_i - 1} is taken as 0 when t_i = 0.
inline std::int64_t e_max(std::int64_t g) {
    const auto d = decompose(g);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        const unsigned t = d.exponents[i];
        if (t > 0) {
            sum += static_cast<std::int64_t>(t) << (t - 1);
        }
        sum += static_cast<std::int64_t>(i) << t;
    }
    return sum;
}

/// f(g) = n g - 2 e_g.
inline std::int64_t f(unsigned n, std::int64_t g) {
    if (n < 1) {
        throw std::invalid_argument("f: n must be at least 1");
    }
    return static_cast<std::int64_t>(n) * g - 2 * e_max(g);
}

struct BoundReport {
    unsigned n = 0;
    std::int64_t g = 0;
    std::int64_t e_g = 0;
    std::int64_t f_g = 0;
    std::optional<std::int64_t> oracle_e_g;
    bool pass = true;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

/// Exact maximum number of edges induced by k vertices of `g`, by enumerating
/// k-subsets in lexicographic order. A branch is cut when the edges chosen so
/// far plus the most the remaining picks could add cannot beat the best found.
template <GraphView G>
std::int64_t brute_force_e_max(const G& g, std::size_t k, std::uint64_t budget = kDefaultSubsetBudget) {
    const std::size_t n = g.vertex_count();
    if (k < 1 || k > n) {
        throw std::invalid_argument("brute_force_e_max: k must be in [1, " + std::to_string(n) + "]");
    }
    if (binomial(n, k) > budget) {
        throw BudgetExceeded("brute_force_e_max: C(" + std::to_string(n) + "," + std::to_string(k) +
                             ") exceeds the subset budget of " + std::to_string(budget));
    }
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, g.degree(v));
    }

    std::vector<std::uint8_t> chosen(n, 0);
    std::int64_t best = -1;

    // Most edges that picks number `picked`..k-1 can add: pick i meets at most
    // min(max_deg, i) earlier picks.
    auto cap = [&](std::size_t picked) {
        std::int64_t c = 0;
        for (std::size_t i = picked; i < k; ++i) {
            c += static_cast<std::int64_t>(std::min(max_deg, i));
        }
        return c;
    };

    auto recurse = [&](auto&& self, Vertex next, std::size_t picked, std::int64_t edges) -> void {
        if (picked == k) {
            best = std::max(best, edges);
            return;
        }
        if (edges + cap(picked) <= best) {
            return;
        }
        for (Vertex v = next; v + (k - picked) <= n; ++v) {
            std::int64_t added = 0;
            g.for_each_incidence(v, [&](Vertex w, EdgeId) { added += chosen[w]; });
            chosen[v] = 1;
            self(self, v + 1, picked + 1, edges + added);
            chosen[v] = 0;
        }
    };
    recurse(recurse, 0, 0, 0);
    return best;
}

struct SweepVerdict {
    std::string lemma;
    unsigned n = 0;
    bool pass = true;
    std::uint64_t checked = 0;
    /// Offending g; the f(g) >= f(2^r) sweep reports (r, g) pairs instead.
    std::vector<std::int64_t> violations;
    std::vector<std::pair<unsigned, std::int64_t>> violating_r_g;
    std::int64_t min_value = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> argmin;
};

namespace detail {

inline void track_min(SweepVerdict& v, std::int64_t value, std::int64_t g) {
    if (value < v.min_value) {
        v.min_value = value;
        v.argmin.assign(1, g);
    } else if (value == v.min_value) {
        v.argmin.push_back(g);
    }
}

inline void check_sweep_dimension(unsigned n) {
    if (n < 1 || n > kMaxDimension) {
        throw std::invalid_argument("sweep: n must be in [1, " + std::to_string(kMaxDimension) + "]");
    }
}

}  // namespace detail

/// f(g) >= n for every 1 <= g <= 2^n - 1.
inline SweepVerdict sweep_lemma_2_4(unsigned n) {
    detail::check_sweep_dimension(n);
    SweepVerdict v;
    v.lemma = "2.4";
    v.n = n;
    const std::int64_t top = (std::int64_t{1} << n) - 1;
    for (std::int64_t g = 1; g <= top; ++g) {
        const auto value = f(n, g);
        ++v.checked;
        detail::track_min(v, value, g);
        if (value < static_cast<std::int64_t>(n)) {
            v.pass = false;
            v.violations.push_back(g);
        }
    }
    return v;
}

/// (n - 2) g - 2 e_g >= 0 for every 1 <= g <= 2^{n-2}. Vacuous for n = 1.
inline SweepVerdict sweep_lemma_2_5(unsigned n) {
    detail::check_sweep_dimension(n);
    SweepVerdict v;
    v.lemma = "2.5";
    v.n = n;
    if (n < 2) {
        return v;
    }
    const std::int64_t top = std::int64_t{1} << (n - 2);
    for (std::int64_t g = 1; g <= top; ++g) {
        const auto value = static_cast<std::int64_t>(n - 2) * g - 2 * e_max(g);
        ++v.checked;
        detail::track_min(v, value, g);
        if (value < 0) {
            v.pass = false;
            v.violations.push_back(g);
        }
    }
    return v;
}

/// f(g) >= f(2^r) for every 0 <= r <= n-1 and 2^r <= g <= 2^{n-1}.
inline SweepVerdict sweep_lemma_2_6(unsigned n) {
    detail::check_sweep_dimension(n);
    SweepVerdict v;
    v.lemma = "2.6";
    v.n = n;
    const std::int64_t top = std::int64_t{1} << (n - 1);
    std::vector<std::int64_t> fv(static_cast<std::size_t>(top) + 1, 0);
    for (std::int64_t g = 1; g <= top; ++g) {
        fv[static_cast<std::size_t>(g)] = f(n, g);
    }
    for (unsigned r = 0; r <= n - 1; ++r) {
        const std::int64_t base = std::int64_t{1} << r;
        const std::int64_t floor_value = fv[static_cast<std::size_t>(base)];
        for (std::int64_t g = base; g <= top; ++g) {
            const auto margin = fv[static_cast<std::size_t>(g)] - floor_value;
            ++v.checked;
            v.min_value = std::min(v.min_value, margin);
            if (margin < 0) {
                v.pass = false;
                v.violating_r_g.emplace_back(r, g);
            }
        }
    }
    return v;
}

}  // namespace hlnet

#endif  // HLNET_BOUNDS_HPP
