#ifndef HLNET_RANDOM_HPP
#define HLNET_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace hlnet {

// mt19937_64 output is fully specified by the standard; the distributions are
// not, so the helpers below are written out to keep streams portable.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), rejection sampled.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = Rng::max() - (Rng::max() - bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

/// Fisher-Yates shuffle.
template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

/// Uniform k-subset of {0..n-1}, ascending. Partial Fisher-Yates over an index pool.
inline std::vector<std::uint32_t> sample_subset(std::uint32_t n, std::uint32_t k, Rng& rng) {
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        pool[i] = i;
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        auto j = i + static_cast<std::uint32_t>(uniform_below(rng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace hlnet

#endif  // HLNET_RANDOM_HPP
