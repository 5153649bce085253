#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace pcf {

using Rng = std::mt19937_64;

// Uniform draw from [0, bound) via rejection, so results depend only on the
// mt19937_64 stream and not on the standard library's distribution internals.
inline std::uint64_t bounded(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Sorted k-subset of {0, ..., universe-1} by partial Fisher-Yates.
inline std::vector<int> sample_subset(Rng& rng, int universe, int k) {
    std::vector<int> pool(universe);
    for (int i = 0; i < universe; ++i) pool[i] = i;
    std::vector<int> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(universe - i)));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pcf
