#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace m3rs {

// Distribution helpers on top of mt19937_64. Hand-rolled so the draw
// sequence does not depend on the standard library implementation.

/// Uniform double in [0, 1).
inline double urand01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double urand(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * urand01(rng);
}

/// Uniform integer in [0, n).
inline int uindex(std::mt19937_64& rng, int n) {
    const int k = static_cast<int>(urand01(rng) * n);
    return k < n ? k : n - 1;
}

/// k distinct values from [0, n), ascending. Partial Fisher-Yates.
inline std::vector<int> sample_indices(std::mt19937_64& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + uindex(rng, n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace m3rs
