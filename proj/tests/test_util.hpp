#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

// Property tests draw from a fixed default seed; set CYCPERM_SEED to
// rerun them with a different stream.
inline std::mt19937_64 seeded_rng() {
    unsigned long long seed = 20260818ULL;
    if (const char* env = std::getenv("CYCPERM_SEED"); env != nullptr && *env != '\0')
        seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed);
}

inline std::vector<int> random_word(std::mt19937_64& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}
