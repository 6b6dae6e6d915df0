#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cayrec {

// std::uniform_int_distribution is not byte-stable across standard libraries,
// so seeded pipelines use these fixed reductions instead.

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[bounded(rng, i)]);
    }
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    shuffle(p, rng);
    return p;
}

}  // namespace cayrec
