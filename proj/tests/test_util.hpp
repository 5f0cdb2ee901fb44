#pragma once

#include "spexlab/graph.hpp"

#include <cstdint>

namespace testutil {

// deterministic splitmix64 stream; tests must not depend on global randomness
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
};

inline spexlab::Graph random_graph(Rng& rng, int n, uint64_t edge_prob_percent = 50) {
    spexlab::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < edge_prob_percent) g.add_edge(u, v);
    return g;
}

inline spexlab::Graph random_connected_graph(Rng& rng, int n, uint64_t edge_prob_percent = 40) {
    for (;;) {
        spexlab::Graph g = random_graph(rng, n, edge_prob_percent);
        if (g.is_connected()) return g;
    }
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<size_t>(i)], p[rng.below(static_cast<uint64_t>(i + 1))]);
    return p;
}

} // namespace testutil
