#pragma once

#include <cstdint>
#include <random>

#include "obcs/graph.hpp"

namespace obcs {

// Erdos-Renyi G(n, p), deterministic in (n, p, seed). Vertex pairs are
// visited in lexicographic order and each consumes exactly one draw, so the
// edge set never depends on platform or standard library details.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            // top 53 bits give a uniform double in [0, 1)
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

// Same graph with fresh integer weights drawn uniformly from [lo, hi].
inline Graph with_integer_weights(const Graph& g, std::uint64_t seed, int lo = 1, int hi = 10) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("weight range must satisfy 1 <= lo <= hi");
    std::mt19937_64 rng(seed);
    std::vector<double> w(static_cast<size_t>(g.vertex_count()));
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    for (auto& x : w) x = static_cast<double>(lo + static_cast<int>(rng() % span));
    return Graph::from_edges(g.vertex_count(), g.edges(), std::move(w));
}

}  // namespace obcs
