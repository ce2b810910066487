#pragma once

// Test-side reference implementations, written independently of the library
// internals. They look only at vertex_count(), edges(), and weight(), use
// their own adjacency and BFS, and enumerate subsets exhaustively, so they
// can arbitrate when a library result is in question. Usable up to ~20
// vertices.

#include <cstdint>
#include <queue>
#include <vector>

#include "obcs/graph.hpp"

namespace testutil {

inline std::vector<std::vector<int>> brute_adjacency(const obcs::Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

// Does every component of the subgraph induced by mask have at most k vertices?
inline bool brute_feasible(const obcs::Graph& g, std::uint32_t mask, int k) {
    const int n = g.vertex_count();
    const auto adj = brute_adjacency(g);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (!((mask >> s) & 1u) || seen[static_cast<size_t>(s)]) continue;
        int count = 0;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            ++count;
            for (int u : adj[static_cast<size_t>(v)]) {
                if (((mask >> u) & 1u) && !seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    q.push(u);
                }
            }
        }
        if (count > k) return false;
    }
    return true;
}

inline std::uint32_t set_to_mask(const obcs::VertexSet& s) {
    std::uint32_t mask = 0;
    for (int v : s) mask |= 1u << v;
    return mask;
}

inline bool brute_feasible(const obcs::Graph& g, const obcs::VertexSet& s, int k) {
    return brute_feasible(g, set_to_mask(s), k);
}

// Maximum cardinality of a feasible set.
inline int brute_comp_k(const obcs::Graph& g, int k) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!brute_feasible(g, mask, k)) continue;
        best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Maximum total weight of a feasible set.
inline double brute_weighted(const obcs::Graph& g, int k) {
    const int n = g.vertex_count();
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!brute_feasible(g, mask, k)) continue;
        double val = 0.0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) val += g.weight(v);
        best = std::max(best, val);
    }
    return best;
}

// Lexicographically smallest optimal set under the given objective, found by
// enumerating every optimal mask and comparing their sorted vertex sequences.
inline obcs::VertexSet brute_lex_smallest_optimum(const obcs::Graph& g, int k, bool weighted) {
    const int n = g.vertex_count();
    double best = -1.0;
    std::vector<std::uint32_t> optima;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!brute_feasible(g, mask, k)) continue;
        double val = 0.0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) val += weighted ? g.weight(v) : 1.0;
        if (val > best) {
            best = val;
            optima.clear();
        }
        if (val == best) optima.push_back(mask);
    }
    obcs::VertexSet smallest;
    bool have = false;
    for (std::uint32_t mask : optima) {
        obcs::VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.push_back(v);
        if (!have || s < smallest) {
            smallest = s;
            have = true;
        }
    }
    return smallest;
}

// Size of a maximum independent set, straight from the no-edge-inside
// definition rather than any component machinery.
inline int brute_max_independent_set(const obcs::Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (((mask >> u) & 1u) && ((mask >> v) & 1u)) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline bool brute_independent(const obcs::Graph& g, const obcs::VertexSet& s) {
    const std::uint32_t mask = set_to_mask(s);
    for (const auto& [u, v] : g.edges())
        if (((mask >> u) & 1u) && ((mask >> v) & 1u)) return false;
    return true;
}

}  // namespace testutil
