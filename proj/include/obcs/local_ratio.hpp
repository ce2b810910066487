#pragma once

#include <vector>

#include "obcs/feasibility.hpp"
#include "obcs/graph.hpp"

namespace obcs {

// One weight-decomposition level: the heaviest surviving edge together with
// the weights its closed neighborhood carried before they were zeroed out.
struct WeightDecomposition {
    Edge chosen{-1, -1};                             // endpoints, smaller first
    std::vector<std::pair<Vertex, double>> support;  // (vertex, weight moved to this level)
};

struct LocalRatioResult {
    VertexSet set;
    std::vector<WeightDecomposition> levels;
    int depth = 0;  // recursion levels an equivalent recursive formulation would use
};

// Weighted solver with an approximation factor of the maximum degree, for any
// bound k >= 2. Work on a copy of the weights: repeatedly drop non-positive
// vertices (smallest id first), then commit the edge maximizing the endpoint
// weight sum (ties to the lexicographically first edge) and zero out its
// closed neighborhood, pushing one decomposition level. Both endpoints enter
// the solution, and whatever survives with positive weight when no edge is
// left joins as isolated vertices. Components therefore have order at most 2,
// which satisfies every bound k >= 2; k = 1 is independent set territory and
// is refused.
inline LocalRatioResult local_ratio_k_obcs(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("the local ratio solver requires k >= 2");
    const int n = g.vertex_count();
    std::vector<double> w(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        w[static_cast<size_t>(v)] = g.weight(v);
        if (!(w[static_cast<size_t>(v)] > 0.0))
            throw std::invalid_argument("vertex weights must be positive");
    }
    std::vector<char> alive(static_cast<size_t>(n), 1);
    const long long depth_cap = static_cast<long long>(n) + g.edge_count();
    LocalRatioResult res;
    std::vector<Edge> picked;
    while (true) {
        for (Vertex u = 0; u < n; ++u) {
            if (alive[static_cast<size_t>(u)] && !(w[static_cast<size_t>(u)] > 0.0)) {
                alive[static_cast<size_t>(u)] = 0;
                ++res.depth;
            }
        }
        const Edge* best = nullptr;
        double best_w = 0.0;
        for (const auto& e : g.edges()) {
            if (!alive[static_cast<size_t>(e.first)] || !alive[static_cast<size_t>(e.second)]) continue;
            const double cand = w[static_cast<size_t>(e.first)] + w[static_cast<size_t>(e.second)];
            if (!best || cand > best_w) {  // strict, so the first edge wins ties
                best = &e;
                best_w = cand;
            }
        }
        if (!best) break;
        ++res.depth;
        WeightDecomposition level;
        level.chosen = *best;
        std::vector<Vertex> closed{best->first, best->second};
        for (Vertex u : g.neighbors(best->first))
            if (alive[static_cast<size_t>(u)]) closed.push_back(u);
        for (Vertex u : g.neighbors(best->second))
            if (alive[static_cast<size_t>(u)]) closed.push_back(u);
        VertexSet support = canonical_set(std::move(closed));
        for (Vertex u : support) {
            const double moved = w[static_cast<size_t>(u)];
            level.support.emplace_back(u, moved);
            const double residual = w[static_cast<size_t>(u)] - moved;
            if (residual != 0.0)
                throw std::logic_error("residual weight must vanish exactly on the support");
            w[static_cast<size_t>(u)] = residual;
        }
        picked.push_back(*best);
        res.levels.push_back(std::move(level));
    }
    if (res.depth > depth_cap)
        throw std::logic_error("decomposition depth exceeded the vertex+edge budget");
    VertexSet out;
    for (const auto& [s, t] : picked) {
        out.push_back(s);
        out.push_back(t);
    }
    for (Vertex v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) out.push_back(v);
    res.set = canonical_set(std::move(out));
    if (!is_k_component_set(g, res.set, 2))
        throw std::logic_error("local ratio produced a component of order above 2");
    return res;
}

}  // namespace obcs
