#pragma once

#include <string>
#include <vector>

#include "obcs/errors.hpp"
#include "obcs/feasibility.hpp"
#include "obcs/graph.hpp"

namespace obcs {

inline constexpr long long kDefaultComposeBudget = 1 << 20;

// A source graph together with its doubled form. Vertex v of the source
// appears twice in the target: as v itself (first copy) and as v + n
// (second copy).
struct ReductionMap {
    Graph source;
    Graph target;

    Vertex copy1(Vertex v) const {
        source.check_vertex(v);
        return v;
    }
    Vertex copy2(Vertex v) const {
        source.check_vertex(v);
        return v + source.vertex_count();
    }
    Vertex to_source(Vertex tv) const {
        target.check_vertex(tv);
        const int n = source.vertex_count();
        return tv < n ? tv : tv - n;
    }
    int copy_index(Vertex tv) const {
        target.check_vertex(tv);
        return tv < source.vertex_count() ? 1 : 2;
    }
};

// Doubling construction: two copies of the graph, a crossing pair of edges
// for every source edge, and a spoke joining the two copies of each vertex.
// The result has 2n vertices and 4m + n edges, and its optimal solutions for
// bound 2k are exactly twice the size of the source optima for bound k.
inline ReductionMap double_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(4 * g.edge_count() + n));
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, u + n);
    std::optional<std::vector<double>> w;
    if (g.weighted()) {
        w.emplace();
        w->reserve(static_cast<size_t>(2 * n));
        for (Vertex v = 0; v < n; ++v) w->push_back(g.weight(v));
        for (Vertex v = 0; v < n; ++v) w->push_back(g.weight(v));
    }
    ReductionMap map;
    map.source = g;
    map.target = Graph::from_edges(2 * n, std::move(edges), std::move(w));
    if (map.target.vertex_count() != 2 * n || map.target.edge_count() != 4 * g.edge_count() + n)
        throw std::logic_error("doubled graph has an unexpected size");
    return map;
}

// Both copies of every solution vertex. A feasible set for bound k in the
// source becomes a feasible set for bound 2k in the target, twice the size.
inline VertexSet lift_solution(const ReductionMap& map, const VertexSet& s_in, int k) {
    VertexSet s = canonical_set(s_in);
    map.source.check_set(s);
    if (!is_k_component_set(map.source, s, k))
        throw std::invalid_argument("the set to lift is not feasible for bound k in the source");
    VertexSet lifted;
    lifted.reserve(2 * s.size());
    for (Vertex v : s) lifted.push_back(map.copy1(v));
    for (Vertex v : s) lifted.push_back(map.copy2(v));
    lifted = canonical_set(std::move(lifted));
    if (lifted.size() != 2 * s.size())
        throw std::logic_error("lifting must double the solution size");
    if (!is_k_component_set(map.target, lifted, 2 * k))
        throw std::logic_error("lifted set is not feasible for bound 2k in the target");
    return lifted;
}

// Back direction: a feasible set for bound 2k in the target yields a feasible
// set for bound k in the source of at least half the size. Per target
// component, project onto whichever copy holds the majority (first copy on
// ties) and keep the k smallest source ids.
inline VertexSet recover_solution(const ReductionMap& map, const VertexSet& s_prime_in, int k) {
    if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
    VertexSet s_prime = canonical_set(s_prime_in);
    map.target.check_set(s_prime);
    if (!is_k_component_set(map.target, s_prime, 2 * k))
        throw std::invalid_argument("the set to recover is not feasible for bound 2k in the target");
    const ComponentPartition parts = components(map.target, s_prime);
    std::vector<char> claimed(static_cast<size_t>(map.source.vertex_count()), 0);
    VertexSet out;
    for (const auto& comp : parts.components) {
        VertexSet first_copy, second_copy;
        for (Vertex tv : comp) {
            const Vertex sv = map.to_source(tv);
            if (map.copy_index(tv) == 1)
                first_copy.push_back(sv);
            else
                second_copy.push_back(sv);
        }
        // The two copies of a vertex are adjacent, so distinct target
        // components project to disjoint source sets.
        VertexSet projected = first_copy;
        projected.insert(projected.end(), second_copy.begin(), second_copy.end());
        for (Vertex sv : canonical_set(std::move(projected))) {
            if (claimed[static_cast<size_t>(sv)])
                throw std::logic_error("two target components project onto the same source vertex");
            claimed[static_cast<size_t>(sv)] = 1;
        }
        const VertexSet& side = first_copy.size() >= second_copy.size() ? first_copy : second_copy;
        const size_t take = std::min<size_t>(static_cast<size_t>(k), side.size());
        out.insert(out.end(), side.begin(), side.begin() + static_cast<long>(take));
    }
    out = canonical_set(std::move(out));
    const size_t floor = (s_prime.size() + 1) / 2;
    if (out.size() < floor)
        throw std::logic_error("recovered set is smaller than half the target solution");
    if (!is_k_component_set(map.source, out, k))
        throw std::logic_error("recovered set is not feasible for bound k in the source");
    return out;
}

// Chain of i doublings. Refused when the final graph would exceed the vertex
// budget. An empty chain (i = 0) is the identity.
inline std::vector<ReductionMap> compose_to_power(const Graph& g, int i,
                                                  long long budget = kDefaultComposeBudget) {
    if (i < 0) throw std::invalid_argument("the number of doubling steps must be non-negative");
    long long final_n = g.vertex_count();
    for (int j = 0; j < i; ++j) {
        final_n *= 2;
        if (final_n > budget)
            throw GuardError("doubling chain refused: final graph would have " +
                             std::to_string(final_n) + " vertices, budget is " +
                             std::to_string(budget));
    }
    std::vector<ReductionMap> chain;
    chain.reserve(static_cast<size_t>(i));
    const Graph* cur = &g;
    for (int j = 0; j < i; ++j) {
        chain.push_back(double_graph(*cur));
        cur = &chain.back().target;
    }
    return chain;
}

// Push a feasible set up the whole chain; the bound doubles at every level.
inline VertexSet lift_through(const std::vector<ReductionMap>& chain, VertexSet s, int k) {
    for (const auto& map : chain) {
        s = lift_solution(map, s, k);
        k *= 2;
    }
    return s;
}

// Pull a set feasible at the top of the chain back down to the source.
inline VertexSet recover_through(const std::vector<ReductionMap>& chain, VertexSet s, int k) {
    for (size_t j = chain.size(); j-- > 0;) s = recover_solution(chain[j], s, k << j);
    return s;
}

// Shrink every component above the target order by dropping its highest ids.
// When the target is a power of two 2^i with 2^i < k < 2^(i+1), the output
// provably keeps at least a (2^(i+1) - k) / 2^i fraction of the input, and
// that floor is checked here in exact integers.
inline VertexSet truncate_components(const Graph& g, const VertexSet& s_in, int k, int target) {
    if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
    if (target < 1 || target >= k)
        throw std::invalid_argument("the target order must satisfy 1 <= target < k");
    VertexSet s = canonical_set(s_in);
    g.check_set(s);
    if (!is_k_component_set(g, s, k))
        throw std::invalid_argument("the set to truncate is not feasible for bound k");
    VertexSet out;
    for (const auto& comp : components(g, s).components) {
        const size_t keep = std::min<size_t>(static_cast<size_t>(target), comp.size());
        out.insert(out.end(), comp.begin(), comp.begin() + static_cast<long>(keep));
    }
    out = canonical_set(std::move(out));
    if (!is_k_component_set(g, out, target))
        throw std::logic_error("truncated set is not feasible for the target bound");
    const bool power_of_two = (target & (target - 1)) == 0;
    if (power_of_two && k < 2 * target) {
        const long long lhs = static_cast<long long>(out.size()) * target;
        const long long rhs = static_cast<long long>(s.size()) * (2LL * target - k);
        if (lhs < rhs)
            throw std::logic_error("truncation floor failed: " + std::to_string(lhs) + " < " +
                                   std::to_string(rhs));
    }
    return out;
}

// Independent set inside a feasible solution: per component, greedily keep
// the smallest id and skip its neighbors. Components have at most k vertices,
// so at least a 1/k fraction survives; for k = 2 that is one endpoint of
// every pair plus all isolated solution vertices.
inline VertexSet round_to_independent_set(const Graph& g, const VertexSet& s_in, int k) {
    if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
    VertexSet s = canonical_set(s_in);
    g.check_set(s);
    if (!is_k_component_set(g, s, k))
        throw std::invalid_argument("the set to round is not feasible for bound k");
    std::vector<char> excluded(static_cast<size_t>(g.vertex_count()), 0);
    VertexSet out;
    for (const auto& comp : components(g, s).components) {
        for (Vertex v : comp) {
            if (excluded[static_cast<size_t>(v)]) continue;
            out.push_back(v);
            for (Vertex u : g.neighbors(v)) excluded[static_cast<size_t>(u)] = 1;
        }
    }
    out = canonical_set(std::move(out));
    std::vector<char> in_out(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : out) in_out[static_cast<size_t>(v)] = 1;
    for (Vertex v : out)
        for (Vertex u : g.neighbors(v))
            if (in_out[static_cast<size_t>(u)])
                throw std::logic_error("rounding produced adjacent vertices");
    const size_t floor = (s.size() + static_cast<size_t>(k) - 1) / static_cast<size_t>(k);
    if (out.size() < floor)
        throw std::logic_error("rounded set is smaller than a 1/k fraction of the input");
    return out;
}

}  // namespace obcs
