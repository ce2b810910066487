#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "obcs/errors.hpp"

namespace obcs {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Sorts and deduplicates, so callers may hand in vertices in any order.
inline VertexSet canonical_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Simple undirected graph with optional strictly positive vertex weights.
// Vertices are 0-based and dense inside the library; the file formats are
// 1-based and converted at the I/O boundary. Instances are immutable after
// construction, so one graph can back any number of concurrent solver runs.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n) { return from_edges(n, {}); }

    static Graph from_edges(int n, std::vector<Edge> edges,
                            std::optional<std::vector<double>> weights = std::nullopt) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        Graph g;
        g.n_ = n;
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint outside the graph");
            if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u + 1));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw ValidationError("duplicate edge (" + std::to_string(dup->first + 1) + "," +
                                  std::to_string(dup->second + 1) + ")");
        g.edges_ = std::move(edges);
        g.adj_.assign(static_cast<size_t>(n), {});
        for (const auto& [u, v] : g.edges_) {
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        if (weights) {
            if (static_cast<int>(weights->size()) != n)
                throw std::invalid_argument("weight vector size does not match vertex count");
            for (int v = 0; v < n; ++v)
                if (!((*weights)[static_cast<size_t>(v)] > 0.0))
                    throw ValidationError("non-positive weight at vertex " + std::to_string(v + 1));
            g.weights_ = std::move(*weights);
        }
        long long deg_sum = 0;
        for (const auto& nb : g.adj_) deg_sum += static_cast<long long>(nb.size());
        if (deg_sum != 2 * g.edge_count())
            throw std::logic_error("degree sum does not equal twice the edge count");
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    // Sorted lexicographically with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const bool u_smaller = adj_[static_cast<size_t>(u)].size() <= adj_[static_cast<size_t>(v)].size();
        const auto& nb = u_smaller ? adj_[static_cast<size_t>(u)] : adj_[static_cast<size_t>(v)];
        const Vertex other = u_smaller ? v : u;
        return std::binary_search(nb.begin(), nb.end(), other);
    }

    bool weighted() const { return weights_.has_value(); }

    // Weight of a vertex; an unweighted graph behaves as all-ones.
    double weight(Vertex v) const {
        check_vertex(v);
        return weights_ ? (*weights_)[static_cast<size_t>(v)] : 1.0;
    }

    double total_weight(const VertexSet& s) const {
        double sum = 0.0;
        for (Vertex v : s) sum += weight(v);
        return sum;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " outside the graph");
    }

    void check_set(const VertexSet& s) const {
        for (Vertex v : s) check_vertex(v);
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && weights_ == o.weights_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::optional<std::vector<double>> weights_;
};

// Degree summary. The average degree 2m/n is exposed as an exact integer
// pair so downstream bound checks never touch floating point.
struct GraphMetrics {
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    long long avg_degree_num = 0;  // 2m (0 for the empty graph)
    long long avg_degree_den = 1;  // n  (1 for the empty graph)

    double avg_degree() const {
        return static_cast<double>(avg_degree_num) / static_cast<double>(avg_degree_den);
    }
};

inline GraphMetrics metrics(const Graph& g) {
    GraphMetrics mt;
    mt.n = g.vertex_count();
    mt.m = g.edge_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v) mt.max_degree = std::max(mt.max_degree, g.degree(v));
    mt.avg_degree_num = mt.n > 0 ? 2 * mt.m : 0;
    mt.avg_degree_den = mt.n > 0 ? mt.n : 1;
    return mt;
}

// Induced subgraph plus the map from its fresh vertex ids back to the parent.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // new id i came from to_parent[i]
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s_in) {
    VertexSet s = canonical_set(s_in);
    g.check_set(s);
    std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) index[static_cast<size_t>(s[static_cast<size_t>(i)])] = i;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        const int iu = index[static_cast<size_t>(u)];
        const int iv = index[static_cast<size_t>(v)];
        if (iu >= 0 && iv >= 0) edges.emplace_back(iu, iv);
    }
    std::optional<std::vector<double>> w;
    if (g.weighted()) {
        w.emplace();
        w->reserve(s.size());
        for (Vertex v : s) w->push_back(g.weight(v));
    }
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(s.size()), std::move(edges), std::move(w));
    out.to_parent = std::move(s);
    return out;
}

}  // namespace obcs
