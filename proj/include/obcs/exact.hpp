#pragma once

#include <string>
#include <vector>

#include "obcs/feasibility.hpp"
#include "obcs/graph.hpp"

namespace obcs {

inline constexpr int kDefaultExactLimit = 20;

struct ExactResult {
    VertexSet best_set;       // optimal set, smallest in sorted lexicographic order
    double value = 0.0;       // cardinality, or total weight for the weighted objective
    long long explored = 0;   // search tree nodes visited
};

namespace detail {

// Union-find with an undo log instead of path compression, so the search can
// tentatively add a vertex and roll back in O(degree).
class RollbackComponents {
public:
    explicit RollbackComponents(int n)
        : parent_(static_cast<size_t>(n)), order_(static_cast<size_t>(n), 1),
          in_set_(static_cast<size_t>(n), 0) {
        for (int v = 0; v < n; ++v) parent_[static_cast<size_t>(v)] = v;
    }

    size_t mark() const { return log_.size(); }

    // Adds v, merging with every neighboring component already in the set.
    // Returns the order of the component v ends up in.
    int add(Vertex v, const Graph& g) {
        in_set_[static_cast<size_t>(v)] = 1;
        log_.push_back({v, -1});
        for (Vertex u : g.neighbors(v)) {
            if (!in_set_[static_cast<size_t>(u)]) continue;
            Vertex ra = find(u), rb = find(v);
            if (ra == rb) continue;
            if (order_[static_cast<size_t>(ra)] < order_[static_cast<size_t>(rb)]) std::swap(ra, rb);
            parent_[static_cast<size_t>(rb)] = ra;
            order_[static_cast<size_t>(ra)] += order_[static_cast<size_t>(rb)];
            log_.push_back({rb, ra});
        }
        return order_[static_cast<size_t>(find(v))];
    }

    void rollback(size_t to) {
        while (log_.size() > to) {
            auto [child, root] = log_.back();
            log_.pop_back();
            if (root < 0) {
                in_set_[static_cast<size_t>(child)] = 0;
                order_[static_cast<size_t>(child)] = 1;
            } else {
                parent_[static_cast<size_t>(child)] = child;
                order_[static_cast<size_t>(root)] -= order_[static_cast<size_t>(child)];
            }
        }
    }

private:
    Vertex find(Vertex v) const {
        while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
        return v;
    }

    std::vector<Vertex> parent_;
    std::vector<int> order_;
    std::vector<char> in_set_;
    std::vector<std::pair<Vertex, Vertex>> log_;  // (inserted, -1) or (child root, parent root)
};

struct ExactSearch {
    const Graph& g;
    int k;
    std::vector<double> gain;    // objective contribution per vertex, all > 0
    std::vector<double> suffix;  // suffix[i] = sum of gain[i..n)
    RollbackComponents comps;
    VertexSet current;
    ExactResult best;

    ExactSearch(const Graph& graph, int bound, std::vector<double> g_in)
        : g(graph), k(bound), gain(std::move(g_in)), comps(graph.vertex_count()) {
        const int n = g.vertex_count();
        suffix.assign(static_cast<size_t>(n) + 1, 0.0);
        for (int i = n - 1; i >= 0; --i)
            suffix[static_cast<size_t>(i)] = suffix[static_cast<size_t>(i) + 1] + gain[static_cast<size_t>(i)];
        best.value = -1.0;  // any feasible set, including the empty one, beats this
    }

    // Depth-first over vertices in ascending id, include before exclude, and
    // only strictly better values replace the incumbent. Together these make
    // the reported optimum the lexicographically smallest one.
    void run(int idx, double value) {
        ++best.explored;
        if (value > best.value) {
            best.value = value;
            best.best_set = current;
        }
        const int n = g.vertex_count();
        if (idx == n) return;
        if (value + suffix[static_cast<size_t>(idx)] <= best.value) return;  // cannot strictly improve
        const size_t m = comps.mark();
        if (comps.add(idx, g) <= k) {
            current.push_back(idx);
            run(idx + 1, value + gain[static_cast<size_t>(idx)]);
            current.pop_back();
        }
        comps.rollback(m);
        run(idx + 1, value);
    }
};

inline ExactResult exact_search(const Graph& g, int k, int limit, std::vector<double> gain) {
    if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
    if (limit < 0) throw std::invalid_argument("size limit must be non-negative");
    if (g.vertex_count() > limit)
        throw GuardError("exact search refused: graph has " + std::to_string(g.vertex_count()) +
                         " vertices, limit is " + std::to_string(limit));
    ExactSearch search(g, k, std::move(gain));
    search.run(0, 0.0);
    if (search.best.value < 0.0) throw std::logic_error("exact search found no feasible set");
    return std::move(search.best);
}

}  // namespace detail

// Largest set whose induced components all have order at most k.
inline ExactResult exact_comp_k(const Graph& g, int k, int limit = kDefaultExactLimit) {
    return detail::exact_search(g, k, limit,
                                std::vector<double>(static_cast<size_t>(g.vertex_count()), 1.0));
}

// Same search under the total-weight objective. Unweighted graphs count one
// per vertex, which reduces to the cardinality version.
inline ExactResult exact_weighted(const Graph& g, int k, int limit = kDefaultExactLimit) {
    std::vector<double> gain(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) gain[static_cast<size_t>(v)] = g.weight(v);
    return detail::exact_search(g, k, limit, std::move(gain));
}

}  // namespace obcs
