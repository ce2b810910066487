#pragma once

#include <string>
#include <vector>

#include "obcs/graph.hpp"

namespace obcs {

// Connected components of an induced subgraph, ordered by smallest member.
struct ComponentPartition {
    std::vector<VertexSet> components;  // each sorted ascending

    std::vector<int> orders() const {
        std::vector<int> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(static_cast<int>(c.size()));
        return out;
    }

    int max_order() const {
        int best = 0;
        for (const auto& c : components) best = std::max(best, static_cast<int>(c.size()));
        return best;
    }
};

inline ComponentPartition components(const Graph& g, const VertexSet& s_in) {
    VertexSet s = canonical_set(s_in);
    g.check_set(s);
    std::vector<char> in_s(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : s) in_s[static_cast<size_t>(v)] = 1;
    ComponentPartition part;
    std::vector<Vertex> stack;
    for (Vertex root : s) {
        if (seen[static_cast<size_t>(root)]) continue;
        VertexSet comp;
        seen[static_cast<size_t>(root)] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (in_s[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        part.components.push_back(std::move(comp));
    }
    return part;
}

// Does every component of the subgraph induced by s have at most k vertices?
inline bool is_k_component_set(const Graph& g, const VertexSet& s, int k) {
    if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
    return components(g, s).max_order() <= k;
}

// Union-find over a growing vertex set, tracking component orders. Lets a
// solver ask "how large would the component become if I added p" without
// mutating anything.
class IncrementalComponents {
public:
    explicit IncrementalComponents(const Graph& g)
        : g_(&g),
          parent_(static_cast<size_t>(g.vertex_count()), -1),
          order_(static_cast<size_t>(g.vertex_count()), 0),
          in_set_(static_cast<size_t>(g.vertex_count()), 0) {}

    const Graph& graph() const { return *g_; }
    int size() const { return size_; }

    bool contains(Vertex v) const {
        g_->check_vertex(v);
        return in_set_[static_cast<size_t>(v)] != 0;
    }

    void insert(Vertex v) {
        g_->check_vertex(v);
        if (in_set_[static_cast<size_t>(v)])
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is already in the set");
        in_set_[static_cast<size_t>(v)] = 1;
        parent_[static_cast<size_t>(v)] = v;
        order_[static_cast<size_t>(v)] = 1;
        ++size_;
        for (Vertex u : g_->neighbors(v))
            if (in_set_[static_cast<size_t>(u)]) unite(u, v);
    }

    // Order of the component p would join: p itself plus every distinct
    // component currently touching it. p must not be in the set.
    int joined_order(Vertex p) const {
        g_->check_vertex(p);
        if (in_set_[static_cast<size_t>(p)])
            throw std::invalid_argument("vertex " + std::to_string(p + 1) + " is already in the set");
        int total = 1;
        std::vector<Vertex> roots;
        for (Vertex u : g_->neighbors(p)) {
            if (!in_set_[static_cast<size_t>(u)]) continue;
            Vertex r = find(u);
            bool fresh = true;
            for (Vertex seen : roots)
                if (seen == r) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                roots.push_back(r);
                total += order_[static_cast<size_t>(r)];
            }
        }
        return total;
    }

    bool would_exceed(Vertex p, int k) const {
        if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
        return joined_order(p) >= k + 1;
    }

    // Order of the component containing a member vertex.
    int component_order(Vertex v) const {
        g_->check_vertex(v);
        if (!in_set_[static_cast<size_t>(v)])
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is not in the set");
        return order_[static_cast<size_t>(find(v))];
    }

    VertexSet members() const {
        VertexSet s;
        for (Vertex v = 0; v < g_->vertex_count(); ++v)
            if (in_set_[static_cast<size_t>(v)]) s.push_back(v);
        return s;
    }

private:
    Vertex find(Vertex v) const {
        Vertex root = v;
        while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
        while (parent_[static_cast<size_t>(v)] != root) {
            Vertex next = parent_[static_cast<size_t>(v)];
            parent_[static_cast<size_t>(v)] = root;
            v = next;
        }
        return root;
    }

    void unite(Vertex a, Vertex b) {
        Vertex ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (order_[static_cast<size_t>(ra)] < order_[static_cast<size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<size_t>(rb)] = ra;
        order_[static_cast<size_t>(ra)] += order_[static_cast<size_t>(rb)];
    }

    const Graph* g_;
    mutable std::vector<Vertex> parent_;  // path compression only rewires, so const queries stay cheap
    std::vector<int> order_;              // valid at roots
    std::vector<char> in_set_;
    int size_ = 0;
};

}  // namespace obcs
