#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "obcs/feasibility.hpp"
#include "obcs/graph.hpp"

namespace obcs {

struct GreedyOptions {
    // Re-derive the maintained degree table and the structural invariants
    // after every iteration. Cheap at the scales this library targets; turn
    // off only for large batch runs.
    bool check_invariants = true;
};

struct GreedyIteration {
    Vertex chosen = -1;
    int degree = 0;         // degree of the chosen vertex among undecided vertices, at pick time
    Vertex paired = -1;     // earlier singleton promoted into a pair, -1 if none
    VertexSet moved_to_x;   // undecided vertices discarded this iteration
};

// One aggregate inequality over a finished run; ok means lhs <= rhs.
struct TraceCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool ok = false;
};

struct GreedyTrace {
    int k = 2;
    std::vector<int> d_sequence;            // degree of each chosen vertex, in pick order
    std::vector<GreedyIteration> iterations;
    VertexSet solution;
    VertexSet discarded;
    std::vector<TraceCheck> checks;

    int picks() const { return static_cast<int>(d_sequence.size()); }
};

struct GreedyResult {
    VertexSet set;
    GreedyTrace trace;
};

// The accounting bounds every run must satisfy, in exact integer arithmetic.
// Each chosen vertex is charged one probe for itself and one per undecided
// neighbor; every discarded vertex was probed at least once and no vertex is
// probed more than k times, which squeezes the probe total between n and kn.
// Charging probes to edges bounds the squared terms, and Cauchy-Schwarz then
// turns the two sums into a floor on the solution size.
inline std::vector<TraceCheck> trace_checks(const GraphMetrics& mt, const GreedyTrace& tr) {
    const long long n = mt.n;
    const long long two_m = 2 * mt.m;
    const long long k = tr.k;
    long long probes = 0;
    long long edge_charge = 0;
    for (int d : tr.d_sequence) {
        probes += d + 1;
        edge_charge += static_cast<long long>(d) * (d + 1);
    }
    const long long size = static_cast<long long>(tr.solution.size());
    std::vector<TraceCheck> out;
    auto push = [&out](std::string name, long long lhs, long long rhs) {
        out.push_back({std::move(name), lhs, rhs, lhs <= rhs});
    };
    push("probe_count_lower", n, probes);
    push("probe_count_upper", probes, k * n);
    push("edge_charge_upper", edge_charge, (2 * k - 1) * two_m);
    push("solution_size_floor", n * n, size * ((2 * k - 1) * two_m + k * n));
    return out;
}

namespace detail {

// Status codes shared by the greedy solvers.
enum : char { kUndecided = 0, kSolution = 1, kDiscarded = 2 };

// The pool of not-yet-decided vertices, with degrees maintained inside it.
class UndecidedPool {
public:
    explicit UndecidedPool(const Graph& g)
        : g_(&g), status_(static_cast<size_t>(g.vertex_count()), kUndecided),
          deg_(static_cast<size_t>(g.vertex_count()), 0), remaining_(g.vertex_count()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) deg_[static_cast<size_t>(v)] = g.degree(v);
    }

    int remaining() const { return remaining_; }
    bool undecided(Vertex v) const { return status_[static_cast<size_t>(v)] == kUndecided; }
    char status(Vertex v) const { return status_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return deg_[static_cast<size_t>(v)]; }

    // Minimum degree, ties to the smallest id.
    Vertex pick_min_degree() const {
        Vertex best = -1;
        for (Vertex v = 0; v < g_->vertex_count(); ++v)
            if (undecided(v) && (best < 0 || deg_[static_cast<size_t>(v)] < deg_[static_cast<size_t>(best)]))
                best = v;
        return best;
    }

    void remove(Vertex v, char new_status) {
        status_[static_cast<size_t>(v)] = new_status;
        --remaining_;
        for (Vertex u : g_->neighbors(v))
            if (undecided(u)) --deg_[static_cast<size_t>(u)];
    }

    void verify_degrees() const {
        for (Vertex v = 0; v < g_->vertex_count(); ++v) {
            if (!undecided(v)) continue;
            int d = 0;
            for (Vertex u : g_->neighbors(v))
                if (undecided(u)) ++d;
            if (d != deg_[static_cast<size_t>(v)])
                throw std::logic_error("maintained degree of vertex " + std::to_string(v + 1) +
                                       " drifted from the recomputed value");
        }
    }

    VertexSet with_status(char st) const {
        VertexSet out;
        for (Vertex v = 0; v < g_->vertex_count(); ++v)
            if (status_[static_cast<size_t>(v)] == st) out.push_back(v);
        return out;
    }

private:
    const Graph* g_;
    std::vector<char> status_;
    std::vector<int> deg_;
    int remaining_;
};

// After every dissociation iteration: singletons have no solution neighbor,
// each paired vertex has exactly its partner in the solution, and no paired
// vertex has an undecided neighbor left (those must all be discarded).
inline void verify_dissociation_structure(const Graph& g, const UndecidedPool& pool,
                                          const std::vector<char>& s_class,
                                          const std::vector<Vertex>& partner) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (pool.status(v) != kSolution) continue;
        if (s_class[static_cast<size_t>(v)] == 2) {
            Vertex p = partner[static_cast<size_t>(v)];
            if (p < 0 || partner[static_cast<size_t>(p)] != v)
                throw std::logic_error("pair bookkeeping broken at vertex " + std::to_string(v + 1));
            for (Vertex u : g.neighbors(v)) {
                if (pool.status(u) == kSolution && u != p)
                    throw std::logic_error("paired vertex " + std::to_string(v + 1) +
                                           " has a second solution neighbor");
                if (pool.undecided(u))
                    throw std::logic_error("paired vertex " + std::to_string(v + 1) +
                                           " still has an undecided neighbor");
            }
        } else {
            for (Vertex u : g.neighbors(v))
                if (pool.status(u) == kSolution)
                    throw std::logic_error("singleton " + std::to_string(v + 1) +
                                           " has a solution neighbor");
        }
    }
}

inline void finish_trace(const Graph& g, UndecidedPool& pool, GreedyTrace& trace, int feasibility_k) {
    trace.solution = pool.with_status(kSolution);
    trace.discarded = pool.with_status(kDiscarded);
    if (trace.d_sequence.size() != trace.solution.size())
        throw std::logic_error("one degree must be recorded per solution vertex");
    trace.checks = trace_checks(metrics(g), trace);
    for (const auto& c : trace.checks)
        if (!c.ok)
            throw std::logic_error("trace bound '" + c.name + "' failed: " + std::to_string(c.lhs) +
                                   " > " + std::to_string(c.rhs));
    if (!is_k_component_set(g, trace.solution, feasibility_k))
        throw std::logic_error("greedy produced a component above the order bound");
}

}  // namespace detail

// Maximum dissociation set heuristic (components of order at most 2).
// Repeatedly takes an undecided vertex of minimum remaining degree. If it has
// a neighbor that currently sits alone in the solution, the two become a pair
// and everything undecided around either endpoint is discarded. Otherwise the
// vertex joins as a singleton and only undecided vertices adjacent to both it
// and some earlier singleton are discarded; those could otherwise glue two
// solution vertices into a path of three.
inline GreedyResult greedy_dissociation(const Graph& g, const GreedyOptions& opt = {}) {
    const int n = g.vertex_count();
    detail::UndecidedPool pool(g);
    std::vector<char> s_class(static_cast<size_t>(n), 0);  // 1 singleton, 2 paired
    std::vector<Vertex> partner(static_cast<size_t>(n), -1);
    GreedyTrace trace;
    trace.k = 2;
    while (pool.remaining() > 0) {
        const Vertex v = pool.pick_min_degree();
        GreedyIteration it;
        it.chosen = v;
        it.degree = pool.degree(v);
        trace.d_sequence.push_back(it.degree);
        pool.remove(v, detail::kSolution);
        Vertex p = -1;
        for (Vertex u : g.neighbors(v))
            if (s_class[static_cast<size_t>(u)] == 1) {
                p = u;  // neighbors are sorted, so this is the smallest such id
                break;
            }
        std::vector<Vertex> drop;
        if (p >= 0) {
            s_class[static_cast<size_t>(p)] = 2;
            s_class[static_cast<size_t>(v)] = 2;
            partner[static_cast<size_t>(p)] = v;
            partner[static_cast<size_t>(v)] = p;
            it.paired = p;
            for (Vertex u : g.neighbors(p))
                if (pool.undecided(u)) drop.push_back(u);
            for (Vertex u : g.neighbors(v))
                if (pool.undecided(u)) drop.push_back(u);
        } else {
            s_class[static_cast<size_t>(v)] = 1;
            for (Vertex u : g.neighbors(v)) {
                if (!pool.undecided(u)) continue;
                for (Vertex t : g.neighbors(u)) {
                    if (t != v && s_class[static_cast<size_t>(t)] == 1) {
                        drop.push_back(u);
                        break;
                    }
                }
            }
        }
        drop = canonical_set(std::move(drop));
        for (Vertex u : drop) pool.remove(u, detail::kDiscarded);
        it.moved_to_x = std::move(drop);
        trace.iterations.push_back(std::move(it));
        if (opt.check_invariants) {
            pool.verify_degrees();
            detail::verify_dissociation_structure(g, pool, s_class, partner);
        }
    }
    detail::finish_trace(g, pool, trace, 2);
    return {trace.solution, trace};
}

// General bound k: again take a minimum-degree undecided vertex, then discard
// every undecided vertex whose addition would now close a component of order
// k+1 or more. Only vertices with a solution neighbor can be affected, so the
// sweep is restricted to those.
inline GreedyResult greedy_k(const Graph& g, int k, const GreedyOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("component order bound k must be at least 1");
    const int n = g.vertex_count();
    detail::UndecidedPool pool(g);
    IncrementalComponents comps(g);
    std::vector<int> solution_neighbors(static_cast<size_t>(n), 0);
    GreedyTrace trace;
    trace.k = k;
    while (pool.remaining() > 0) {
        const Vertex v = pool.pick_min_degree();
        GreedyIteration it;
        it.chosen = v;
        it.degree = pool.degree(v);
        trace.d_sequence.push_back(it.degree);
        pool.remove(v, detail::kSolution);
        comps.insert(v);
        for (Vertex u : g.neighbors(v)) ++solution_neighbors[static_cast<size_t>(u)];
        std::vector<Vertex> drop;
        for (Vertex p = 0; p < n; ++p)
            if (pool.undecided(p) && solution_neighbors[static_cast<size_t>(p)] > 0 &&
                comps.would_exceed(p, k))
                drop.push_back(p);
        for (Vertex u : drop) pool.remove(u, detail::kDiscarded);
        it.moved_to_x = std::move(drop);
        trace.iterations.push_back(std::move(it));
        if (opt.check_invariants) {
            pool.verify_degrees();
            for (Vertex p = 0; p < n; ++p)
                if (pool.undecided(p) && comps.would_exceed(p, k))
                    throw std::logic_error("vertex " + std::to_string(p + 1) +
                                           " left undecided although adding it would exceed the bound");
        }
    }
    detail::finish_trace(g, pool, trace, k);
    return {trace.solution, trace};
}

// Human- and machine-readable trace report. Every line starts with '#', so
// the output can be appended to a solution file without breaking parsers.
inline std::string render_trace(const GreedyTrace& tr) {
    std::ostringstream out;
    out << "# trace k " << tr.k << '\n';
    out << "# trace d";
    for (int d : tr.d_sequence) out << ' ' << d;
    out << '\n';
    for (size_t i = 0; i < tr.iterations.size(); ++i) {
        const auto& it = tr.iterations[i];
        out << "# trace pick " << i + 1 << " v=" << it.chosen + 1 << " d=" << it.degree;
        if (it.paired >= 0) out << " paired=" << it.paired + 1;
        out << " dropped=";
        if (it.moved_to_x.empty()) {
            out << '-';
        } else {
            for (size_t j = 0; j < it.moved_to_x.size(); ++j) {
                if (j) out << ',';
                out << it.moved_to_x[j] + 1;
            }
        }
        out << '\n';
    }
    for (const auto& c : tr.checks)
        out << "# check " << c.name << ' ' << c.lhs << " <= " << c.rhs << ' '
            << (c.ok ? "ok" : "FAILED") << '\n';
    return out.str();
}

}  // namespace obcs
