// Acceptance gate: eight end-to-end checks over seeded instance suites, one
// [PASS]/[FAIL] line each. Exits 0 only when every check passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../brute_oracle.hpp"
#include "obcs/obcs.hpp"

using namespace obcs;

namespace {

int failed_criteria = 0;

void report(int idx, bool ok, const std::string& label, const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", ok ? "PASS" : "FAIL", idx, label.c_str(), detail.c_str());
    if (!ok) ++failed_criteria;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string stats(long long checks, long long failures, double elapsed) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%lld checks, %lld failures, %.2fs", checks, failures,
                  elapsed);
    return buf;
}

const double kPs[3] = {0.1, 0.25, 0.5};

// 200 seeded instances covering every vertex count in [1, 16] and all three
// densities.
std::vector<Graph> suite_one() {
    std::vector<Graph> out;
    out.reserve(200);
    for (int idx = 0; idx < 200; ++idx)
        out.push_back(gen_gnp(1 + idx % 16, kPs[idx % 3], 1000 + static_cast<std::uint64_t>(idx)));
    return out;
}

// 100 seeded instances with integer vertex weights in [1, 10] and n <= 12.
std::vector<Graph> weighted_suite() {
    std::vector<Graph> out;
    out.reserve(100);
    for (int idx = 0; idx < 100; ++idx) {
        const std::uint64_t seed = 2000 + static_cast<std::uint64_t>(idx);
        out.push_back(
            with_integer_weights(gen_gnp(1 + idx % 12, kPs[idx % 3], seed),
                                 seed ^ 0x9e3779b97f4a7c15ULL));
    }
    return out;
}

bool connected(const Graph& g) {
    VertexSet all(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
    return components(g, all).components.size() == 1;
}

// 1. Every solver output respects the component order bound.
void criterion_feasibility(const std::vector<Graph>& suite) {
    const auto start = std::chrono::steady_clock::now();
    long long checks = 0, failures = 0;
    for (const Graph& g : suite) {
        for (int k = 1; k <= 4; ++k) {
            ++checks;
            if (!is_k_component_set(g, greedy_k(g, k).set, k)) ++failures;
            if (k >= 2) {
                ++checks;
                if (!is_k_component_set(g, local_ratio_k_obcs(g, k).set, k)) ++failures;
            }
        }
        ++checks;
        if (!is_k_component_set(g, greedy_dissociation(g).set, 2)) ++failures;
    }
    const double elapsed = seconds_since(start);
    report(1, failures == 0 && elapsed < 10.0, "solver outputs stay within the order bound",
           stats(checks, failures, elapsed));
}

// 2. The greedy trace inequalities and the solution size floor hold in exact
// integer arithmetic on every run.
void criterion_trace_bounds(const std::vector<Graph>& suite) {
    const auto start = std::chrono::steady_clock::now();
    long long checks = 0, failures = 0;
    const auto audit = [&](const Graph& g, const GreedyTrace& tr) {
        for (const TraceCheck& c : trace_checks(metrics(g), tr)) {
            ++checks;
            if (!c.ok || c.lhs > c.rhs) ++failures;
        }
    };
    for (const Graph& g : suite) {
        for (int k = 1; k <= 4; ++k) audit(g, greedy_k(g, k).trace);
        audit(g, greedy_dissociation(g).trace);
    }
    report(2, failures == 0, "greedy trace inequalities hold in exact integers",
           stats(checks, failures, seconds_since(start)));
}

// 3. The weighted solver's value is within a max degree factor of the exact
// optimum, or exactly optimal on edgeless instances.
void criterion_weighted_guarantee(const std::vector<Graph>& suite) {
    const auto start = std::chrono::steady_clock::now();
    long long checks = 0, failures = 0;
    for (const Graph& g : suite) {
        const int delta = metrics(g).max_degree;
        for (int k = 2; k <= 3; ++k) {
            const auto res = local_ratio_k_obcs(g, k);
            const long long value = std::llround(g.total_weight(res.set));
            const long long opt = std::llround(exact_weighted(g, k).value);
            ++checks;
            const bool ok = is_k_component_set(g, res.set, k) &&
                            (delta >= 1 ? value * delta >= opt : value == opt);
            if (!ok) ++failures;
        }
    }
    const double elapsed = seconds_since(start);
    report(3, failures == 0 && elapsed < 60.0, "weighted solutions meet the degree factor",
           stats(checks, failures, elapsed));
}

// 4. Doubling a connected graph exactly doubles the optimum, and solutions
// transport both ways.
void criterion_doubling(const std::vector<Graph>& suite) {
    const auto start = std::chrono::steady_clock::now();
    long long checks = 0, failures = 0;
    int used = 0;
    for (const Graph& g : suite) {
        if (g.vertex_count() > 8 || !connected(g)) continue;
        ++used;
        const auto map = double_graph(g);
        for (int k = 1; k <= 2; ++k) {
            const auto best = exact_comp_k(g, k);
            const auto best2 = exact_comp_k(map.target, 2 * k);
            ++checks;
            if (best2.value != 2.0 * best.value) ++failures;

            const auto lifted = lift_solution(map, best.best_set, k);
            ++checks;
            if (lifted.size() != 2 * best.best_set.size() ||
                !is_k_component_set(map.target, lifted, 2 * k))
                ++failures;

            const auto rec = recover_solution(map, best2.best_set, k);
            ++checks;
            if (2 * rec.size() < best2.best_set.size() || !is_k_component_set(g, rec, k))
                ++failures;
        }
    }
    const double elapsed = seconds_since(start);
    report(4, failures == 0 && used > 0 && elapsed < 120.0,
           "doubling preserves optima and transports solutions",
           stats(checks, failures, elapsed) + ", " + std::to_string(used) + " connected instances");
}

// 5. Rounding any feasible solution yields an independent set of at least a
// 1/k fraction, with the stronger half floor at k = 2.
void criterion_rounding(const std::vector<Graph>& suite) {
    const auto start = std::chrono::steady_clock::now();
    long long checks = 0, failures = 0;
    const auto audit = [&](const Graph& g, const VertexSet& s, int k) {
        const auto is = round_to_independent_set(g, s, k);
        ++checks;
        bool ok = testutil::brute_independent(g, is);
        const size_t floor = (s.size() + static_cast<size_t>(k) - 1) / static_cast<size_t>(k);
        ok = ok && is.size() >= floor;
        if (k == 2) ok = ok && 2 * is.size() >= s.size();
        if (!ok) ++failures;
    };
    for (const Graph& g : suite) {
        for (int k = 1; k <= 4; ++k) {
            audit(g, greedy_k(g, k).set, k);
            audit(g, exact_comp_k(g, k).best_set, k);
        }
    }
    report(5, failures == 0, "rounded independent sets reach the 1/k floor",
           stats(checks, failures, seconds_since(start)));
}

// 6. The incremental component tracker agrees with full recomputation across
// at least ten thousand randomized insert/query interleavings.
void criterion_incremental() {
    const auto start = std::chrono::steady_clock::now();
    long long events = 0, failures = 0;
    std::mt19937_64 rng(777);
    const double densities[3] = {0.1, 0.3, 0.6};
    for (int rep = 0; events < 10500; ++rep) {
        const int n = 2 + rep % 23;
        const Graph g = gen_gnp(n, densities[rep % 3], rng());
        std::vector<Vertex> order(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
        std::shuffle(order.begin(), order.end(), rng);

        IncrementalComponents inc(g);
        VertexSet selected;
        for (Vertex p : order) {
            bool ok = !inc.contains(p);

            // the predicted joined order must match a fresh recomputation
            VertexSet with_p = selected;
            with_p.push_back(p);
            const auto parts_with = components(g, with_p);
            int recomputed = -1;
            for (const auto& comp : parts_with.components)
                if (std::binary_search(comp.begin(), comp.end(), p))
                    recomputed = static_cast<int>(comp.size());
            const int predicted = inc.joined_order(p);
            ok = ok && predicted == recomputed;
            for (int k : {1, 2, 4}) ok = ok && inc.would_exceed(p, k) == (predicted >= k + 1);

            inc.insert(p);
            selected.push_back(p);
            ok = ok && inc.contains(p) && inc.size() == static_cast<int>(selected.size());

            // every component's order must match, and the member list too
            for (const auto& comp : components(g, selected).components) {
                ok = ok && inc.component_order(comp.front()) == static_cast<int>(comp.size());
                ok = ok && inc.component_order(comp.back()) == static_cast<int>(comp.size());
            }
            ok = ok && inc.members() == canonical_set(selected);

            ++events;
            if (!ok) ++failures;
        }
    }
    report(6, failures == 0 && events >= 10000, "incremental components match recomputation",
           stats(events, failures, seconds_since(start)));
}

// 7. Fixed seeds reproduce every byte: serialization, traces, solver output,
// and the benchmark report.
void criterion_determinism() {
    const auto start = std::chrono::steady_clock::now();
    struct Golden {
        std::string dimacs, edgelist, greedy_trace, greedy_set, diss_trace, lr_set, oracle, csv;
        size_t records = 0;
        bool flags_ok = true;
        bool operator==(const Golden& o) const {
            return dimacs == o.dimacs && edgelist == o.edgelist &&
                   greedy_trace == o.greedy_trace && greedy_set == o.greedy_set &&
                   diss_trace == o.diss_trace && lr_set == o.lr_set && oracle == o.oracle &&
                   csv == o.csv && records == o.records;
        }
    };
    const auto run_once = [] {
        Golden out;
        const Graph g = gen_gnp(8, 0.3, 1);
        out.dimacs = serialize(g, GraphFormat::dimacs);
        out.edgelist = serialize(g, GraphFormat::edgelist);
        const auto gr = greedy_k(g, 2);
        out.greedy_trace = render_trace(gr.trace);
        out.greedy_set = format_vertex_list(gr.set);
        out.diss_trace = render_trace(greedy_dissociation(g).trace);
        out.lr_set = format_vertex_list(local_ratio_k_obcs(g, 2).set);
        const auto ex = exact_comp_k(g, 2);
        std::ostringstream oracle;
        oracle << ex.value << '/' << ex.explored << '/' << format_vertex_list(ex.best_set);
        out.oracle = oracle.str();

        ExperimentSpec spec;
        spec.gnp = GnpFamily{8, 0.3, 5};
        spec.seed = 1;
        spec.ks = {2};
        spec.algos = {Algo::greedy, Algo::local_ratio, Algo::oracle};
        const auto rep = run_experiment(spec);
        out.csv = rep.csv;
        out.records = rep.records.size();
        for (const auto& r : rep.records) out.flags_ok = out.flags_ok && r.bound_ok;
        return out;
    };
    const Golden a = run_once();
    const Golden b = run_once();
    const bool ok = a == b && a.records == 15 && a.flags_ok && b.flags_ok;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds_since(start));
    std::ostringstream detail;
    detail << "serialization, traces, solver sets, " << a.records << "-record report, " << timing;
    report(7, ok, "fixed seeds reproduce identical bytes", detail.str());
}

// 8. Truncating from order 3 to order 2 keeps at least half of every greedy
// solution, checked in exact integers.
void criterion_truncation(const std::vector<Graph>& suite) {
    const auto start = std::chrono::steady_clock::now();
    long long checks = 0, failures = 0;
    for (const Graph& g : suite) {
        const auto s = greedy_k(g, 3).set;
        const auto cut = truncate_components(g, s, 3, 2);
        ++checks;
        if (!is_k_component_set(g, cut, 2) || 2 * cut.size() < s.size()) ++failures;
    }
    report(8, failures == 0, "truncation keeps the guaranteed fraction",
           stats(checks, failures, seconds_since(start)));
}

}  // namespace

int main() {
    const auto suite = suite_one();
    const auto weighted = weighted_suite();

    criterion_feasibility(suite);
    criterion_trace_bounds(suite);
    criterion_weighted_guarantee(weighted);
    criterion_doubling(suite);
    criterion_rounding(suite);
    criterion_incremental();
    criterion_determinism();
    criterion_truncation(suite);

    if (failed_criteria == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 8 criteria failed\n", failed_criteria);
    return 1;
}
