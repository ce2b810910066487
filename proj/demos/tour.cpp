// A short walk through the library on a 5-cycle: solvers, the exact oracle,
// the doubling reduction, and rounding down to an independent set.

#include <iostream>

#include "obcs/obcs.hpp"

using namespace obcs;

static void show(const char* label, const VertexSet& s) {
    std::cout << label << ": " << format_vertex_list(s);
}

int main() {
    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const GraphMetrics mt = metrics(c5);
    std::cout << "C5: n=" << mt.n << " m=" << mt.m << " max_degree=" << mt.max_degree << '\n';

    const auto greedy = greedy_k(c5, 2);
    show("greedy (k=2)", greedy.set);
    std::cout << render_trace(greedy.trace);

    const auto exact = exact_comp_k(c5, 2);
    show("exact  (k=2)", exact.best_set);
    std::cout << "exact value " << exact.value << " after " << exact.explored << " nodes\n";

    const auto lr = local_ratio_k_obcs(c5, 2);
    show("local ratio", lr.set);
    std::cout << "weight " << c5.total_weight(lr.set) << " within factor " << mt.max_degree
              << " of the optimum\n";

    const auto map = double_graph(c5);
    std::cout << "doubled: n=" << map.target.vertex_count() << " m=" << map.target.edge_count()
              << '\n';
    const auto lifted = lift_solution(map, exact.best_set, 2);
    show("lifted (k=4)", lifted);
    const auto recovered = recover_solution(map, lifted, 2);
    show("recovered", recovered);

    const auto is = round_to_independent_set(c5, greedy.set, 2);
    show("independent subset", is);
    return 0;
}
