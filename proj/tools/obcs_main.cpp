// Command line front end for the bounded component set toolkit.
//
// Exit codes: 0 success (and feasible for `verify`), 1 infeasible solution or
// violated guarantee, 2 usage or input error, 3 refused by a size guard.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "obcs/obcs.hpp"

namespace {

struct CommonOpts {
    std::string format = "dimacs";
    std::uint64_t seed = 1;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "graph file format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}))
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "random seed, where the command uses randomness")
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "write the primary output here instead of stdout");
}

obcs::Graph read_graph(const std::string& path, const std::string& format) {
    const obcs::GraphFormat f = obcs::parse_format(format);
    if (path == "-") return obcs::load_graph(std::cin, f);
    return obcs::load_graph_file(path, f);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << content;
}

std::string solution_block(double value, const obcs::VertexSet& s) {
    std::ostringstream os;
    os << "# value " << obcs::detail::fmt_num(value) << '\n' << obcs::format_vertex_list(s);
    return os.str();
}

obcs::VertexSet read_solution(const std::string& path, const obcs::Graph& g) {
    if (path == "-") return obcs::parse_vertex_list(std::cin, g);
    return obcs::parse_vertex_list_file(path, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum bounded component set toolkit"};
    app.require_subcommand(1);

    // gen
    CommonOpts gen_opts;
    int gen_n = 0;
    double gen_p = 0.0;
    bool gen_weights = false;
    int gen_wmin = 1, gen_wmax = 10;
    auto* gen = app.add_subcommand("gen", "generate a seeded random graph");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability")->required();
    gen->add_flag("--weights", gen_weights, "attach random integer vertex weights");
    gen->add_option("--wmin", gen_wmin, "smallest weight")->capture_default_str();
    gen->add_option("--wmax", gen_wmax, "largest weight")->capture_default_str();
    add_common(gen, gen_opts);

    // solve
    CommonOpts solve_opts;
    std::string solve_algo;
    int solve_k = 2;
    bool solve_trace = false;
    std::string solve_input;
    auto* solve = app.add_subcommand("solve", "run an approximation solver");
    solve->add_option("--algo", solve_algo, "greedy, dissociation, or local-ratio")
        ->required()
        ->check(CLI::IsMember({"greedy", "dissociation", "local-ratio"}));
    solve->add_option("--k", solve_k, "component order bound")->capture_default_str();
    solve->add_flag("--trace", solve_trace, "append the pick sequence and bound checks");
    solve->add_option("input", solve_input, "graph file, or - for stdin")->required();
    add_common(solve, solve_opts);

    // oracle
    CommonOpts oracle_opts;
    int oracle_k = 2;
    int oracle_limit = obcs::kDefaultExactLimit;
    bool oracle_weighted = false;
    std::string oracle_input;
    auto* oracle = app.add_subcommand("oracle", "exact optimum by branch and bound");
    oracle->add_option("--k", oracle_k, "component order bound")->capture_default_str();
    oracle->add_option("--limit", oracle_limit, "largest vertex count accepted")
        ->capture_default_str();
    oracle->add_flag("--weighted", oracle_weighted, "maximize total weight instead of cardinality");
    oracle->add_option("input", oracle_input, "graph file, or - for stdin")->required();
    add_common(oracle, oracle_opts);

    // reduce
    CommonOpts reduce_opts;
    std::string reduce_op;
    int reduce_i = 1;
    long long reduce_budget = obcs::kDefaultComposeBudget;
    int reduce_k = 0;
    int reduce_target = 0;
    std::string reduce_sol, reduce_sol_side = "source", reduce_sol_out, reduce_input;
    auto* reduce = app.add_subcommand("reduce", "graph and solution transformations");
    reduce->add_option("--op", reduce_op, "double, compose, truncate, or to-is")
        ->required()
        ->check(CLI::IsMember({"double", "compose", "truncate", "to-is"}));
    reduce->add_option("--i", reduce_i, "number of doubling steps for compose")
        ->capture_default_str();
    reduce->add_option("--budget", reduce_budget, "vertex budget for compose")
        ->capture_default_str();
    reduce->add_option("--k", reduce_k, "component order bound of the given solution");
    reduce->add_option("--target", reduce_target, "target order for truncate");
    reduce->add_option("--sol", reduce_sol, "solution file to transform along the reduction");
    reduce->add_option("--sol-side", reduce_sol_side,
                       "whether --sol lives in the source or the target graph")
        ->check(CLI::IsMember({"source", "target"}))
        ->capture_default_str();
    reduce->add_option("--sol-out", reduce_sol_out, "where to write the transformed solution");
    reduce->add_option("input", reduce_input, "graph file, or - for stdin")->required();
    add_common(reduce, reduce_opts);

    // bench
    CommonOpts bench_opts;
    int bench_n = 0, bench_count = 1, bench_guard = obcs::kDefaultExactLimit, bench_workers = 0;
    double bench_p = 0.0;
    std::vector<int> bench_ks{2};
    std::vector<std::string> bench_algos{"greedy", "local-ratio"};
    std::vector<std::string> bench_files;
    bool bench_oracle = false, bench_weights = false, bench_timings = false;
    auto* bench = app.add_subcommand("bench", "run an experiment and emit a CSV report");
    bench->add_option("--n", bench_n, "vertex count of generated instances");
    bench->add_option("--p", bench_p, "edge probability of generated instances");
    bench->add_option("--count", bench_count, "number of generated instances")
        ->capture_default_str();
    bench->add_option("--files", bench_files, "benchmark these graph files instead of generating");
    bench->add_option("--k", bench_ks, "component order bounds")->capture_default_str();
    bench->add_option("--algos", bench_algos,
                      "algorithms: greedy, dissociation, local-ratio, oracle")
        ->capture_default_str();
    bench->add_flag("--oracle", bench_oracle, "compare every record against the exact optimum");
    bench->add_option("--guard", bench_guard, "largest vertex count the oracle accepts")
        ->capture_default_str();
    bench->add_flag("--weights", bench_weights, "generate integer vertex weights in [1, 10]");
    bench->add_flag("--timings", bench_timings, "add a wall_ms column (not byte-reproducible)");
    bench->add_option("--workers", bench_workers,
                      "parallel workers; 0 reads OBCS_WORKERS and defaults to 1")
        ->capture_default_str();
    add_common(bench, bench_opts);

    // verify
    CommonOpts verify_opts;
    int verify_k = 0;
    std::string verify_sol, verify_input;
    auto* verify = app.add_subcommand("verify", "check a solution against the order bound");
    verify->add_option("--k", verify_k, "component order bound")->required();
    verify->add_option("--sol", verify_sol, "solution file, or - for stdin")->required();
    verify->add_option("input", verify_input, "graph file, or - for stdin")->required();
    add_common(verify, verify_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            obcs::Graph g = obcs::gen_gnp(gen_n, gen_p, gen_opts.seed);
            if (gen_weights)
                g = obcs::with_integer_weights(g, gen_opts.seed ^ 0x9e3779b97f4a7c15ULL, gen_wmin,
                                               gen_wmax);
            write_output(gen_opts.out, obcs::serialize(g, obcs::parse_format(gen_opts.format)));
            return 0;
        }

        if (*solve) {
            const obcs::Graph g = read_graph(solve_input, solve_opts.format);
            std::ostringstream out;
            if (solve_algo == "local-ratio") {
                if (!g.weighted())
                    std::cerr << "note: input is unweighted, using unit weights\n";
                const auto res = obcs::local_ratio_k_obcs(g, solve_k);
                out << solution_block(g.total_weight(res.set), res.set);
                if (solve_trace) {
                    out << "# trace depth " << res.depth << '\n';
                    for (size_t i = 0; i < res.levels.size(); ++i) {
                        const auto& lvl = res.levels[i];
                        double released = 0.0;
                        for (const auto& [v, w] : lvl.support) released += w;
                        out << "# trace level " << i + 1 << " edge=(" << lvl.chosen.first + 1
                            << ',' << lvl.chosen.second + 1 << ") support=" << lvl.support.size()
                            << " released=" << obcs::detail::fmt_num(released) << '\n';
                    }
                }
            } else {
                if (solve_algo == "dissociation" && solve_k != 2)
                    throw std::invalid_argument("the dissociation solver only supports k = 2");
                const auto res = solve_algo == "dissociation" ? obcs::greedy_dissociation(g)
                                                              : obcs::greedy_k(g, solve_k);
                out << solution_block(static_cast<double>(res.set.size()), res.set);
                if (solve_trace) out << obcs::render_trace(res.trace);
            }
            write_output(solve_opts.out, out.str());
            return 0;
        }

        if (*oracle) {
            const obcs::Graph g = read_graph(oracle_input, oracle_opts.format);
            const auto res = oracle_weighted ? obcs::exact_weighted(g, oracle_k, oracle_limit)
                                             : obcs::exact_comp_k(g, oracle_k, oracle_limit);
            std::ostringstream out;
            out << "# value " << obcs::detail::fmt_num(res.value) << '\n'
                << "# explored " << res.explored << '\n'
                << obcs::format_vertex_list(res.best_set);
            write_output(oracle_opts.out, out.str());
            return 0;
        }

        if (*reduce) {
            const obcs::Graph g = read_graph(reduce_input, reduce_opts.format);
            const obcs::GraphFormat fmt = obcs::parse_format(reduce_opts.format);
            if (reduce_op == "double" || reduce_op == "compose") {
                const int steps = reduce_op == "double" ? 1 : reduce_i;
                const auto chain = obcs::compose_to_power(g, steps, reduce_budget);
                const obcs::Graph& final_graph = chain.empty() ? g : chain.back().target;
                write_output(reduce_opts.out, obcs::serialize(final_graph, fmt));
                if (!reduce_sol.empty()) {
                    if (reduce_k < 1)
                        throw std::invalid_argument("--sol requires --k for the given solution");
                    std::string transformed;
                    if (reduce_sol_side == "source") {
                        const auto s = read_solution(reduce_sol, g);
                        transformed =
                            obcs::format_vertex_list(obcs::lift_through(chain, s, reduce_k));
                    } else {
                        const auto s = read_solution(reduce_sol, final_graph);
                        transformed =
                            obcs::format_vertex_list(obcs::recover_through(chain, s, reduce_k));
                    }
                    if (reduce_sol_out.empty())
                        std::cout << transformed;
                    else
                        write_output(reduce_sol_out, transformed);
                }
                return 0;
            }
            if (reduce_sol.empty())
                throw std::invalid_argument("--op " + reduce_op + " requires --sol");
            if (reduce_k < 1) throw std::invalid_argument("--op " + reduce_op + " requires --k");
            const auto s = read_solution(reduce_sol, g);
            obcs::VertexSet result;
            if (reduce_op == "truncate") {
                if (reduce_target < 1)
                    throw std::invalid_argument("--op truncate requires --target");
                result = obcs::truncate_components(g, s, reduce_k, reduce_target);
            } else {
                result = obcs::round_to_independent_set(g, s, reduce_k);
            }
            write_output(reduce_opts.out, obcs::format_vertex_list(result));
            return 0;
        }

        if (*bench) {
            obcs::ExperimentSpec spec;
            if (!bench_files.empty()) {
                spec.files = bench_files;
            } else if (bench->count("--n") > 0) {
                spec.gnp = obcs::GnpFamily{bench_n, bench_p, bench_count};
            }
            spec.file_format = obcs::parse_format(bench_opts.format);
            spec.ks = bench_ks;
            for (const auto& name : bench_algos) spec.algos.push_back(obcs::parse_algo(name));
            spec.seed = bench_opts.seed;
            spec.random_weights = bench_weights;
            spec.with_oracle = bench_oracle;
            spec.oracle_guard = bench_guard;
            spec.timings = bench_timings;
            spec.workers = bench_workers;
            spec.out_path = bench_opts.out;
            const auto report = obcs::run_experiment(spec);
            if (spec.out_path.empty()) {
                std::cout << report.csv;
                std::cerr << report.summary;
            } else {
                std::cout << report.summary;
            }
            return 0;
        }

        if (*verify) {
            const obcs::Graph g = read_graph(verify_input, verify_opts.format);
            if (verify_k < 1) throw std::invalid_argument("k must be at least 1");
            const auto s = read_solution(verify_sol, g);
            const auto parts = obcs::components(g, s);
            std::ostringstream out;
            out << "components:";
            for (int o : parts.orders()) out << ' ' << o;
            out << '\n';
            out << "max_component_order: " << parts.max_order() << '\n';
            out << "selected: " << s.size() << '\n';
            const bool feasible = parts.max_order() <= verify_k;
            out << "feasible: " << (feasible ? "yes" : "no") << '\n';
            write_output(verify_opts.out, out.str());
            return feasible ? 0 : 1;
        }
    } catch (const obcs::GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const obcs::BoundViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const obcs::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const obcs::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const obcs::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
