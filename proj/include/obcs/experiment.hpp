#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "obcs/exact.hpp"
#include "obcs/gnp.hpp"
#include "obcs/graph.hpp"
#include "obcs/greedy.hpp"
#include "obcs/io.hpp"
#include "obcs/local_ratio.hpp"

namespace obcs {

enum class Algo { greedy, dissociation, local_ratio, oracle };

inline std::string algo_name(Algo a) {
    switch (a) {
        case Algo::greedy: return "greedy";
        case Algo::dissociation: return "dissociation";
        case Algo::local_ratio: return "local-ratio";
        case Algo::oracle: return "oracle";
    }
    throw std::logic_error("unknown algorithm tag");
}

inline Algo parse_algo(const std::string& name) {
    if (name == "greedy") return Algo::greedy;
    if (name == "dissociation") return Algo::dissociation;
    if (name == "local-ratio") return Algo::local_ratio;
    if (name == "oracle") return Algo::oracle;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

struct GnpFamily {
    int n = 0;
    double p = 0.0;
    int count = 1;
};

struct ExperimentSpec {
    std::optional<GnpFamily> gnp;      // exactly one of gnp / files
    std::vector<std::string> files;
    GraphFormat file_format = GraphFormat::dimacs;
    std::vector<int> ks;
    std::vector<Algo> algos;
    std::uint64_t seed = 1;
    bool random_weights = false;       // draw integer weights in [1, 10] per instance
    bool with_oracle = false;          // exact optima and ratio columns (forced on by Algo::oracle)
    int oracle_guard = kDefaultExactLimit;
    bool timings = false;              // adds a wall_ms column; breaks byte reproducibility
    int workers = 0;                   // 0: read OBCS_WORKERS, default 1
    std::string out_path;              // CSV destination, empty for none
};

struct RunRecord {
    std::string instance;
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    long long dbar_num = 0;            // 2m
    long long dbar_den = 1;            // n
    int k = 0;
    Algo algo = Algo::greedy;
    double value = 0.0;                // solution cardinality, or weight for local-ratio
    std::optional<double> oracle;      // exact optimum under the matching objective
    std::optional<double> ratio;       // oracle / value
    std::optional<double> bound;       // proven worst-case ratio
    bool bound_ok = true;              // exact integer check of the guarantee, when oracle is known
    double wall_ms = 0.0;
};

struct ExperimentReport {
    std::vector<RunRecord> records;
    std::string csv;
    std::string summary;
};

namespace detail {

// Integral doubles print without a decimal point; everything else gets a
// fixed significant-digit rendering so reports are byte-stable.
inline std::string fmt_num(double x) {
    if (std::floor(x) == x && std::fabs(x) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

inline int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("OBCS_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return std::min(v, 256);
    }
    return 1;
}

struct Instance {
    std::string name;
    Graph graph;
};

inline std::vector<Instance> materialize_instances(const ExperimentSpec& spec) {
    std::vector<Instance> out;
    if (spec.gnp) {
        const auto& fam = *spec.gnp;
        for (int idx = 0; idx < fam.count; ++idx) {
            const std::uint64_t graph_seed = spec.seed + static_cast<std::uint64_t>(idx);
            Graph g = gen_gnp(fam.n, fam.p, graph_seed);
            if (spec.random_weights)
                g = with_integer_weights(g, graph_seed ^ 0x9e3779b97f4a7c15ULL);
            std::ostringstream name;
            name << "gnp-n" << fam.n << "-p" << fmt_num(fam.p) << "-s" << graph_seed;
            out.push_back({name.str(), std::move(g)});
        }
    } else {
        for (const auto& path : spec.files)
            out.push_back({path, load_graph_file(path, spec.file_format)});
    }
    return out;
}

// The guarantees behind the ratio columns, checked without floating point:
//   greedy family:  opt * n <= |S| * ((2k-1) * 2m + k * n)
//   local ratio:    opt_w <= w(S) * max_degree, exact optimality if edgeless
inline bool greedy_bound_holds(long long opt, long long size, long long n, long long m, long long k) {
    return opt * n <= size * ((2 * k - 1) * 2 * m + k * n);
}

inline bool local_ratio_bound_holds(double value, double opt, int max_degree) {
    if (max_degree < 1) return value == opt;
    return value * max_degree >= opt;  // exact for the integral weights the harness generates
}

}  // namespace detail

inline void validate(const ExperimentSpec& spec) {
    if (spec.gnp.has_value() == !spec.files.empty())
        throw ConfigError("specify exactly one instance family: gnp or files");
    if (spec.gnp) {
        if (spec.gnp->n < 0) throw ConfigError("gnp vertex count must be non-negative");
        if (spec.gnp->count < 1) throw ConfigError("gnp instance count must be positive");
        if (!(spec.gnp->p >= 0.0 && spec.gnp->p <= 1.0))
            throw ConfigError("gnp edge probability must lie in [0, 1]");
    }
    if (spec.ks.empty()) throw ConfigError("at least one k is required");
    for (int k : spec.ks)
        if (k < 1) throw ConfigError("every k must be at least 1");
    if (spec.algos.empty()) throw ConfigError("at least one algorithm is required");
    bool wants_dissociation = false;
    for (Algo a : spec.algos) wants_dissociation |= a == Algo::dissociation;
    if (wants_dissociation) {
        bool has_two = false;
        for (int k : spec.ks) has_two |= k == 2;
        if (!has_two) throw ConfigError("the dissociation solver only runs at k = 2");
    }
    if (spec.oracle_guard < 0) throw ConfigError("oracle guard must be non-negative");
    if (spec.workers < 0) throw ConfigError("worker count must be non-negative");
}

// Runs every (instance, k, algorithm) combination, checks each proven bound
// exactly, and assembles a CSV report plus a short summary. The record order
// is (instance, k, algorithm) regardless of scheduling, and with timings off
// the report bytes depend only on the spec and the seed.
inline ExperimentReport run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    std::vector<int> ks = spec.ks;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    bool run_algo[4] = {false, false, false, false};
    for (Algo a : spec.algos) run_algo[static_cast<int>(a)] = true;
    const bool with_oracle = spec.with_oracle || run_algo[static_cast<int>(Algo::oracle)];

    std::vector<detail::Instance> instances = detail::materialize_instances(spec);
    if (with_oracle)
        for (const auto& inst : instances)
            if (inst.graph.vertex_count() > spec.oracle_guard)
                throw ConfigError("instance '" + inst.name + "' has " +
                                  std::to_string(inst.graph.vertex_count()) +
                                  " vertices, above the oracle guard of " +
                                  std::to_string(spec.oracle_guard));

    std::vector<std::vector<RunRecord>> slots(instances.size());
    const auto process = [&](size_t idx) {
        const auto& inst = instances[idx];
        const Graph& g = inst.graph;
        const GraphMetrics mt = metrics(g);
        auto base_record = [&](int k, Algo a) {
            RunRecord r;
            r.instance = inst.name;
            r.n = mt.n;
            r.m = mt.m;
            r.max_degree = mt.max_degree;
            r.dbar_num = mt.avg_degree_num;
            r.dbar_den = mt.avg_degree_den;
            r.k = k;
            r.algo = a;
            return r;
        };
        auto timed = [&](RunRecord& r, const auto& fn) {
            const auto start = std::chrono::steady_clock::now();
            fn();
            const auto stop = std::chrono::steady_clock::now();
            r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        };
        for (int k : ks) {
            std::optional<double> opt_card;
            std::optional<double> opt_weight;
            if (with_oracle) {
                opt_card = exact_comp_k(g, k, spec.oracle_guard).value;
                if (run_algo[static_cast<int>(Algo::local_ratio)] && k >= 2)
                    opt_weight = exact_weighted(g, k, spec.oracle_guard).value;
            }
            if (run_algo[static_cast<int>(Algo::greedy)]) {
                RunRecord r = base_record(k, Algo::greedy);
                timed(r, [&] { r.value = static_cast<double>(greedy_k(g, k).set.size()); });
                r.bound = (2.0 * k - 1.0) * mt.avg_degree() + k;
                if (opt_card) {
                    r.oracle = opt_card;
                    if (r.value > 0.0) r.ratio = *opt_card / r.value;
                    r.bound_ok = detail::greedy_bound_holds(
                        static_cast<long long>(*opt_card), static_cast<long long>(r.value), mt.n,
                        mt.m, k);
                }
                slots[idx].push_back(std::move(r));
            }
            if (run_algo[static_cast<int>(Algo::dissociation)] && k == 2) {
                RunRecord r = base_record(k, Algo::dissociation);
                timed(r, [&] { r.value = static_cast<double>(greedy_dissociation(g).set.size()); });
                r.bound = 3.0 * mt.avg_degree() + 2.0;
                if (opt_card) {
                    r.oracle = opt_card;
                    if (r.value > 0.0) r.ratio = *opt_card / r.value;
                    r.bound_ok = detail::greedy_bound_holds(
                        static_cast<long long>(*opt_card), static_cast<long long>(r.value), mt.n,
                        mt.m, 2);
                }
                slots[idx].push_back(std::move(r));
            }
            if (run_algo[static_cast<int>(Algo::local_ratio)] && k >= 2) {
                RunRecord r = base_record(k, Algo::local_ratio);
                timed(r, [&] {
                    const auto res = local_ratio_k_obcs(g, k);
                    r.value = g.total_weight(res.set);
                });
                r.bound = static_cast<double>(mt.max_degree);
                if (opt_weight) {
                    r.oracle = opt_weight;
                    if (r.value > 0.0) r.ratio = *opt_weight / r.value;
                    r.bound_ok = detail::local_ratio_bound_holds(r.value, *opt_weight, mt.max_degree);
                }
                slots[idx].push_back(std::move(r));
            }
            if (run_algo[static_cast<int>(Algo::oracle)]) {
                RunRecord r = base_record(k, Algo::oracle);
                timed(r, [&] {
                    if (!g.weighted())
                        r.value = *opt_card;
                    else if (opt_weight)
                        r.value = *opt_weight;
                    else
                        r.value = exact_weighted(g, k, spec.oracle_guard).value;
                });
                r.oracle = r.value;
                if (r.value > 0.0) r.ratio = 1.0;
                slots[idx].push_back(std::move(r));
            }
        }
    };

    const int workers = detail::worker_count(spec.workers);
    if (workers <= 1 || instances.size() <= 1) {
        for (size_t i = 0; i < instances.size(); ++i) process(i);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        const int spawn = std::min<int>(workers, static_cast<int>(instances.size()));
        for (int t = 0; t < spawn; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= instances.size()) return;
                    try {
                        process(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    ExperimentReport report;
    for (auto& slot : slots)
        for (auto& r : slot) report.records.push_back(std::move(r));

    for (const auto& r : report.records)
        if (!r.bound_ok)
            throw BoundViolation("record " + r.instance + " k=" + std::to_string(r.k) + " " +
                                 algo_name(r.algo) + " violates its proven bound");

    std::ostringstream csv;
    csv << "instance,n,m,max_degree,avg_degree_exact,avg_degree,k,algorithm,value,oracle,ratio,"
           "bound,bound_ok";
    if (spec.timings) csv << ",wall_ms";
    csv << '\n';
    for (const auto& r : report.records) {
        csv << r.instance << ',' << r.n << ',' << r.m << ',' << r.max_degree << ',' << r.dbar_num
            << '/' << r.dbar_den << ',' << detail::fmt_num(r.dbar_den ? static_cast<double>(r.dbar_num) / static_cast<double>(r.dbar_den) : 0.0)
            << ',' << r.k << ',' << algo_name(r.algo) << ',' << detail::fmt_num(r.value) << ',';
        if (r.oracle) csv << detail::fmt_num(*r.oracle);
        csv << ',';
        if (r.ratio) csv << detail::fmt_num(*r.ratio);
        csv << ',';
        if (r.bound) csv << detail::fmt_num(*r.bound);
        csv << ',' << (r.bound_ok ? 1 : 0);
        if (spec.timings) csv << ',' << detail::fmt_num(r.wall_ms);
        csv << '\n';
    }
    report.csv = csv.str();

    std::ostringstream summary;
    summary << "records=" << report.records.size() << " instances=" << instances.size() << '\n';
    for (int ai = 0; ai < 4; ++ai) {
        if (!run_algo[ai]) continue;
        const Algo a = static_cast<Algo>(ai);
        size_t count = 0, compared = 0;
        double max_ratio = 0.0;
        bool any_ratio = false;
        for (const auto& r : report.records) {
            if (r.algo != a) continue;
            ++count;
            if (r.ratio) {
                ++compared;
                any_ratio = true;
                max_ratio = std::max(max_ratio, *r.ratio);
            }
        }
        summary << "algo=" << algo_name(a) << " records=" << count;
        if (any_ratio)
            summary << " oracle_compared=" << compared << " max_ratio=" << detail::fmt_num(max_ratio);
        summary << '\n';
    }
    report.summary = summary.str();

    if (!spec.out_path.empty()) {
        std::ofstream out(spec.out_path);
        if (!out) throw std::runtime_error("cannot open '" + spec.out_path + "' for writing");
        out << report.csv;
    }
    return report;
}

}  // namespace obcs
