// experiment.hpp - Dataset generation, solver sweep over balance penalties,
// feasibility/optimality metrics with run-level dispersion, and reporting.
#ifndef HQP_EXPERIMENT_HPP
#define HQP_EXPERIMENT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hqp/annealing.hpp"
#include "hqp/encode.hpp"
#include "hqp/exact.hpp"
#include "hqp/qaoa.hpp"
#include "hqp/text_io.hpp"

namespace hqp {

inline std::string cut_kind_name(CutKind kind) {
    switch (kind) {
    case CutKind::AoN: return "aon";
    case CutKind::Quadratic: return "quadratic";
    case CutKind::Linear: return "linear";
    case CutKind::Ncut2: return "ncut2";
    case CutKind::KMinus1: return "kminus1";
    case CutKind::QuadraticMulti: return "quadratic-multi";
    case CutKind::NcutMulti: return "ncut-multi";
    case CutKind::Hrwc: return "hrwc";
    }
    throw std::logic_error("cut_kind_name: unhandled kind");
}

inline CutKind cut_kind_from_name(const std::string &name) {
    static const std::map<std::string, CutKind> names = {
        {"aon", CutKind::AoN},           {"quadratic", CutKind::Quadratic},
        {"linear", CutKind::Linear},     {"ncut2", CutKind::Ncut2},
        {"kminus1", CutKind::KMinus1},   {"quadratic-multi", CutKind::QuadraticMulti},
        {"ncut-multi", CutKind::NcutMulti}, {"hrwc", CutKind::Hrwc}};
    auto it = names.find(name);
    if (it == names.end())
        throw std::invalid_argument("unknown cut kind '" + name + "'");
    return it->second;
}

struct ExperimentConfig {
    std::vector<int> n_values = {8, 9, 10, 11, 12, 13, 14, 15};
    int instances = 100;
    int runs = 5;
    std::vector<double> lambda_values = {0.3, 1.0, 3.0};
    std::vector<std::string> solvers = {"exact", "sa", "qaoa"};
    CutKind cut = CutKind::AoN;
    int k = 2;
    int edge_size = 3;
    double avg_degree = 5.0;
    std::uint64_t base_seed = 42;
    SAParams sa;
    QAOAParams qaoa;
    bool record_timing = true;
    int threads = 0; // 0 = hardware concurrency

    void validate() const {
        if (instances < 1 || runs < 1 || n_values.empty() || lambda_values.empty() ||
            solvers.empty())
            throw std::invalid_argument("experiment: counts must be positive");
        for (const auto &s : solvers)
            if (s != "exact" && s != "sa" && s != "qaoa")
                throw std::invalid_argument("experiment: unknown solver '" + s + "'");
    }

    static ExperimentConfig from_json(const nlohmann::json &j) {
        ExperimentConfig cfg;
        if (j.contains("n_values")) cfg.n_values = j["n_values"].get<std::vector<int>>();
        if (j.contains("instances")) cfg.instances = j["instances"].get<int>();
        if (j.contains("runs")) cfg.runs = j["runs"].get<int>();
        if (j.contains("lambda_values"))
            cfg.lambda_values = j["lambda_values"].get<std::vector<double>>();
        if (j.contains("solvers")) cfg.solvers = j["solvers"].get<std::vector<std::string>>();
        if (j.contains("cut")) cfg.cut = cut_kind_from_name(j["cut"].get<std::string>());
        if (j.contains("k")) cfg.k = j["k"].get<int>();
        if (j.contains("edge_size")) cfg.edge_size = j["edge_size"].get<int>();
        if (j.contains("avg_degree")) cfg.avg_degree = j["avg_degree"].get<double>();
        if (j.contains("base_seed")) cfg.base_seed = j["base_seed"].get<std::uint64_t>();
        if (j.contains("sa_reads")) cfg.sa.reads = j["sa_reads"].get<int>();
        if (j.contains("sa_sweeps")) cfg.sa.sweeps = j["sa_sweeps"].get<int>();
        if (j.contains("sa_beta_min")) cfg.sa.beta_min = j["sa_beta_min"].get<double>();
        if (j.contains("sa_beta_max")) cfg.sa.beta_max = j["sa_beta_max"].get<double>();
        if (j.contains("qaoa_depth")) cfg.qaoa.depth = j["qaoa_depth"].get<int>();
        if (j.contains("qaoa_restarts")) cfg.qaoa.restarts = j["qaoa_restarts"].get<int>();
        if (j.contains("qaoa_max_iterations"))
            cfg.qaoa.max_iterations = j["qaoa_max_iterations"].get<int>();
        if (j.contains("qaoa_top_k")) cfg.qaoa.top_k = j["qaoa_top_k"].get<int>();
        if (j.contains("record_timing")) cfg.record_timing = j["record_timing"].get<bool>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        cfg.validate();
        return cfg;
    }
};

struct ReportRow {
    std::string solver;
    double lambda = 0.0;
    int n = 0;
    double feasibility_mean = 0.0;
    double feasibility_se = 0.0;
    double optimality_mean = 0.0;
    double optimality_se = 0.0;
    double mean_seconds = 0.0;
    // Not part of the emitted schema: feasible-but-suboptimal count, used by
    // conditional-optimality checks.
    long feasible_suboptimal = 0;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;

    const ReportRow &row(const std::string &solver, double lambda, int n) const {
        for (const auto &r : rows)
            if (r.solver == solver && r.lambda == lambda && r.n == n)
                return r;
        throw std::out_of_range("report: no such row");
    }
};

namespace detail {

struct CellOutcome {
    bool feasible = false;
    bool optimal = false;
    double seconds = 0.0;
};

inline double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename Fn> void parallel_for(std::size_t count, int threads, Fn &&fn) {
    unsigned t = threads > 0 ? static_cast<unsigned>(threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    t = std::min<std::size_t>(t, count);
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (auto &th : pool)
        th.join();
}

} // namespace detail

// Reproduces the evaluation protocol: per run, re-sample the instance set
// from a run-derived seed; per instance, solve with every (solver, lambda);
// feasibility counts balanced returns, optimality counts balanced returns
// whose cut matches the exact balanced optimum. Rates are averaged across
// runs with standard errors. Deterministic results for a fixed base seed.
inline ExperimentReport run_experiment(const ExperimentConfig &config) {
    config.validate();
    const CutFunction cut = CutFunction::simple(config.cut);
    EncodingSpec base_spec;
    base_spec.k = config.k;
    base_spec.cut = cut;
    const bool one_hot = uses_one_hot(base_spec);

    struct Task {
        int run, n_index, instance;
    };
    std::vector<Task> tasks;
    for (int run = 0; run < config.runs; ++run)
        for (int ni = 0; ni < static_cast<int>(config.n_values.size()); ++ni)
            for (int inst = 0; inst < config.instances; ++inst)
                tasks.push_back({run, ni, inst});

    const std::size_t cells = config.solvers.size() * config.lambda_values.size();
    std::vector<std::vector<detail::CellOutcome>> outcomes(
        tasks.size(), std::vector<detail::CellOutcome>(cells));

    detail::parallel_for(tasks.size(), config.threads, [&](std::size_t task_index) {
        const Task &task = tasks[task_index];
        const int n = config.n_values[task.n_index];
        const std::uint64_t run_seed = config.base_seed * 10007ULL +
                                       static_cast<std::uint64_t>(task.run);
        const std::uint64_t inst_seed = run_seed * 10009ULL +
                                        static_cast<std::uint64_t>(task.instance);
        const Hypergraph h =
            generate_random_uniform(n, config.edge_size, config.avg_degree, inst_seed);

        // Exact balanced optimum, computed once and shared across all
        // (solver, lambda) evaluations for this instance.
        const double t_exact0 = detail::now_seconds();
        const auto [opt_cut, opt_partition] = exact_balanced(h, cut, config.k);
        const double exact_seconds = detail::now_seconds() - t_exact0;

        // Composed energies per lambda, shared by SA and QAOA.
        std::vector<BinaryPolynomial> energies;
        const bool needs_energy =
            std::any_of(config.solvers.begin(), config.solvers.end(),
                        [](const std::string &s) { return s != "exact"; });
        if (needs_energy) {
            for (double lambda : config.lambda_values) {
                EncodingSpec spec = base_spec;
                spec.lambda = lambda;
                energies.push_back(build_energy(h, spec));
            }
        }

        for (std::size_t si = 0; si < config.solvers.size(); ++si) {
            const std::string &solver = config.solvers[si];
            for (std::size_t li = 0; li < config.lambda_values.size(); ++li) {
                detail::CellOutcome &cell = outcomes[task_index][si * config.lambda_values.size() + li];
                if (solver == "exact") {
                    cell = {true, true, exact_seconds};
                    continue;
                }
                const std::uint64_t solver_tag = solver == "sa" ? 1 : 2;
                const std::uint64_t seed =
                    rng::mix(rng::mix(inst_seed, solver_tag), static_cast<std::uint64_t>(li));
                const double t0 = detail::now_seconds();
                SolveResult result;
                if (solver == "sa") {
                    SAParams params = config.sa;
                    params.seed = seed;
                    const auto reads = simulated_annealing(energies[li], params);
                    result = best_read(reads);
                    finalize_result(result, h, cut, config.k, one_hot);
                } else {
                    QAOAParams params = config.qaoa;
                    params.seed = seed;
                    const auto output = qaoa_statevector(energies[li], params);
                    result = select_best_balanced(output.probabilities, h, cut, config.k,
                                                  params.top_k, one_hot);
                    result.energy = energies[li].evaluate(result.assignment);
                }
                cell.seconds = detail::now_seconds() - t0;
                cell.feasible = result.feasible;
                cell.optimal = result.feasible && std::abs(result.cut_value - opt_cut) <= 1e-9;
            }
        }
    });

    // Aggregation in (solver, lambda, n) order with per-run rates.
    ExperimentReport report;
    std::vector<std::size_t> solver_order(config.solvers.size());
    std::iota(solver_order.begin(), solver_order.end(), 0u);
    std::sort(solver_order.begin(), solver_order.end(), [&](std::size_t a, std::size_t b) {
        return config.solvers[a] < config.solvers[b];
    });
    std::vector<std::size_t> lambda_order(config.lambda_values.size());
    std::iota(lambda_order.begin(), lambda_order.end(), 0u);
    std::sort(lambda_order.begin(), lambda_order.end(), [&](std::size_t a, std::size_t b) {
        return config.lambda_values[a] < config.lambda_values[b];
    });

    for (std::size_t si : solver_order) {
        for (std::size_t li : lambda_order) {
            for (int ni = 0; ni < static_cast<int>(config.n_values.size()); ++ni) {
                ReportRow row;
                row.solver = config.solvers[si];
                row.lambda = config.lambda_values[li];
                row.n = config.n_values[ni];
                std::vector<double> feas_rates, opt_rates;
                double total_seconds = 0.0;
                long total_solves = 0;
                for (int run = 0; run < config.runs; ++run) {
                    long feasible = 0, optimal = 0;
                    for (int inst = 0; inst < config.instances; ++inst) {
                        const std::size_t task_index =
                            (static_cast<std::size_t>(run) * config.n_values.size() + ni) *
                                config.instances +
                            inst;
                        const auto &cell =
                            outcomes[task_index][si * config.lambda_values.size() + li];
                        feasible += cell.feasible;
                        optimal += cell.optimal;
                        row.feasible_suboptimal += cell.feasible && !cell.optimal;
                        total_seconds += cell.seconds;
                        ++total_solves;
                    }
                    feas_rates.push_back(static_cast<double>(feasible) / config.instances);
                    opt_rates.push_back(static_cast<double>(optimal) / config.instances);
                }
                auto mean_se = [](const std::vector<double> &rates) {
                    const double mean =
                        std::accumulate(rates.begin(), rates.end(), 0.0) / rates.size();
                    double se = 0.0;
                    if (rates.size() > 1) {
                        double var = 0.0;
                        for (double r : rates)
                            var += (r - mean) * (r - mean);
                        var /= static_cast<double>(rates.size() - 1);
                        se = std::sqrt(var / static_cast<double>(rates.size()));
                    }
                    return std::pair<double, double>(mean, se);
                };
                std::tie(row.feasibility_mean, row.feasibility_se) = mean_se(feas_rates);
                std::tie(row.optimality_mean, row.optimality_se) = mean_se(opt_rates);
                row.mean_seconds = config.record_timing ? total_seconds / total_solves : 0.0;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

namespace detail {

inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace detail

inline std::string emit_csv(const ExperimentReport &report) {
    std::string out =
        "solver,lambda,n,feasibility_mean,feasibility_se,optimality_mean,optimality_se,"
        "mean_seconds\n";
    for (const auto &row : report.rows) {
        out += row.solver + "," + detail::shortest(row.lambda) + "," + std::to_string(row.n) +
               "," + detail::fixed6(row.feasibility_mean) + "," +
               detail::fixed6(row.feasibility_se) + "," + detail::fixed6(row.optimality_mean) +
               "," + detail::fixed6(row.optimality_se) + "," +
               detail::fixed6(row.mean_seconds) + "\n";
    }
    return out;
}

inline std::string emit_json(const ExperimentReport &report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : report.rows) {
        rows.push_back({{"solver", row.solver},
                        {"lambda", row.lambda},
                        {"n", row.n},
                        {"feasibility_mean", row.feasibility_mean},
                        {"feasibility_se", row.feasibility_se},
                        {"optimality_mean", row.optimality_mean},
                        {"optimality_se", row.optimality_se},
                        {"mean_seconds", row.mean_seconds}});
    }
    return rows.dump(2) + "\n";
}

} // namespace hqp

#endif
