// hqp command line: instance generation, encoding construction, single-solve,
// the full experiment sweep, and polynomial/Ising text conversion.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hqp/annealing.hpp"
#include "hqp/encode.hpp"
#include "hqp/exact.hpp"
#include "hqp/experiment.hpp"
#include "hqp/qaoa.hpp"
#include "hqp/quadratize.hpp"
#include "hqp/text_io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

std::vector<double> read_matrix(const std::string &path, int n) {
    std::istringstream in(read_file(path));
    std::vector<double> matrix;
    double v;
    while (in >> v)
        matrix.push_back(v);
    if (static_cast<int>(matrix.size()) != n * n)
        throw std::runtime_error("transition matrix in '" + path + "' is not " +
                                 std::to_string(n) + "x" + std::to_string(n));
    return matrix;
}

hqp::EncodingSpec make_spec(const std::string &cut_name, int k, double lambda,
                            std::optional<double> alpha, const std::string &hrwc_matrix_path,
                            const hqp::Hypergraph &h) {
    hqp::EncodingSpec spec;
    spec.k = k;
    spec.lambda = lambda;
    spec.alpha = alpha;
    const hqp::CutKind kind = hqp::cut_kind_from_name(cut_name);
    if (kind == hqp::CutKind::Hrwc) {
        if (hrwc_matrix_path.empty())
            throw std::runtime_error("cut 'hrwc' requires --hrwc-matrix");
        spec.cut = hqp::CutFunction::hrwc(read_matrix(hrwc_matrix_path, h.num_vertices()),
                                          h.num_vertices());
    } else {
        spec.cut = hqp::CutFunction::simple(kind);
    }
    return spec;
}

nlohmann::json result_to_json(const hqp::SolveResult &result) {
    nlohmann::json j;
    j["solver"] = result.solver;
    j["seed"] = result.seed;
    j["feasible"] = result.feasible;
    j["energy"] = result.energy;
    if (std::isnan(result.cut_value))
        j["cut_value"] = nullptr;
    else
        j["cut_value"] = result.cut_value;
    j["assignment"] = std::vector<int>(result.assignment.begin(), result.assignment.end());
    if (result.decoded)
        j["labels"] = result.decoded->labels;
    else
        j["labels"] = nullptr;
    j["seconds"] = result.seconds;
    return j;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Balanced hypergraph partitioning via binary optimization encodings"};
    app.require_subcommand(1);

    // gen
    auto *gen = app.add_subcommand("gen", "Generate random connected uniform hypergraphs");
    int gen_n = 8, gen_r = 3, gen_count = 1;
    double gen_avg_degree = 5.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out_dir = ".";
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--r", gen_r, "hyperedge size");
    gen->add_option("--avg-degree", gen_avg_degree, "target average node degree");
    gen->add_option("--count", gen_count, "number of instances");
    gen->add_option("--seed", gen_seed, "base seed");
    gen->add_option("--out-dir", gen_out_dir, "output directory");

    // build
    auto *build = app.add_subcommand("build", "Print the composed energy polynomial");
    std::string build_input, build_cut = "aon", build_format = "qubo", build_hrwc;
    int build_k = 2;
    double build_lambda = 1.0;
    std::optional<double> build_alpha;
    build->add_option("--input", build_input, "hMETIS instance file")->required();
    build->add_option("--cut", build_cut, "cut kind");
    build->add_option("--k", build_k, "part count");
    build->add_option("--lambda", build_lambda, "balance penalty weight");
    build->add_option("--alpha", build_alpha, "one-hot validity weight");
    build->add_option("--format", build_format, "qubo or ising")
        ->check(CLI::IsMember({"qubo", "ising"}));
    build->add_option("--hrwc-matrix", build_hrwc, "transition matrix file for hrwc");

    // solve
    auto *solve = app.add_subcommand("solve", "Solve one instance with one solver");
    std::string solve_input, solve_solver = "exact", solve_cut = "aon", solve_hrwc;
    int solve_k = 2, solve_reads = 100, solve_sweeps = 1000, solve_depth = 1, solve_topk = 10;
    int solve_restarts = 10;
    double solve_lambda = 1.0;
    std::optional<double> solve_alpha;
    std::uint64_t solve_seed = 0;
    solve->add_option("--input", solve_input, "hMETIS instance file")->required();
    solve->add_option("--solver", solve_solver, "exact, sa, or qaoa")
        ->check(CLI::IsMember({"exact", "sa", "qaoa"}));
    solve->add_option("--cut", solve_cut, "cut kind");
    solve->add_option("--k", solve_k, "part count");
    solve->add_option("--lambda", solve_lambda, "balance penalty weight");
    solve->add_option("--alpha", solve_alpha, "one-hot validity weight");
    solve->add_option("--seed", solve_seed, "solver seed");
    solve->add_option("--reads", solve_reads, "SA reads");
    solve->add_option("--sweeps", solve_sweeps, "SA sweeps per read");
    solve->add_option("--depth", solve_depth, "QAOA circuit depth");
    solve->add_option("--restarts", solve_restarts, "QAOA optimizer restarts");
    solve->add_option("--topk", solve_topk, "QAOA selection pool size");
    solve->add_option("--hrwc-matrix", solve_hrwc, "transition matrix file for hrwc");

    // experiment
    auto *experiment = app.add_subcommand("experiment", "Run the feasibility/optimality sweep");
    std::string exp_config, exp_out, exp_format = "csv";
    experiment->add_option("--config", exp_config, "flat JSON config file");
    experiment->add_option("--out", exp_out, "report output path")->required();
    experiment->add_option("--format", exp_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // convert
    auto *convert = app.add_subcommand("convert", "Translate polynomial text <-> Ising text");
    std::string conv_input, conv_out, conv_to = "ising";
    convert->add_option("--input", conv_input, "input file")->required();
    convert->add_option("--out", conv_out, "output file (stdout when omitted)");
    convert->add_option("--to", conv_to, "target format")
        ->check(CLI::IsMember({"ising", "qubo"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::filesystem::create_directories(gen_out_dir);
            for (int i = 0; i < gen_count; ++i) {
                const std::uint64_t seed = gen_seed * 10009ULL + static_cast<std::uint64_t>(i);
                const auto h = hqp::generate_random_uniform(gen_n, gen_r, gen_avg_degree, seed);
                char name[64];
                std::snprintf(name, sizeof(name), "instance_%04d.hgr", i);
                write_file((std::filesystem::path(gen_out_dir) / name).string(),
                           hqp::serialize_hmetis(h));
            }
            std::cout << "wrote " << gen_count << " instance(s) to " << gen_out_dir << "\n";
            return 0;
        }

        if (build->parsed()) {
            const auto h = hqp::parse_hmetis(read_file(build_input));
            const auto spec = make_spec(build_cut, build_k, build_lambda, build_alpha,
                                        build_hrwc, h);
            auto energy = hqp::build_energy(h, spec);
            if (build_format == "qubo") {
                std::cout << hqp::polynomial_to_text(energy);
            } else {
                if (energy.degree() > 2)
                    energy = hqp::quadratize_rosenberg(energy).poly;
                std::cout << hqp::ising_to_text(hqp::to_ising(energy));
            }
            return 0;
        }

        if (solve->parsed()) {
            const auto h = hqp::parse_hmetis(read_file(solve_input));
            const auto spec = make_spec(solve_cut, solve_k, solve_lambda, solve_alpha,
                                        solve_hrwc, h);
            const bool one_hot = hqp::uses_one_hot(spec);
            const auto t0 = std::chrono::steady_clock::now();
            hqp::SolveResult result;
            if (solve_solver == "exact") {
                const auto [opt_cut, partition] = hqp::exact_balanced(h, spec.cut, spec.k);
                result.solver = "exact";
                result.decoded = partition;
                result.feasible = true;
                result.cut_value = opt_cut;
                if (one_hot) {
                    result.assignment.assign(h.num_vertices() * spec.k, 0);
                    for (int i = 0; i < h.num_vertices(); ++i)
                        result.assignment[hqp::one_hot_var(i, partition.labels[i], spec.k)] = 1;
                } else {
                    result.assignment.assign(partition.labels.begin(), partition.labels.end());
                }
                result.energy = hqp::build_energy(h, spec).evaluate(result.assignment);
            } else {
                const auto energy = hqp::build_energy(h, spec);
                if (solve_solver == "sa") {
                    hqp::SAParams params;
                    params.reads = solve_reads;
                    params.sweeps = solve_sweeps;
                    params.seed = solve_seed;
                    result = hqp::best_read(hqp::simulated_annealing(energy, params));
                    hqp::finalize_result(result, h, spec.cut, spec.k, one_hot);
                } else {
                    hqp::QAOAParams params;
                    params.depth = solve_depth;
                    params.restarts = solve_restarts;
                    params.top_k = solve_topk;
                    params.seed = solve_seed;
                    const auto output = hqp::qaoa_statevector(energy, params);
                    result = hqp::select_best_balanced(output.probabilities, h, spec.cut,
                                                       spec.k, params.top_k, one_hot);
                    result.energy = energy.evaluate(result.assignment);
                }
                result.seed = solve_seed;
            }
            result.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << result_to_json(result).dump(2) << "\n";
            return 0;
        }

        if (experiment->parsed()) {
            hqp::ExperimentConfig config;
            if (!exp_config.empty())
                config = hqp::ExperimentConfig::from_json(
                    nlohmann::json::parse(read_file(exp_config)));
            const auto report = hqp::run_experiment(config);
            write_file(exp_out,
                       exp_format == "csv" ? hqp::emit_csv(report) : hqp::emit_json(report));
            std::cout << "wrote report to " << exp_out << "\n";
            return 0;
        }

        if (convert->parsed()) {
            const std::string text = read_file(conv_input);
            std::string output;
            if (conv_to == "ising") {
                const auto poly = hqp::polynomial_from_text(text);
                output = hqp::ising_to_text(hqp::to_ising(poly));
            } else {
                const auto model = hqp::ising_from_text(text);
                output = hqp::polynomial_to_text(hqp::from_ising(model));
            }
            if (conv_out.empty())
                std::cout << output;
            else
                write_file(conv_out, output);
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
