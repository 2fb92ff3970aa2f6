// Command-line driver: cluster / pivot / oracle / gen / eval / sweep.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmcc/baselines.hpp"
#include "mmcc/io.hpp"
#include "mmcc/kernels.hpp"
#include "mmcc/metric_exact.hpp"
#include "mmcc/metric_sampled.hpp"
#include "mmcc/objective.hpp"
#include "mmcc/report.hpp"
#include "mmcc/rounding.hpp"
#include "mmcc/rng.hpp"
#include "mmcc/synth.hpp"

using namespace mmcc;

namespace {

struct LoadedGraph {
    EdgeListData data;
    SignedGraph graph;
};

LoadedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    LoadedGraph lg;
    lg.data = parse_edge_list(in);
    lg.graph = lg.data.build();
    return lg;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void write_clusters(const std::string& path, const Clustering& c,
                    const std::vector<long long>& external) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (int u = 0; u < c.n(); ++u)
        out << external[static_cast<std::size_t>(u)] << ' '
            << c.assignment[static_cast<std::size_t>(u)] << '\n';
}

int run_cluster(const std::string& input, const std::string& metric, const std::string& mode,
                const std::string& r1_text, const std::string& r2_text, double epsilon,
                std::uint64_t seed, bool limit_ladder, const std::string& output,
                const std::string& dump_metric, bool as_json, bool per_vertex) {
    LoadedGraph lg = load_graph(input);
    const SignedGraph& g = lg.graph;

    auto t0 = std::chrono::steady_clock::now();
    DistanceOracle oracle = [&] {
        if (metric == "sparse") return build_sparse_oracle(g);
        if (metric == "sampled") {
            SampleConfig cfg{epsilon, seed};
            if (!cfg.in_theory_range())
                std::cerr << "warning: epsilon " << epsilon
                          << " is outside the analyzed range (0, 0.03)\n";
            return build_sampled_oracle(g, cfg);
        }
        return build_dense_oracle(g);
    }();

    Clustering clustering;
    std::string params_text;
    if (mode == "approx") {
        ConstantLadder ladder = limit_ladder ? ConstantLadder::zero_limit()
                                             : constant_ladder(epsilon);
        ApproxRoundingConstants consts = derive_rounding_constants(ladder.delta1, ladder.delta2);
        RoundingParams params = RoundingParams::approx_from(consts);
        params_text = "r1=" + std::to_string(params.r1_value) +
                      ",r2=" + std::to_string(params.r2_value) +
                      (limit_ladder ? " (limit ladder)" : " (epsilon ladder)");
        clustering = round_dense(oracle, params);
    } else {
        RoundingParams params = mode == "theory"
                                    ? RoundingParams::theory()
                                    : RoundingParams::swept(parse_rational(r1_text),
                                                            parse_rational(r2_text));
        if (params.mode == RoundingParams::Mode::swept && params.outside_theory_regime)
            std::cerr << "warning: r2 < 2*r1 is outside the analyzed regime\n";
        params_text = "r1=" + to_string(params.r1) + ",r2=" + to_string(params.r2);
        clustering = oracle.kind() == OracleKind::sparse_exact ? round_sparse(oracle, params)
                                                               : round_dense(oracle, params);
    }

    DisagreementVector y = disagreement_vector(g, clustering);
    FractionalCostVector cost = fractional_cost(g, oracle);
    RunReport report;
    report.algorithm = "cluster-" + metric;
    report.params = params_text;
    report.objective_linf = static_cast<double>(y.max_value());
    report.objective_l1 = static_cast<double>(y.sum());
    report.fractional_cost_max = cost.max_value;
    report.num_clusters = clustering.num_clusters();
    report.runtime_ms = ms_since(t0);
    report.seed = seed;

    if (!output.empty()) write_clusters(output, clustering, lg.data.external_ids);
    if (!dump_metric.empty()) {
        std::ofstream mout(dump_metric);
        if (!mout) throw std::runtime_error("cannot open metric dump file: " + dump_metric);
        dump_metric_csv(mout, oracle);
    }
    if (as_json) {
        std::cout << report_to_json(report, per_vertex ? &y : nullptr,
                                    per_vertex ? &cost : nullptr)
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "n:                   " << g.n << "\n"
                  << "algorithm:           " << report.algorithm << " (" << params_text << ")\n"
                  << "objective (max):     " << report.objective_linf << "\n"
                  << "objective (sum):     " << report.objective_l1 << "\n"
                  << "fractional cost max: " << report.fractional_cost_max << "\n"
                  << "clusters:            " << report.num_clusters << "\n"
                  << "runtime:             " << report.runtime_ms << " ms\n"
                  << "kernel:              " << kernels::active_kernel() << "\n";
    }
    return 0;
}

int run_pivot(const std::string& input, int trials, std::uint64_t seed, bool as_json) {
    LoadedGraph lg = load_graph(input);
    auto t0 = std::chrono::steady_clock::now();
    double mean = pivot_mean_objective(lg.graph, trials, seed);
    Clustering first = pivot(lg.graph, Rng::derive(seed, 0));
    DisagreementVector y = disagreement_vector(lg.graph, first);
    double elapsed = ms_since(t0);
    if (as_json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["algorithm"] = "pivot";
        j["trials"] = trials;
        j["mean_objective_linf"] = mean;
        j["first_trial_objective_linf"] = y.max_value();
        j["first_trial_clusters"] = first.num_clusters();
        j["runtime_ms"] = elapsed;
        j["seed"] = seed;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "pivot mean objective over " << trials << " trials: " << mean << "\n"
                  << "first trial: objective " << y.max_value() << ", " << first.num_clusters()
                  << " clusters\n"
                  << "runtime: " << elapsed << " ms\n";
    }
    return 0;
}

int run_oracle(const std::string& input, bool as_json) {
    LoadedGraph lg = load_graph(input);
    auto t0 = std::chrono::steady_clock::now();
    OracleResult res = brute_force_opt(lg.graph);
    double elapsed = ms_since(t0);
    if (as_json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["algorithm"] = "oracle";
        j["opt_value"] = res.opt_value;
        j["partitions_scanned"] = res.partitions_scanned;
        nlohmann::ordered_json clusters = nlohmann::ordered_json::array();
        for (const auto& cl : res.witness.clusters) {
            nlohmann::ordered_json members = nlohmann::ordered_json::array();
            for (int u : cl) members.push_back(lg.data.external_ids[static_cast<std::size_t>(u)]);
            clusters.push_back(members);
        }
        j["witness"] = clusters;
        j["runtime_ms"] = elapsed;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "optimal max disagreement: " << res.opt_value << "\n"
                  << "partitions scanned: " << res.partitions_scanned << "\n"
                  << "witness clusters:\n";
        for (const auto& cl : res.witness.clusters) {
            std::cout << " ";
            for (int u : cl) std::cout << ' ' << lg.data.external_ids[static_cast<std::size_t>(u)];
            std::cout << '\n';
        }
        std::cout << "runtime: " << elapsed << " ms\n";
    }
    return 0;
}

int run_gen(const std::string& out_path, const std::string& truth_path, int cliques, int size,
            std::int64_t flips, int gnp_n, double gnp_p, int max_degree, std::uint64_t seed) {
    SignedGraph g;
    std::optional<Clustering> truth;
    if (gnp_n > 0) {
        g = max_degree > 0 ? random_bounded_degree(gnp_n, gnp_p, max_degree, seed)
                           : random_signed_gnp(gnp_n, gnp_p, seed);
    } else {
        PlantedInstance inst = planted_cliques(cliques, size);
        truth = inst.truth;
        g = flips > 0 ? flip_noise(inst.graph, flips, seed) : std::move(inst.graph);
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    write_edge_list(out, g);
    if (!truth_path.empty()) {
        if (!truth) throw std::runtime_error("--truth requires the planted-cliques generator");
        std::ofstream tout(truth_path);
        if (!tout) throw std::runtime_error("cannot open truth file: " + truth_path);
        for (int t = 0; t < truth->num_clusters(); ++t) {
            tout << "cluster" << t;
            for (int u : truth->clusters[static_cast<std::size_t>(t)]) tout << ' ' << u;
            tout << '\n';
        }
    }
    std::cerr << "wrote " << g.n << " vertices, " << g.num_positive_edges()
              << " positive edges to " << out_path << '\n';
    return 0;
}

int run_eval(const std::string& input, const std::string& circles_path,
             const std::string& r1_text, const std::string& r2_text, int trials,
             std::uint64_t seed, int min_size, bool as_json) {
    LoadedGraph lg = load_graph(input);
    const SignedGraph& g = lg.graph;
    RoundingParams params =
        RoundingParams::swept(parse_rational(r1_text), parse_rational(r2_text));

    auto t0 = std::chrono::steady_clock::now();
    DistanceOracle oracle =
        g.n <= kDenseOracleMaxVertices ? build_dense_oracle(g) : build_sparse_oracle(g);
    Clustering clustering = oracle.kind() == OracleKind::sparse_exact
                                ? round_sparse(oracle, params)
                                : round_dense(oracle, params);
    double cluster_ms = ms_since(t0);

    DisagreementVector y = disagreement_vector(g, clustering);
    FractionalCostVector cost = fractional_cost(g, oracle);
    double pivot_mean = pivot_mean_objective(g, trials, seed);

    std::vector<ContainmentRow> containment;
    if (!circles_path.empty()) {
        std::ifstream cfile(circles_path);
        if (!cfile) throw std::runtime_error("cannot open circles file: " + circles_path);
        CircleSet circle_set = parse_circles(cfile, lg.data);
        if (circle_set.dropped_members > 0)
            std::cerr << "warning: dropped " << circle_set.dropped_members
                      << " circle members absent from the graph\n";
        containment = circle_containment_report(clustering, circle_set, min_size);
    }

    if (as_json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["n"] = g.n;
        j["positive_edges"] = g.num_positive_edges();
        j["fractional_cost_max"] = cost.max_value;
        j["objective_linf"] = y.max_value();
        j["objective_l1"] = y.sum();
        j["num_clusters"] = clustering.num_clusters();
        j["pivot_mean_objective"] = pivot_mean;
        j["pivot_trials"] = trials;
        j["runtime_ms"] = cluster_ms;
        j["seed"] = seed;
        if (!circles_path.empty()) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : containment) {
                nlohmann::ordered_json r;
                r["cluster"] = row.cluster_id;
                r["size"] = row.size;
                r["best_circle"] = row.best_label;
                r["fraction"] = row.fraction;
                rows.push_back(r);
            }
            j["containment"] = rows;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n:                   " << g.n << "\n"
                  << "positive edges:      " << g.num_positive_edges() << "\n"
                  << "fractional cost:     " << cost.max_value << "\n"
                  << "our objective:       " << y.max_value() << "\n"
                  << "pivot objective:     " << pivot_mean << " (mean over " << trials
                  << " trials)\n"
                  << "clusters:            " << clustering.num_clusters() << "\n"
                  << "our run-time:        " << cluster_ms / 1000.0 << " s\n";
        if (!circles_path.empty()) {
            std::cout << "clusters of size >= " << min_size << " vs ground-truth circles:\n";
            for (const auto& row : containment)
                std::cout << "  cluster " << row.cluster_id << " (size " << row.size
                          << "): best circle " << row.best_label << ", contained fraction "
                          << row.fraction << "\n";
            if (containment.empty()) std::cout << "  (none)\n";
        }
    }
    return 0;
}

int run_sweep(const std::string& input, const std::string& metric, const std::string& start,
              const std::string& stop, const std::string& step, bool full_grid,
              std::uint64_t seed, double epsilon, const std::string& out_path) {
    LoadedGraph lg = load_graph(input);
    const SignedGraph& g = lg.graph;
    DistanceOracle oracle = [&] {
        if (metric == "sparse") return build_sparse_oracle(g);
        if (metric == "sampled") return build_sampled_oracle(g, SampleConfig{epsilon, seed});
        return build_dense_oracle(g);
    }();

    Rational lo = parse_rational(start), hi = parse_rational(stop), inc = parse_rational(step);
    if (!(Rational{0, 1} < inc)) throw std::runtime_error("step must be positive");
    std::vector<Rational> axis;
    for (Rational r = lo; r <= hi; r = r + inc) axis.push_back(r);
    if (axis.empty()) throw std::runtime_error("empty sweep range");

    std::vector<std::pair<Rational, Rational>> grid;
    if (full_grid) {
        for (const auto& a : axis)
            for (const auto& b : axis) grid.emplace_back(a, b);
    } else {
        for (const auto& a : axis) grid.emplace_back(a, a);
    }

    auto rows = radius_sweep(g, oracle, grid, seed);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        out = &file;
    }
    *out << report_csv_header() << '\n';
    for (const auto& r : rows) *out << report_csv_row(r) << '\n';
    if (!out_path.empty()) std::cerr << "wrote " << rows.size() << " rows to " << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Min-Max correlation clustering via a neighborhood-similarity metric"};
    app.require_subcommand(1);

    std::string input, output, dump_metric, circles, truth_path, out_path;
    std::string metric = "exact", mode = "swept", r1 = "0.7", r2 = "0.7";
    std::string start = "0.05", stop = "0.95", step = "0.05";
    double epsilon = 0.02, gnp_p = 0.5;
    std::uint64_t seed = 0;
    int trials = 500, cliques = 10, size = 10, gnp_n = 0, min_size = 10, max_degree = 0;
    std::int64_t flips = 0;
    bool as_json = false, per_vertex = false, limit_ladder = false, full_grid = false;

    auto* cluster = app.add_subcommand("cluster", "cluster an edge list");
    cluster->add_option("--input", input, "edge-list file")->required();
    cluster->add_option("--metric", metric, "exact | sparse | sampled")
        ->check(CLI::IsMember({"exact", "sparse", "sampled"}));
    cluster->add_option("--mode", mode, "theory | swept | approx")
        ->check(CLI::IsMember({"theory", "swept", "approx"}));
    cluster->add_option("--r1", r1, "score radius (swept mode), e.g. 0.7 or 1/5");
    cluster->add_option("--r2", r2, "cut radius (swept mode)");
    cluster->add_option("--epsilon", epsilon, "sampling accuracy parameter");
    cluster->add_option("--seed", seed, "random seed");
    cluster->add_flag("--limit-ladder", limit_ladder,
                      "approx mode: use the epsilon->0 limit constants");
    cluster->add_option("--output", output, "write 'external_id cluster_id' lines here");
    cluster->add_option("--dump-metric", dump_metric, "write the metric as CSV");
    cluster->add_flag("--json", as_json, "JSON report on stdout");
    cluster->add_flag("--per-vertex", per_vertex, "include per-vertex arrays in JSON");

    auto* pivot_cmd = app.add_subcommand("pivot", "random-order pivot baseline");
    pivot_cmd->add_option("--input", input, "edge-list file")->required();
    pivot_cmd->add_option("--trials", trials, "number of seeded trials");
    pivot_cmd->add_option("--seed", seed, "random seed");
    pivot_cmd->add_flag("--json", as_json, "JSON report on stdout");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive optimum (tiny graphs)");
    oracle_cmd->add_option("--input", input, "edge-list file")->required();
    oracle_cmd->add_flag("--json", as_json, "JSON report on stdout");

    auto* gen = app.add_subcommand("gen", "generate synthetic instances");
    gen->add_option("--out", out_path, "edge-list output file")->required();
    gen->add_option("--truth", truth_path, "ground-truth circles output file");
    gen->add_option("--cliques", cliques, "number of planted cliques");
    gen->add_option("--size", size, "clique size");
    gen->add_option("--flips", flips, "number of random sign flips");
    gen->add_option("--gnp-n", gnp_n, "random graph: vertex count (enables G(n,p))");
    gen->add_option("--gnp-p", gnp_p, "random graph: positive-edge probability");
    gen->add_option("--max-degree", max_degree, "random graph: cap on delta_max");
    gen->add_option("--seed", seed, "random seed");

    auto* eval = app.add_subcommand("eval", "objective/baseline/ground-truth report");
    eval->add_option("--input", input, "edge-list file")->required();
    eval->add_option("--circles", circles, "ground-truth circles file");
    eval->add_option("--r1", r1, "score radius");
    eval->add_option("--r2", r2, "cut radius");
    eval->add_option("--trials", trials, "pivot trials");
    eval->add_option("--seed", seed, "random seed");
    eval->add_option("--min-size", min_size, "containment report size threshold");
    eval->add_flag("--json", as_json, "JSON report on stdout");

    auto* sweep = app.add_subcommand("sweep", "radius sweep to CSV");
    sweep->add_option("--input", input, "edge-list file")->required();
    sweep->add_option("--metric", metric, "exact | sparse | sampled")
        ->check(CLI::IsMember({"exact", "sparse", "sampled"}));
    sweep->add_option("--start", start, "first radius");
    sweep->add_option("--stop", stop, "last radius");
    sweep->add_option("--step", step, "radius increment");
    sweep->add_flag("--full", full_grid, "sweep the full (r1, r2) grid");
    sweep->add_option("--seed", seed, "random seed");
    sweep->add_option("--epsilon", epsilon, "sampling accuracy parameter");
    sweep->add_option("--out", out_path, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cluster->parsed())
            return run_cluster(input, metric, mode, r1, r2, epsilon, seed, limit_ladder, output,
                               dump_metric, as_json, per_vertex);
        if (pivot_cmd->parsed()) return run_pivot(input, trials, seed, as_json);
        if (oracle_cmd->parsed()) return run_oracle(input, as_json);
        if (gen->parsed())
            return run_gen(out_path, truth_path, cliques, size, flips, gnp_n, gnp_p, max_degree,
                           seed);
        if (eval->parsed())
            return run_eval(input, circles, r1, r2, trials, seed, min_size, as_json);
        if (sweep->parsed())
            return run_sweep(input, metric, start, stop, step, full_grid, seed, epsilon, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
