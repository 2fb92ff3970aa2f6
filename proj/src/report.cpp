#include "mmcc/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "mmcc/rounding.hpp"

namespace mmcc {

nlohmann::ordered_json report_to_json(const RunReport& r, const DisagreementVector* per_vertex,
                                      const FractionalCostVector* per_vertex_cost) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["algorithm"] = r.algorithm;
    j["params"] = r.params;
    j["objective_linf"] = r.objective_linf;
    j["objective_l1"] = r.objective_l1;
    j["fractional_cost_max"] = r.fractional_cost_max;
    j["num_clusters"] = r.num_clusters;
    j["runtime_ms"] = r.runtime_ms;
    j["seed"] = r.seed;
    if (per_vertex) j["disagreements"] = per_vertex->y;
    if (per_vertex_cost) j["fractional_cost"] = per_vertex_cost->value;
    return j;
}

std::string report_csv_header() {
    return "algorithm,r1,r2,objective_linf,objective_l1,fractional_cost_max,"
           "num_clusters,runtime_ms,seed";
}

std::string report_csv_row(const RunReport& r) {
    std::ostringstream os;
    os << r.algorithm << ',' << r.r1 << ',' << r.r2 << ',' << r.objective_linf << ','
       << r.objective_l1 << ',' << r.fractional_cost_max << ',' << r.num_clusters << ','
       << r.runtime_ms << ',' << r.seed;
    return os.str();
}

std::vector<ContainmentRow> circle_containment_report(const Clustering& c, const CircleSet& circles,
                                                      int min_size) {
    std::vector<ContainmentRow> rows;
    std::vector<char> in_cluster(static_cast<std::size_t>(c.n()), 0);
    for (int t = 0; t < c.num_clusters(); ++t) {
        const auto& members = c.clusters[static_cast<std::size_t>(t)];
        if (static_cast<int>(members.size()) < min_size) continue;
        for (int u : members) in_cluster[static_cast<std::size_t>(u)] = 1;

        int best_count = -1;
        std::string best_label;
        for (const auto& circle : circles.circles) {
            int count = 0;
            for (int u : circle.members)
                if (in_cluster[static_cast<std::size_t>(u)]) ++count;
            if (count > best_count || (count == best_count && circle.label < best_label)) {
                best_count = count;
                best_label = circle.label;
            }
        }
        for (int u : members) in_cluster[static_cast<std::size_t>(u)] = 0;

        ContainmentRow row;
        row.cluster_id = t;
        row.size = static_cast<int>(members.size());
        row.best_label = best_label;
        row.fraction = best_count <= 0
                           ? 0.0
                           : static_cast<double>(best_count) / static_cast<double>(members.size());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RunReport> radius_sweep(const SignedGraph& g, const DistanceOracle& oracle,
                                    const std::vector<std::pair<Rational, Rational>>& grid,
                                    std::uint64_t seed) {
    if (grid.empty()) throw std::invalid_argument("radius sweep needs a non-empty grid");
    auto sorted = grid;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    FractionalCostVector cost = fractional_cost(g, oracle);
    std::vector<RunReport> out;
    out.reserve(sorted.size());
    for (const auto& [r1, r2] : sorted) {
        RoundingParams params = RoundingParams::swept(r1, r2);
        auto t0 = std::chrono::steady_clock::now();
        Clustering c = oracle.kind() == OracleKind::sparse_exact ? round_sparse(oracle, params)
                                                                 : round_dense(oracle, params);
        auto t1 = std::chrono::steady_clock::now();
        DisagreementVector y = disagreement_vector(g, c);
        RunReport r;
        r.algorithm = oracle.kind() == OracleKind::sampled ? "cluster-sampled"
                      : oracle.kind() == OracleKind::sparse_exact ? "cluster-sparse"
                                                                  : "cluster-exact";
        r.params = "r1=" + to_string(r1) + ",r2=" + to_string(r2);
        r.r1 = to_double(r1);
        r.r2 = to_double(r2);
        r.objective_linf = static_cast<double>(y.max_value());
        r.objective_l1 = static_cast<double>(y.sum());
        r.fractional_cost_max = cost.max_value;
        r.num_clusters = c.num_clusters();
        r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.seed = seed;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mmcc
