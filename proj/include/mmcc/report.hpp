#pragma once

// Run reports (JSON / CSV rows), ground-truth containment, radius sweeps.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmcc/clustering.hpp"
#include "mmcc/io.hpp"
#include "mmcc/objective.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/rational.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

struct RunReport {
    std::string algorithm;
    std::string params;
    double r1 = 0.0;
    double r2 = 0.0;
    double objective_linf = 0.0;
    double objective_l1 = 0.0;
    double fractional_cost_max = 0.0;
    int num_clusters = 0;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
};

// Stable key order, schema-versioned. Per-vertex arrays are opt-in.
nlohmann::ordered_json report_to_json(const RunReport& r,
                                      const DisagreementVector* per_vertex = nullptr,
                                      const FractionalCostVector* per_vertex_cost = nullptr);

std::string report_csv_header();
std::string report_csv_row(const RunReport& r);

struct ContainmentRow {
    int cluster_id = 0;
    int size = 0;
    std::string best_label;
    double fraction = 0.0;
};

// For each cluster of size >= min_size: the circle with the largest
// intersection (ties: lexicographically smallest label) and the contained
// fraction of the cluster.
std::vector<ContainmentRow> circle_containment_report(const Clustering& c, const CircleSet& circles,
                                                      int min_size = 10);

// One report per grid point, ordered by (r1, r2). The oracle is shared across
// points; sparse oracles round via the heap implementation.
std::vector<RunReport> radius_sweep(const SignedGraph& g, const DistanceOracle& oracle,
                                    const std::vector<std::pair<Rational, Rational>>& grid,
                                    std::uint64_t seed);

}  // namespace mmcc
