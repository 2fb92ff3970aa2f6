#pragma once

// Edge-list and ground-truth-circles ingestion plus the metric CSV dump.
// Edge lists are whitespace-separated id pairs, '#' comments allowed;
// external ids are remapped to dense 0..n-1 in first-appearance order.

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mmcc/oracle.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

struct EdgeListData {
    int n = 0;
    std::vector<std::pair<int, int>> edges;       // internal ids, deduplicated
    std::vector<long long> external_ids;          // internal -> external
    std::unordered_map<long long, int> to_internal;

    SignedGraph build() const { return build_from_edges(n, edges); }
};

EdgeListData parse_edge_list(std::istream& in);

// Writes "u v" lines for u < v; external ids when a map is supplied.
void write_edge_list(std::ostream& out, const SignedGraph& g,
                     const std::vector<long long>* external_ids = nullptr);

struct Circle {
    std::string label;
    std::vector<int> members;  // internal ids, sorted
};

struct CircleSet {
    std::vector<Circle> circles;
    int dropped_members = 0;  // listed ids not present in the graph
};

// Lines: label token followed by member ids. Members outside the id map are
// dropped and counted.
CircleSet parse_circles(std::istream& in, const EdgeListData& ids);

// Exact oracles: "u,v,num,den" per pair (all u<v when dense, stored pairs
// when sparse). Sampled oracles: "u,v,value".
void dump_metric_csv(std::ostream& out, const DistanceOracle& oracle);

}  // namespace mmcc
