#pragma once

// Complete signed graph given by its positive edge set. Only positive
// adjacency is materialized (negative edges are the complement); every vertex
// carries an implicit positive self-loop that query functions add back.

#include <cstdint>
#include <utility>
#include <vector>

#include "mmcc/bitrows.hpp"

namespace mmcc {

struct SignedGraph {
    int n = 0;
    // Sorted positive neighbors per vertex, self excluded.
    std::vector<std::vector<int>> pos_adj;

    // |N+_u| counting the implicit self-loop.
    int deg_plus(int u) const { return 1 + static_cast<int>(pos_adj[u].size()); }

    // Max deg_plus over all vertices; counts the self-loop, so an edgeless
    // graph has delta_max = 1.
    int delta_max() const;

    // True iff (u,v) is a positive edge, u != v.
    bool positive_edge(int u, int v) const;

    std::size_t num_positive_edges() const;

    // Deduplicated positive edge set as (min,max) pairs, lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;
};

struct PosDegreeProfile {
    std::vector<int> deg_plus;
    int delta_max = 0;
};

// Builds from an unordered pair list; duplicates and self-pairs are dropped,
// ids outside [0,n) are rejected. Output is independent of input order.
SignedGraph build_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

PosDegreeProfile degree_profile(const SignedGraph& g);

// N+_u including u itself, sorted; size == deg_plus(u).
std::vector<int> positive_neighborhood_with_self(const SignedGraph& g, int u);

// All v (including u) whose positive neighborhood intersects N+_u, i.e. the
// vertices reachable by at most two positive hops with self-loops counted.
std::vector<int> two_hop_positive(const SignedGraph& g, int u);

// Positive adjacency as bit rows with the diagonal set.
BitRows positive_bitrows(const SignedGraph& g);

}  // namespace mmcc
