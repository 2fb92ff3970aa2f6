#pragma once

// Pivot baseline and the exhaustive Min-Max oracle for tiny instances.

#include <cstdint>
#include <span>

#include "mmcc/clustering.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

// Visits vertices in the given order; an unclustered vertex becomes a pivot
// and claims itself plus all currently unclustered positive neighbors.
Clustering pivot_with_order(const SignedGraph& g, std::span<const int> order);

// Pivot over a seeded uniformly random order (Fisher-Yates on mt19937_64).
Clustering pivot(const SignedGraph& g, std::uint64_t seed);

// Mean l-infinity objective over independent seeded trials.
double pivot_mean_objective(const SignedGraph& g, int trials, std::uint64_t seed);

struct OracleResult {
    int opt_value = 0;
    Clustering witness;
    std::uint64_t partitions_scanned = 0;
};

inline constexpr int kBruteForceMaxVertices = 12;

// Exhaustive search over set partitions in restricted-growth-string order.
// A branch is abandoned once any vertex's partial disagreement count strictly
// exceeds the best value found so far; among equal optima the
// lexicographically smallest growth string wins.
OracleResult brute_force_opt(const SignedGraph& g, int max_n = kBruteForceMaxVertices);

}  // namespace mmcc
