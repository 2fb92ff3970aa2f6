#pragma once

// Synthetic instance generators: planted positive cliques, seeded sign
// flips, and random signed G(n,p) graphs.

#include <cstdint>

#include "mmcc/clustering.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

struct PlantedInstance {
    SignedGraph graph;
    Clustering truth;
};

// k disjoint positive cliques of the given size; all cross edges negative.
PlantedInstance planted_cliques(int k, int size);

// Toggles the signs of `flips` distinct unordered pairs chosen uniformly at
// random (Floyd's sampling over pair indices). Flipping the same seed twice
// restores the original graph.
SignedGraph flip_noise(const SignedGraph& g, std::int64_t flips, std::uint64_t seed);

// Each pair positive independently with probability p.
SignedGraph random_signed_gnp(int n, double p, std::uint64_t seed);

// Random graph whose positive degree never exceeds max_degree: candidate
// edges arrive in random order and are kept while both endpoints have room.
SignedGraph random_bounded_degree(int n, double p, int max_degree, std::uint64_t seed);

}  // namespace mmcc
