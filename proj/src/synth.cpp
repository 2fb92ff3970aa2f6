#include "mmcc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "mmcc/rng.hpp"

namespace mmcc {

namespace {

std::int64_t pair_count(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Unordered pair <-> index in the upper triangle, row-major.
std::pair<int, int> decode_pair(std::int64_t k, int n) {
    int u = 0;
    std::int64_t row_start = 0;
    while (row_start + (n - 1 - u) <= k) {
        row_start += n - 1 - u;
        ++u;
    }
    int v = u + 1 + static_cast<int>(k - row_start);
    return {u, v};
}

}  // namespace

PlantedInstance planted_cliques(int k, int size) {
    if (k < 1 || size < 1) throw std::invalid_argument("planted_cliques needs k, size >= 1");
    int n = k * size;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < k; ++c) {
        int lo = c * size;
        for (int u = lo; u < lo + size; ++u) {
            assignment[static_cast<std::size_t>(u)] = c;
            for (int v = u + 1; v < lo + size; ++v) edges.emplace_back(u, v);
        }
    }
    PlantedInstance out;
    out.graph = build_from_edges(n, edges);
    out.truth = Clustering::from_assignment(std::move(assignment), k);
    return out;
}

SignedGraph flip_noise(const SignedGraph& g, std::int64_t flips, std::uint64_t seed) {
    std::int64_t total = pair_count(g.n);
    if (flips < 0 || flips > total)
        throw std::invalid_argument("flip count exceeds the number of vertex pairs");

    // Floyd's sampling: uniform subset of `flips` distinct pair indices.
    Rng rng(seed);
    std::unordered_set<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(flips) * 2 + 1);
    for (std::int64_t j = total - flips; j < total; ++j) {
        std::int64_t t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(t).second) chosen.insert(j);
    }

    std::set<std::pair<int, int>> edges;
    for (auto& e : g.edge_list()) edges.insert(e);
    for (std::int64_t k : chosen) {
        auto e = decode_pair(k, g.n);
        auto it = edges.find(e);
        if (it != edges.end())
            edges.erase(it);
        else
            edges.insert(e);
    }
    return build_from_edges(g.n, {edges.begin(), edges.end()});
}

SignedGraph random_signed_gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return build_from_edges(n, edges);
}

SignedGraph random_bounded_degree(int n, double p, int max_degree, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    // max_degree caps delta_max, which counts the self-loop.
    int cap = max_degree - 1;
    std::int64_t total = pair_count(n);
    auto target = static_cast<std::int64_t>(std::llround(p * static_cast<double>(total)));
    Rng rng(seed);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::unordered_set<std::int64_t> chosen;
    std::vector<std::pair<int, int>> edges;
    std::int64_t attempts = 0, max_attempts = 20 * target + 1000;
    while (static_cast<std::int64_t>(edges.size()) < target && attempts++ < max_attempts) {
        auto k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
        if (chosen.count(k)) continue;
        auto [u, v] = decode_pair(k, n);
        if (degree[static_cast<std::size_t>(u)] >= cap ||
            degree[static_cast<std::size_t>(v)] >= cap)
            continue;
        chosen.insert(k);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        edges.emplace_back(u, v);
    }
    return build_from_edges(n, edges);
}

}  // namespace mmcc
