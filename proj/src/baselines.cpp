#include "mmcc/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mmcc/objective.hpp"
#include "mmcc/rng.hpp"

namespace mmcc {

Clustering pivot_with_order(const SignedGraph& g, std::span<const int> order) {
    if (static_cast<int>(order.size()) != g.n)
        throw std::invalid_argument("pivot order must be a permutation of the vertices");
    Clustering out;
    out.assignment.assign(static_cast<std::size_t>(g.n), -1);
    for (int p : order) {
        if (out.assignment[static_cast<std::size_t>(p)] != -1) continue;
        int t = out.num_clusters();
        std::vector<int> members{p};
        out.assignment[static_cast<std::size_t>(p)] = t;
        for (int v : g.pos_adj[static_cast<std::size_t>(p)]) {
            if (out.assignment[static_cast<std::size_t>(v)] == -1) {
                out.assignment[static_cast<std::size_t>(v)] = t;
                members.push_back(v);
            }
        }
        std::sort(members.begin(), members.end());
        out.clusters.push_back(std::move(members));
        out.centers.push_back(p);
    }
    return out;
}

Clustering pivot(const SignedGraph& g, std::uint64_t seed) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    return pivot_with_order(g, order);
}

double pivot_mean_objective(const SignedGraph& g, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
        Clustering c = pivot(g, Rng::derive(seed, static_cast<std::uint64_t>(t)));
        total += static_cast<double>(disagreement_vector(g, c).max_value());
    }
    return total / static_cast<double>(trials);
}

namespace {

struct BruteForceSearch {
    const SignedGraph& g;
    int n;
    std::vector<int> block;      // growth string under construction
    std::vector<int> y;          // partial disagreement counts
    int best;                    // best l-infinity value so far
    std::vector<int> best_block;
    bool found = false;
    std::uint64_t scanned = 0;
    // completions[k][m]: growth strings extending k assigned vertices and m
    // used blocks; lets pruned subtrees still be counted as scanned.
    std::vector<std::vector<std::uint64_t>> completions;

    explicit BruteForceSearch(const SignedGraph& graph)
        : g(graph), n(graph.n), block(static_cast<std::size_t>(graph.n), 0),
          y(static_cast<std::size_t>(graph.n), 0), best(graph.n) {
        completions.assign(static_cast<std::size_t>(n) + 1,
                           std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
        for (int m = 0; m <= n + 1; ++m)
            completions[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = 1;
        for (int k = n - 1; k >= 0; --k)
            for (int m = 0; m <= n; ++m)
                completions[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] =
                    static_cast<std::uint64_t>(m) *
                        completions[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(m)] +
                    completions[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(m) + 1];
    }

    void run() { place(0, 0); }

    void place(int k, int num_blocks) {
        if (k == n) {
            ++scanned;
            int val = 0;
            for (int u = 0; u < n; ++u) val = std::max(val, y[static_cast<std::size_t>(u)]);
            if (!found || val < best) {
                found = true;
                best = val;
                best_block = block;
            }
            return;
        }
        for (int b = 0; b <= num_blocks; ++b) {
            block[static_cast<std::size_t>(k)] = b;
            int next_blocks = (b == num_blocks) ? num_blocks + 1 : num_blocks;
            bool exceeded = false;
            for (int v = 0; v < k; ++v) {
                bool pos = g.positive_edge(k, v);
                bool same = block[static_cast<std::size_t>(v)] == b;
                if (pos != same) {
                    ++y[static_cast<std::size_t>(v)];
                    ++y[static_cast<std::size_t>(k)];
                    if (y[static_cast<std::size_t>(v)] > best ||
                        y[static_cast<std::size_t>(k)] > best)
                        exceeded = true;
                }
            }
            if (exceeded) {
                scanned += completions[static_cast<std::size_t>(k) + 1]
                                      [static_cast<std::size_t>(next_blocks)];
            } else {
                place(k + 1, next_blocks);
            }
            for (int v = 0; v < k; ++v) {
                bool pos = g.positive_edge(k, v);
                bool same = block[static_cast<std::size_t>(v)] == b;
                if (pos != same) {
                    --y[static_cast<std::size_t>(v)];
                    --y[static_cast<std::size_t>(k)];
                }
            }
        }
    }
};

}  // namespace

OracleResult brute_force_opt(const SignedGraph& g, int max_n) {
    int cap = std::min(max_n, kBruteForceMaxVertices);
    if (g.n > cap)
        throw std::length_error("brute-force oracle capped at n=" + std::to_string(cap) +
                                " vertices (got n=" + std::to_string(g.n) + ")");
    OracleResult res;
    if (g.n == 0) {
        res.partitions_scanned = 1;
        return res;
    }
    BruteForceSearch search(g);
    search.run();
    res.opt_value = search.best;
    res.partitions_scanned = search.scanned;
    int num_blocks = 1 + *std::max_element(search.best_block.begin(), search.best_block.end());
    res.witness = Clustering::from_assignment(search.best_block, num_blocks);
    return res;
}

}  // namespace mmcc
