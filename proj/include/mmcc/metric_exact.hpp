#pragma once

// Exact metric computation. The distance between u and v is
//   d(u,v) = 1 - c / (deg+(u) + deg+(v) - c),  c = |N+_u ∩ N+_v|,
// with self-loops counted everywhere. The dense route squares the positive
// adjacency (bit rows + popcount kernel); the sparse route only visits pairs
// inside two-hop neighborhoods, every other pair being implicitly at 1.

#include <cstdint>
#include <vector>

#include "mmcc/oracle.hpp"
#include "mmcc/rational.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

inline constexpr int kDenseOracleMaxVertices = 10000;

// Full symmetric matrix of |N+_u ∩ N+_v| including the diagonal
// (C[u][u] = deg_plus(u)). Equals the square of the positive adjacency
// matrix with unit diagonal.
struct CommonCounts {
    int n = 0;
    std::vector<std::uint32_t> m;  // row-major n*n
    std::uint32_t at(int u, int v) const {
        return m[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(v)];
    }
};

CommonCounts common_pos_counts_dense(const SignedGraph& g,
                                     int max_vertices = kDenseOracleMaxVertices);

// d(u,v) from the counts; preconditions are invariants of the callers and
// violations throw logic_error.
Rational distance_from_count(int n, int deg_u, int deg_v, std::int64_t common);

DistanceOracle build_dense_oracle(const SignedGraph& g,
                                  int max_vertices = kDenseOracleMaxVertices);

// Stores exactly the pairs {u,v} with v in two_hop_positive(u) \ {u};
// construction is O(n * delta^2) neighborhood work.
DistanceOracle build_sparse_oracle(const SignedGraph& g);

}  // namespace mmcc
