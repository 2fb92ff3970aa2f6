#pragma once

// Uniform distance-query interface over the three metric backends:
//   dense_exact  — triangular table of common-positive-neighbor counts
//   sparse_exact — per-vertex rows over the two-hop neighborhood; absent
//                  pairs answer 1 implicitly
//   sampled      — triangular table of post-processed double estimates
// Exact kinds answer exact rationals; every kind answers doubles. Oracles are
// immutable once built and safe to share across threads.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mmcc/bitrows.hpp"
#include "mmcc/rational.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

enum class OracleKind { dense_exact, sparse_exact, sampled };

class DistanceOracle {
  public:
    struct SparseEntry {
        int v;
        std::uint32_t common;  // |N+_u ∩ N+_v| with self-loops
    };

    OracleKind kind() const { return kind_; }
    int n() const { return n_; }
    int deg_plus(int u) const { return deg_plus_[static_cast<std::size_t>(u)]; }
    bool positive_edge(int u, int v) const;

    // Exact distance for u != v; throws for sampled oracles.
    Rational distance(int u, int v) const;

    // Double rendering of the distance, defined for every kind. For exact
    // kinds this is the correctly rounded value of the true rational.
    double distance_value(int u, int v) const;

    // d on positive edges, 1-d on negative edges.
    Rational adjusted_distance(int u, int v) const;
    double adjusted_distance_value(int u, int v) const;

    // Stored row of a sparse oracle, ascending by neighbor id.
    std::span<const SparseEntry> sparse_row(int u) const;

    // Stored pairs u < v (sparse kind).
    std::size_t stored_pairs() const;

    static DistanceOracle make_dense(const SignedGraph& g, std::vector<std::uint32_t> common,
                                     BitRows rows);
    static DistanceOracle make_sparse(const SignedGraph& g, std::vector<std::size_t> row_ptr,
                                      std::vector<SparseEntry> rows);
    static DistanceOracle make_sampled(const SignedGraph& g, std::vector<double> values,
                                       BitRows rows);

    std::size_t tri_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(n_) - u - 1) / 2 +
               static_cast<std::size_t>(v - u - 1);
    }

  private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("vertex out of range in distance query");
        if (u == v) throw std::invalid_argument("distance query with u == v is undefined");
    }

    // (num, den) of the exact distance as raw (unreduced) integers.
    std::pair<std::int64_t, std::int64_t> raw_fraction(int u, int v) const;

    OracleKind kind_ = OracleKind::dense_exact;
    int n_ = 0;
    std::vector<std::int32_t> deg_plus_;
    BitRows pos_;                           // dense + sampled edge tests
    std::vector<std::vector<int>> adj_;     // sparse edge tests
    std::vector<std::uint32_t> dense_common_;
    std::vector<std::size_t> row_ptr_;
    std::vector<SparseEntry> rows_;
    std::vector<double> sampled_;
};

}  // namespace mmcc
