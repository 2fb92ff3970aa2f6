#pragma once

// Sampling pipeline: per-vertex positive-neighborhood samples, the W/Y pair
// estimators, the initial estimate dbar, and the thresholded post-processing
// that yields the final dtilde oracle. Estimates are doubles throughout; a
// vertex whose positive neighborhood is smaller than the sample budget is
// flagged exact and its estimates coincide with the true counts.

#include <cstdint>
#include <vector>

#include "mmcc/bitrows.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

struct SampleConfig {
    double epsilon = 0.02;
    std::uint64_t seed = 0;

    // ceil((32/eps^2) * ln n), at least 1.
    int sample_size(int n) const;

    // The concentration analysis fixes eps < 0.03; larger values are accepted
    // but callers should surface a warning.
    bool in_theory_range() const { return epsilon > 0 && epsilon < 0.03; }
};

struct NeighborhoodSamples {
    int n = 0;
    int m = 0;  // sample budget for this graph size
    std::vector<std::vector<int>> sample;  // sorted, drawn without replacement
    std::vector<char> exact;               // deg_plus(u) <= m: sample is N+_u
    BitRows masks;                         // bit per sampled member
    BitRows pos_rows;                      // positive adjacency incl. diagonal
};

NeighborhoodSamples draw_samples(const SignedGraph& g, const SampleConfig& cfg);

struct PairEstimate {
    double w = 0;  // estimate of |N+_u ∩ N+_v| from u's sample
    double y = 0;  // deg_plus(u) - w
};

// Ordered estimate: uses u's sample against v's neighborhood.
PairEstimate estimate_w_y(const SignedGraph& g, const NeighborhoodSamples& s, int u, int v);

// Symmetric initial estimate; the pair is relabeled so the smaller-degree
// endpoint (ties: smaller id) plays the "u" role before applying
//   dbar = (Y(u,v) + Y(v,u)) / (deg_plus(u) + Y(v,u)).
double initial_estimate(const SignedGraph& g, const NeighborhoodSamples& s, int u, int v);

// Triangular table (u < v) of initial estimates.
std::vector<double> initial_estimate_table(const SignedGraph& g, const NeighborhoodSamples& s);

// Epsilon-derived constants used by post-processing and the approximate
// rounding parameterization.
struct ConstantLadder {
    double epsilon = 0;
    double c1 = 1, h1 = 0;
    double c2 = 1, h2 = 0;
    double c3 = 1, h3 = 0;
    double c4 = 3, h4 = 0;
    double delta1 = 3, delta2 = 0;
    double d_factor = 2;   // fractional-cost inflation bound
    double t_low = 0;      // positive edges at or below this round to 0
    double t_high = 1.0 / 3.0;  // negative edges at or above this round to 1

    // eps -> 0 limit values; handy for exercising the approximate rounding
    // path, whose parameter derivation rejects the ladder for practical eps.
    static ConstantLadder zero_limit() { return ConstantLadder{}; }
};

ConstantLadder constant_ladder(double epsilon);

// dtilde: clamp positive edges with dbar <= t_low to 0 and negative edges
// with dbar >= t_high to 1, boundaries included.
DistanceOracle post_process(const SignedGraph& g, const std::vector<double>& dbar,
                            const ConstantLadder& ladder);

// Full pipeline; optionally hands back the pre-threshold dbar table.
DistanceOracle build_sampled_oracle(const SignedGraph& g, const SampleConfig& cfg,
                                    std::vector<double>* dbar_out = nullptr);

}  // namespace mmcc
