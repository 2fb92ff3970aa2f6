#pragma once

// Disagreement accounting and fractional-cost evaluation.

#include <vector>

#include "mmcc/clustering.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/rational.hpp"
#include "mmcc/signed_graph.hpp"

namespace mmcc {

struct DisagreementVector {
    std::vector<int> y;
    int max_value() const;
    long long sum() const;
};

// y(u) = positive edges at u cut by the clustering + negative edges kept
// inside u's cluster. Self-loops never disagree.
DisagreementVector disagreement_vector(const SignedGraph& g, const Clustering& c);

// p = infinity gives max_u y(u); p = 1 the plain sum. Throws for p <= 0.
double lp_norm_objective(const DisagreementVector& y, double p);

// Per-vertex  ŷ(u) = Σ_{v in N+_u, v≠u} d(u,v) + Σ_{v in N-_u} (1 - d(u,v)).
// Exact oracles carry exact per-vertex rationals alongside the doubles.
struct FractionalCostVector {
    std::vector<double> value;
    std::vector<BigRat> exact;  // empty for sampled oracles
    bool has_exact = false;
    double max_value = 0.0;
    BigRat max_exact;
};

FractionalCostVector fractional_cost(const SignedGraph& g, const DistanceOracle& oracle);

}  // namespace mmcc
