#include "mmcc/objective.hpp"

#include "mmcc/metric_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mmcc {

int DisagreementVector::max_value() const {
    int m = 0;
    for (int v : y) m = std::max(m, v);
    return m;
}

long long DisagreementVector::sum() const {
    long long s = 0;
    for (int v : y) s += v;
    return s;
}

DisagreementVector disagreement_vector(const SignedGraph& g, const Clustering& c) {
    if (c.n() != g.n)
        throw std::invalid_argument("clustering size does not match graph");
    DisagreementVector out;
    out.y.assign(static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u) {
        int cu = c.assignment[static_cast<std::size_t>(u)];
        int inside_pos = 0;
        for (int v : g.pos_adj[static_cast<std::size_t>(u)])
            if (c.assignment[static_cast<std::size_t>(v)] == cu) ++inside_pos;
        int pos_cut = static_cast<int>(g.pos_adj[static_cast<std::size_t>(u)].size()) - inside_pos;
        int neg_inside =
            static_cast<int>(c.clusters[static_cast<std::size_t>(cu)].size()) - 1 - inside_pos;
        out.y[static_cast<std::size_t>(u)] = pos_cut + neg_inside;
    }
    return out;
}

double lp_norm_objective(const DisagreementVector& y, double p) {
    if (std::isinf(p)) return static_cast<double>(y.max_value());
    if (!(p > 0)) throw std::invalid_argument("lp norm requires p > 0");
    if (p == 1.0) return static_cast<double>(y.sum());
    double s = 0.0;
    for (int v : y.y) s += std::pow(static_cast<double>(v), p);
    return std::pow(s, 1.0 / p);
}

FractionalCostVector fractional_cost(const SignedGraph& g, const DistanceOracle& oracle) {
    if (oracle.n() != g.n)
        throw std::invalid_argument("oracle size does not match graph");
    FractionalCostVector out;
    out.value.assign(static_cast<std::size_t>(g.n), 0.0);
    out.has_exact = oracle.kind() != OracleKind::sampled;
    if (out.has_exact) out.exact.assign(static_cast<std::size_t>(g.n), BigRat(0));

    if (oracle.kind() == OracleKind::sparse_exact) {
        // Positive terms come from the adjacency; negative terms (1-d) are
        // nonzero only on stored pairs, everything else sits at distance 1.
        for (int u = 0; u < g.n; ++u) {
            BigRat acc(0);
            for (const auto& e : oracle.sparse_row(u)) {
                Rational d = distance_from_count(g.n, g.deg_plus(u), g.deg_plus(e.v),
                                                 static_cast<std::int64_t>(e.common));
                if (g.positive_edge(u, e.v))
                    acc += to_bigrat(d);
                else
                    acc += BigRat(1) - to_bigrat(d);
            }
            out.exact[static_cast<std::size_t>(u)] = acc;
        }
    } else if (oracle.kind() == OracleKind::dense_exact) {
        for (int u = 0; u < g.n; ++u) {
            BigRat acc(0);
            for (int v = 0; v < g.n; ++v) {
                if (v == u) continue;
                acc += to_bigrat(oracle.adjusted_distance(u, v));
            }
            out.exact[static_cast<std::size_t>(u)] = acc;
        }
    } else {
        for (int u = 0; u < g.n; ++u) {
            double acc = 0.0;
            for (int v = 0; v < g.n; ++v) {
                if (v == u) continue;
                acc += oracle.adjusted_distance_value(u, v);
            }
            out.value[static_cast<std::size_t>(u)] = acc;
        }
    }

    if (out.has_exact) {
        out.max_exact = BigRat(0);
        for (int u = 0; u < g.n; ++u) {
            out.value[static_cast<std::size_t>(u)] =
                out.exact[static_cast<std::size_t>(u)].convert_to<double>();
            if (out.exact[static_cast<std::size_t>(u)] > out.max_exact)
                out.max_exact = out.exact[static_cast<std::size_t>(u)];
        }
        out.max_value = out.max_exact.convert_to<double>();
    } else {
        out.max_value = 0.0;
        for (double v : out.value) out.max_value = std::max(out.max_value, v);
    }
    return out;
}

}  // namespace mmcc
