#include "mmcc/metric_sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmcc/kernels.hpp"
#include "mmcc/metric_exact.hpp"
#include "mmcc/rng.hpp"

namespace mmcc {

int SampleConfig::sample_size(int n) const {
    if (!(epsilon > 0) || !(epsilon < 1))
        throw std::invalid_argument("epsilon must lie in (0,1)");
    if (n <= 1) return 1;
    double m = std::ceil((32.0 / (epsilon * epsilon)) * std::log(static_cast<double>(n)));
    return std::max(1, static_cast<int>(m));
}

NeighborhoodSamples draw_samples(const SignedGraph& g, const SampleConfig& cfg) {
    if (g.n > kDenseOracleMaxVertices)
        throw std::length_error("graph too large for the sampled (dense) pipeline");
    NeighborhoodSamples s;
    s.n = g.n;
    s.m = cfg.sample_size(g.n);
    s.sample.resize(static_cast<std::size_t>(g.n));
    s.exact.assign(static_cast<std::size_t>(g.n), 0);
    s.masks = BitRows(g.n);
    s.pos_rows = positive_bitrows(g);
    for (int u = 0; u < g.n; ++u) {
        std::vector<int> pop = positive_neighborhood_with_self(g, u);
        if (static_cast<int>(pop.size()) <= s.m) {
            s.exact[static_cast<std::size_t>(u)] = 1;
            s.sample[static_cast<std::size_t>(u)] = std::move(pop);
        } else {
            Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(u)));
            // Partial Fisher-Yates: the first m slots become the sample.
            for (int i = 0; i < s.m; ++i) {
                std::size_t j = static_cast<std::size_t>(i) +
                                static_cast<std::size_t>(rng.below(pop.size() - static_cast<std::size_t>(i)));
                std::swap(pop[static_cast<std::size_t>(i)], pop[j]);
            }
            pop.resize(static_cast<std::size_t>(s.m));
            std::sort(pop.begin(), pop.end());
            s.sample[static_cast<std::size_t>(u)] = std::move(pop);
        }
        for (int w : s.sample[static_cast<std::size_t>(u)]) s.masks.set(u, w);
    }
    return s;
}

PairEstimate estimate_w_y(const SignedGraph& g, const NeighborhoodSamples& s, int u, int v) {
    if (u == v) throw std::invalid_argument("pair estimate requires u != v");
    double hits = static_cast<double>(
        kernels::and_popcount(s.masks.row(u), s.pos_rows.row(v), s.masks.words()));
    double deg = static_cast<double>(g.deg_plus(u));
    PairEstimate e;
    if (s.exact[static_cast<std::size_t>(u)]) {
        e.w = hits;  // hits == |N+_u ∩ N+_v| exactly
    } else {
        e.w = deg / static_cast<double>(s.m) * hits;
    }
    e.y = deg - e.w;
    return e;
}

double initial_estimate(const SignedGraph& g, const NeighborhoodSamples& s, int u, int v) {
    int a = u, b = v;
    if (g.deg_plus(b) < g.deg_plus(a) ||
        (g.deg_plus(b) == g.deg_plus(a) && b < a))
        std::swap(a, b);
    PairEstimate ab = estimate_w_y(g, s, a, b);
    PairEstimate ba = estimate_w_y(g, s, b, a);
    return (ab.y + ba.y) / (static_cast<double>(g.deg_plus(a)) + ba.y);
}

std::vector<double> initial_estimate_table(const SignedGraph& g, const NeighborhoodSamples& s) {
    std::size_t pairs = static_cast<std::size_t>(g.n) * (g.n > 0 ? g.n - 1 : 0) / 2;
    std::vector<double> table(pairs, 0.0);
    std::size_t idx = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            table[idx++] = initial_estimate(g, s, u, v);
    return table;
}

ConstantLadder constant_ladder(double epsilon) {
    if (!(epsilon > 0) || !(epsilon < 1))
        throw std::invalid_argument("epsilon must lie in (0,1)");
    ConstantLadder l;
    l.epsilon = epsilon;
    l.c1 = (1 + epsilon) / (1 - epsilon);
    l.h1 = 2 * epsilon / (1 - epsilon);
    l.c2 = l.c1;
    l.h2 = l.h1;
    l.c3 = l.c1 * l.c1;
    l.h3 = (2 * epsilon / (1 - epsilon)) * (1 + 2 * (1 + epsilon) / (1 - epsilon));
    l.c4 = (2 * l.c3 + 1) * l.c3;
    l.h4 = (4 * l.c3 + 1) * (2 * l.c3 + 1) * l.h3;
    l.delta1 = 3 + l.h4;
    l.delta2 = l.h4;
    l.d_factor = 2 * l.c3;
    l.t_low = 2 * l.h3;
    l.t_high = 1.0 / (2 * l.c3 + 1);
    return l;
}

DistanceOracle post_process(const SignedGraph& g, const std::vector<double>& dbar,
                            const ConstantLadder& ladder) {
    std::size_t pairs = static_cast<std::size_t>(g.n) * (g.n > 0 ? g.n - 1 : 0) / 2;
    if (dbar.size() != pairs)
        throw std::invalid_argument("initial-estimate table size mismatch");
    std::vector<double> out(pairs);
    std::size_t idx = 0;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v, ++idx) {
            double d = dbar[idx];
            if (g.positive_edge(u, v)) {
                out[idx] = (d <= ladder.t_low) ? 0.0 : d;
            } else {
                out[idx] = (d >= ladder.t_high) ? 1.0 : d;
            }
        }
    }
    return DistanceOracle::make_sampled(g, std::move(out), positive_bitrows(g));
}

DistanceOracle build_sampled_oracle(const SignedGraph& g, const SampleConfig& cfg,
                                    std::vector<double>* dbar_out) {
    NeighborhoodSamples s = draw_samples(g, cfg);
    std::vector<double> dbar = initial_estimate_table(g, s);
    ConstantLadder ladder = constant_ladder(cfg.epsilon);
    DistanceOracle oracle = post_process(g, dbar, ladder);
    if (dbar_out) *dbar_out = std::move(dbar);
    return oracle;
}

}  // namespace mmcc
