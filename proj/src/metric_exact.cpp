#include "mmcc/metric_exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mmcc {

namespace {

void check_dense_capacity(int n, int max_vertices) {
    if (n > max_vertices)
        throw std::length_error("graph too large for the dense metric table (n=" +
                                std::to_string(n) + ", cap=" + std::to_string(max_vertices) +
                                "); use the sparse oracle instead");
}

}  // namespace

CommonCounts common_pos_counts_dense(const SignedGraph& g, int max_vertices) {
    check_dense_capacity(g.n, max_vertices);
    BitRows rows = positive_bitrows(g);
    CommonCounts c;
    c.n = g.n;
    c.m.assign(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u) {
        c.m[static_cast<std::size_t>(u) * g.n + u] = static_cast<std::uint32_t>(g.deg_plus(u));
        for (int v = u + 1; v < g.n; ++v) {
            auto cnt = static_cast<std::uint32_t>(rows.intersect_count(u, v));
            c.m[static_cast<std::size_t>(u) * g.n + v] = cnt;
            c.m[static_cast<std::size_t>(v) * g.n + u] = cnt;
        }
    }
    return c;
}

Rational distance_from_count(int n, int deg_u, int deg_v, std::int64_t common) {
    if (deg_u < 1 || deg_v < 1 || deg_u > n || deg_v > n)
        throw std::logic_error("distance_from_count: degree out of range");
    if (common < 0 || common > std::min(deg_u, deg_v))
        throw std::logic_error("distance_from_count: common count out of range");
    std::int64_t den = static_cast<std::int64_t>(deg_u) + deg_v - common;
    if (den < 1) throw std::logic_error("distance_from_count: empty union");
    return make_rational(den - common, den);
}

DistanceOracle build_dense_oracle(const SignedGraph& g, int max_vertices) {
    check_dense_capacity(g.n, max_vertices);
    BitRows rows = positive_bitrows(g);
    std::size_t pairs = static_cast<std::size_t>(g.n) * (g.n > 0 ? g.n - 1 : 0) / 2;
    std::vector<std::uint32_t> common(pairs, 0);
    std::size_t idx = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            common[idx++] = static_cast<std::uint32_t>(rows.intersect_count(u, v));
    return DistanceOracle::make_dense(g, std::move(common), std::move(rows));
}

DistanceOracle build_sparse_oracle(const SignedGraph& g) {
    std::vector<std::size_t> row_ptr(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<DistanceOracle::SparseEntry> rows;

    // Wedge counting: cnt[x] accumulates |N+_u ∩ N+_x| by walking w in
    // N+_u (self included) and x in N+_w (self included).
    std::vector<std::uint32_t> cnt(static_cast<std::size_t>(g.n), 0);
    std::vector<int> touched;
    auto bump = [&](int x) {
        if (cnt[static_cast<std::size_t>(x)]++ == 0) touched.push_back(x);
    };
    for (int u = 0; u < g.n; ++u) {
        auto walk_from = [&](int w) {
            if (w != u) bump(w);  // x = w via w's self-loop
            for (int x : g.pos_adj[static_cast<std::size_t>(w)])
                if (x != u) bump(x);
        };
        walk_from(u);
        for (int w : g.pos_adj[static_cast<std::size_t>(u)]) walk_from(w);

        std::sort(touched.begin(), touched.end());
        for (int x : touched) {
            rows.push_back({x, cnt[static_cast<std::size_t>(x)]});
            cnt[static_cast<std::size_t>(x)] = 0;
        }
        touched.clear();
        row_ptr[static_cast<std::size_t>(u) + 1] = rows.size();
    }
    return DistanceOracle::make_sparse(g, std::move(row_ptr), std::move(rows));
}

}  // namespace mmcc
