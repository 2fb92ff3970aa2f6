#include "mmcc/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mmcc {

int SignedGraph::delta_max() const {
    int d = 1;
    for (int u = 0; u < n; ++u) d = std::max(d, deg_plus(u));
    return n == 0 ? 0 : d;
}

bool SignedGraph::positive_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = pos_adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::size_t SignedGraph::num_positive_edges() const {
    std::size_t total = 0;
    for (const auto& a : pos_adj) total += a.size();
    return total / 2;
}

std::vector<std::pair<int, int>> SignedGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_positive_edges());
    for (int u = 0; u < n; ++u)
        for (int v : pos_adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SignedGraph build_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    SignedGraph g;
    g.n = n;
    g.pos_adj.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex out of range: edge (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) continue;
        g.pos_adj[static_cast<std::size_t>(u)].push_back(v);
        g.pos_adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : g.pos_adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

PosDegreeProfile degree_profile(const SignedGraph& g) {
    PosDegreeProfile p;
    p.deg_plus.resize(static_cast<std::size_t>(g.n));
    for (int u = 0; u < g.n; ++u) {
        p.deg_plus[static_cast<std::size_t>(u)] = g.deg_plus(u);
        p.delta_max = std::max(p.delta_max, g.deg_plus(u));
    }
    return p;
}

std::vector<int> positive_neighborhood_with_self(const SignedGraph& g, int u) {
    if (u < 0 || u >= g.n) throw std::invalid_argument("vertex out of range");
    const auto& a = g.pos_adj[static_cast<std::size_t>(u)];
    std::vector<int> out;
    out.reserve(a.size() + 1);
    auto it = std::lower_bound(a.begin(), a.end(), u);
    out.insert(out.end(), a.begin(), it);
    out.push_back(u);
    out.insert(out.end(), it, a.end());
    return out;
}

std::vector<int> two_hop_positive(const SignedGraph& g, int u) {
    if (u < 0 || u >= g.n) throw std::invalid_argument("vertex out of range");
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> out;
    auto visit = [&](int x) {
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            out.push_back(x);
        }
    };
    visit(u);
    for (int w : g.pos_adj[static_cast<std::size_t>(u)]) {
        visit(w);
        for (int x : g.pos_adj[static_cast<std::size_t>(w)]) visit(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BitRows positive_bitrows(const SignedGraph& g) {
    BitRows rows(g.n);
    for (int u = 0; u < g.n; ++u) {
        rows.set(u, u);
        for (int v : g.pos_adj[static_cast<std::size_t>(u)]) rows.set(u, v);
    }
    return rows;
}

}  // namespace mmcc
