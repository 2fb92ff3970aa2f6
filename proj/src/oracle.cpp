#include "mmcc/oracle.hpp"

#include <algorithm>

namespace mmcc {

bool DistanceOracle::positive_edge(int u, int v) const {
    if (u == v) return false;
    if (kind_ == OracleKind::sparse_exact) {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }
    return pos_.test(u, v);
}

std::pair<std::int64_t, std::int64_t> DistanceOracle::raw_fraction(int u, int v) const {
    check_pair(u, v);
    std::int64_t c = 0;
    if (kind_ == OracleKind::dense_exact) {
        c = dense_common_[tri_index(u, v)];
    } else if (kind_ == OracleKind::sparse_exact) {
        auto row = sparse_row(u);
        auto it = std::lower_bound(row.begin(), row.end(), v,
                                   [](const SparseEntry& e, int x) { return e.v < x; });
        if (it == row.end() || it->v != v) return {1, 1};  // implicit distance 1
        c = it->common;
    } else {
        throw std::logic_error("sampled oracle has no exact distances");
    }
    std::int64_t den = deg_plus(u) + deg_plus(v) - c;
    return {den - c, den};
}

Rational DistanceOracle::distance(int u, int v) const {
    auto [num, den] = raw_fraction(u, v);
    return make_rational(num, den);
}

double DistanceOracle::distance_value(int u, int v) const {
    if (kind_ == OracleKind::sampled) {
        check_pair(u, v);
        return sampled_[tri_index(u, v)];
    }
    auto [num, den] = raw_fraction(u, v);
    return static_cast<double>(num) / static_cast<double>(den);
}

Rational DistanceOracle::adjusted_distance(int u, int v) const {
    auto [num, den] = raw_fraction(u, v);
    if (positive_edge(u, v)) return make_rational(num, den);
    return make_rational(den - num, den);
}

double DistanceOracle::adjusted_distance_value(int u, int v) const {
    double d = distance_value(u, v);
    return positive_edge(u, v) ? d : 1.0 - d;
}

std::span<const DistanceOracle::SparseEntry> DistanceOracle::sparse_row(int u) const {
    if (kind_ != OracleKind::sparse_exact)
        throw std::logic_error("sparse_row on a non-sparse oracle");
    return {rows_.data() + row_ptr_[static_cast<std::size_t>(u)],
            rows_.data() + row_ptr_[static_cast<std::size_t>(u) + 1]};
}

std::size_t DistanceOracle::stored_pairs() const {
    return rows_.size() / 2;
}

DistanceOracle DistanceOracle::make_dense(const SignedGraph& g, std::vector<std::uint32_t> common,
                                          BitRows rows) {
    DistanceOracle o;
    o.kind_ = OracleKind::dense_exact;
    o.n_ = g.n;
    o.deg_plus_.resize(static_cast<std::size_t>(g.n));
    for (int u = 0; u < g.n; ++u) o.deg_plus_[static_cast<std::size_t>(u)] = g.deg_plus(u);
    o.dense_common_ = std::move(common);
    o.pos_ = std::move(rows);
    return o;
}

DistanceOracle DistanceOracle::make_sparse(const SignedGraph& g, std::vector<std::size_t> row_ptr,
                                           std::vector<SparseEntry> rows) {
    DistanceOracle o;
    o.kind_ = OracleKind::sparse_exact;
    o.n_ = g.n;
    o.deg_plus_.resize(static_cast<std::size_t>(g.n));
    for (int u = 0; u < g.n; ++u) o.deg_plus_[static_cast<std::size_t>(u)] = g.deg_plus(u);
    o.row_ptr_ = std::move(row_ptr);
    o.rows_ = std::move(rows);
    o.adj_ = g.pos_adj;
    return o;
}

DistanceOracle DistanceOracle::make_sampled(const SignedGraph& g, std::vector<double> values,
                                            BitRows rows) {
    DistanceOracle o;
    o.kind_ = OracleKind::sampled;
    o.n_ = g.n;
    o.deg_plus_.resize(static_cast<std::size_t>(g.n));
    for (int u = 0; u < g.n; ++u) o.deg_plus_[static_cast<std::size_t>(u)] = g.deg_plus(u);
    o.sampled_ = std::move(values);
    o.pos_ = std::move(rows);
    return o;
}

}  // namespace mmcc
