#include "mmcc/rounding.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mmcc {

namespace {

void verify(bool ok, const std::string& name) {
    if (!ok) throw std::invalid_argument("rounding constants violate: " + name);
}

}  // namespace

ApproxRoundingConstants derive_rounding_constants(const BigRat& delta1, const BigRat& delta2) {
    if (delta1 < 1) throw std::invalid_argument("delta1 must be >= 1");
    if (delta2 < 0) throw std::invalid_argument("delta2 must be >= 0");
    ApproxRoundingConstants k;
    k.delta1 = delta1;
    k.delta2 = delta2;
    const BigRat& d1 = delta1;
    const BigRat& d2 = delta2;
    BigRat d1_2 = d1 * d1;
    BigRat d1_3 = d1_2 * d1;
    BigRat numer = 1 - d2 - d1 * d2 - d1_3 * d2 - d1_2 * d2;
    BigRat denom = d1_2 + d1_3 * (d1 + 1) + d1 + 1;
    k.r = numer / denom;
    if (!(k.r > 0))
        throw std::invalid_argument(
            "rounding constants violate: r > 0 (delta2 too large for delta1)");
    k.c1 = d1 + d2 / k.r;
    k.b = (k.c1 + 1) * d1 + d2 / k.r;
    k.c2 = d1 * (k.b + 1) + d2 / k.r;

    const BigRat& r = k.r;
    const BigRat& c1 = k.c1;
    const BigRat& b = k.b;
    const BigRat& c2 = k.c2;
    verify(b >= 1, "b >= 1");
    verify(c2 * r < 1, "c2*r < 1");
    verify(c1 <= b && b < c2, "c1 <= b < c2");
    verify(1 - 2 * d1 * b * r - d2 - r >= 0, "1 - 2*delta1*b*r - delta2 - r >= 0");
    verify(b * r / d1 - c1 * r - r - d2 / d1 >= 0, "b*r/delta1 - c1*r - r - delta2/delta1 >= 0");
    verify(c2 * r / d1 - b * r - r - d2 / d1 >= 0, "c2*r/delta1 - b*r - r - delta2/delta1 >= 0");
    verify(c1 * r / d1 - d2 / d1 >= r, "c1*r/delta1 - delta2/delta1 >= r");
    verify(1 - (d1 * b + d1) * r - d2 >= r, "1 - (delta1*b + delta1)*r - delta2 >= r");
    verify((b / d1 - 1) * r - d2 / d1 >= r, "(b/delta1 - 1)*r - delta2/delta1 >= r");
    verify(1 - (d1 * c2 + d1) * r - d2 >= r, "1 - (delta1*c2 + delta1)*r - delta2 >= r");
    return k;
}

ApproxRoundingConstants derive_rounding_constants(double delta1, double delta2) {
    // Doubles convert to cpp_rational exactly.
    return derive_rounding_constants(BigRat(delta1), BigRat(delta2));
}

RoundingParams RoundingParams::theory() {
    return RoundingParams{};
}

RoundingParams RoundingParams::swept(const Rational& r1, const Rational& r2) {
    if (!(Rational{0, 1} < r1 && r1 < Rational{1, 1}) ||
        !(Rational{0, 1} < r2 && r2 < Rational{1, 1}))
        throw std::invalid_argument("radii must lie in (0,1)");
    RoundingParams p;
    p.mode = Mode::swept;
    p.exact_radii = true;
    p.r1 = r1;
    p.r2 = r2;
    p.r1_value = to_double(r1);
    p.r2_value = to_double(r2);
    Rational twice{2 * r1.num, r1.den};
    p.outside_theory_regime = r2 < twice;
    return p;
}

RoundingParams RoundingParams::approx_from(const ApproxRoundingConstants& c) {
    RoundingParams p;
    p.mode = Mode::approx;
    BigRat r2 = c.b * c.r;
    if (!(c.r > 0 && c.r <= r2 && r2 < 1))
        throw std::invalid_argument("approx radii must satisfy 0 < r1 <= r2 < 1");
    auto fits = [](const BigRat& x, Rational& out) {
        const auto& num = boost::multiprecision::numerator(x);
        const auto& den = boost::multiprecision::denominator(x);
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) return false;
        out = make_rational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
        return true;
    };
    p.exact_radii = fits(c.r, p.r1) && fits(r2, p.r2);
    p.r1_value = c.r.convert_to<double>();
    p.r2_value = r2.convert_to<double>();
    return p;
}

namespace {

void check_params(const RoundingParams& p) {
    if (!(p.r1_value > 0 && p.r1_value < 1 && p.r2_value > 0 && p.r2_value < 1))
        throw std::invalid_argument("rounding radii must lie in (0,1)");
}

// Ball membership for one oracle/params combination: exact rational compare
// when available, double compare otherwise.
struct BallTest {
    const DistanceOracle& o;
    const RoundingParams& p;
    bool exact;

    BallTest(const DistanceOracle& oracle, const RoundingParams& params)
        : o(oracle), p(params),
          exact(params.exact_radii && oracle.kind() != OracleKind::sampled) {}

    bool le_r1(int u, int v) const { return le(u, v, p.r1, p.r1_value); }
    bool le_r2(int u, int v) const { return le(u, v, p.r2, p.r2_value); }

  private:
    bool le(int u, int v, const Rational& r, double rv) const {
        if (exact) return o.distance(u, v) <= r;
        return o.distance_value(u, v) <= rv;
    }
};

// Position-tracked binary max-heap ordered by (L desc, id asc).
class ScoreHeap {
  public:
    ScoreHeap(const std::vector<double>& score, int n) : score_(score) {
        heap_.resize(static_cast<std::size_t>(n));
        pos_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            heap_[static_cast<std::size_t>(i)] = i;
            pos_[static_cast<std::size_t>(i)] = i;
        }
        for (int i = n / 2 - 1; i >= 0; --i) sift_down(static_cast<std::size_t>(i));
    }

    bool empty() const { return heap_.empty(); }
    int top() const { return heap_.front(); }

    void remove(int v) {
        std::size_t i = static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)]);
        std::size_t last = heap_.size() - 1;
        move_to(i, heap_[last]);
        heap_.pop_back();
        pos_[static_cast<std::size_t>(v)] = -1;
        if (i < heap_.size()) {
            sift_up(i);
            sift_down(i);
        }
    }

    void update(int v) {
        std::size_t i = static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)]);
        sift_up(i);
        sift_down(i);
    }

  private:
    bool before(int a, int b) const {
        double la = score_[static_cast<std::size_t>(a)];
        double lb = score_[static_cast<std::size_t>(b)];
        if (la != lb) return la > lb;
        return a < b;
    }

    void move_to(std::size_t i, int v) {
        heap_[i] = v;
        pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }

    void sift_up(std::size_t i) {
        while (i > 0) {
            std::size_t parent = (i - 1) / 2;
            if (!before(heap_[i], heap_[parent])) break;
            int a = heap_[i], b = heap_[parent];
            move_to(i, b);
            move_to(parent, a);
            i = parent;
        }
    }

    void sift_down(std::size_t i) {
        for (;;) {
            std::size_t l = 2 * i + 1, r = l + 1, best = i;
            if (l < heap_.size() && before(heap_[l], heap_[best])) best = l;
            if (r < heap_.size() && before(heap_[r], heap_[best])) best = r;
            if (best == i) return;
            int a = heap_[i], b = heap_[best];
            move_to(i, b);
            move_to(best, a);
            i = best;
        }
    }

    const std::vector<double>& score_;
    std::vector<int> heap_;
    std::vector<int> pos_;
};

}  // namespace

Clustering round_dense(const DistanceOracle& o, const RoundingParams& params) {
    check_params(params);
    const int n = o.n();
    BallTest ball(o, params);

    std::vector<double> score(static_cast<std::size_t>(n), params.r1_value);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (ball.le_r1(u, v)) {
                double term = params.r1_value - o.distance_value(u, v);
                score[static_cast<std::size_t>(u)] += term;
                score[static_cast<std::size_t>(v)] += term;
            }
        }
    }

    Clustering out;
    out.assignment.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> clustered(static_cast<std::size_t>(n), 0);
    int remaining = n;
    std::vector<int> members;
    while (remaining > 0) {
        int w = -1;
        double best = -std::numeric_limits<double>::infinity();
        for (int u = 0; u < n; ++u) {
            if (!clustered[static_cast<std::size_t>(u)] &&
                score[static_cast<std::size_t>(u)] > best) {
                best = score[static_cast<std::size_t>(u)];
                w = u;
            }
        }
        members.clear();
        for (int v = 0; v < n; ++v) {
            if (clustered[static_cast<std::size_t>(v)]) continue;
            if (v == w || ball.le_r2(w, v)) members.push_back(v);
        }
        int t = out.num_clusters();
        for (int v : members) {
            out.assignment[static_cast<std::size_t>(v)] = t;
            clustered[static_cast<std::size_t>(v)] = 1;
        }
        out.clusters.push_back(members);
        out.centers.push_back(w);
        remaining -= static_cast<int>(members.size());

        for (int v : members) {
            for (int x = 0; x < n; ++x) {
                if (clustered[static_cast<std::size_t>(x)]) continue;
                if (ball.le_r1(v, x))
                    score[static_cast<std::size_t>(x)] -=
                        params.r1_value - o.distance_value(v, x);
            }
        }
    }
    return out;
}

Clustering round_sparse(const DistanceOracle& o, const RoundingParams& params) {
    if (o.kind() != OracleKind::sparse_exact)
        throw std::invalid_argument("round_sparse requires a sparse-exact oracle");
    check_params(params);
    if (!params.exact_radii)
        throw std::invalid_argument("round_sparse requires exact radii");
    const int n = o.n();

    // Exact ball tests straight off the stored counts.
    auto le_radius = [&](int u, const DistanceOracle::SparseEntry& e, const Rational& r) {
        std::int64_t den = o.deg_plus(u) + o.deg_plus(e.v) - static_cast<std::int64_t>(e.common);
        std::int64_t num = den - static_cast<std::int64_t>(e.common);
        return static_cast<__int128>(num) * r.den <= static_cast<__int128>(r.num) * den;
    };
    auto term_value = [&](int u, const DistanceOracle::SparseEntry& e) {
        std::int64_t den = o.deg_plus(u) + o.deg_plus(e.v) - static_cast<std::int64_t>(e.common);
        std::int64_t num = den - static_cast<std::int64_t>(e.common);
        return params.r1_value - static_cast<double>(num) / static_cast<double>(den);
    };

    std::vector<double> score(static_cast<std::size_t>(n), params.r1_value);
    for (int u = 0; u < n; ++u)
        for (const auto& e : o.sparse_row(u))
            if (le_radius(u, e, params.r1))
                score[static_cast<std::size_t>(u)] += term_value(u, e);

    ScoreHeap heap(score, n);
    Clustering out;
    out.assignment.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> clustered(static_cast<std::size_t>(n), 0);
    std::vector<int> members;
    while (!heap.empty()) {
        int w = heap.top();
        members.clear();
        bool inserted = false;
        for (const auto& e : o.sparse_row(w)) {
            if (!inserted && e.v > w) {
                members.push_back(w);
                inserted = true;
            }
            if (!clustered[static_cast<std::size_t>(e.v)] && le_radius(w, e, params.r2))
                members.push_back(e.v);
        }
        if (!inserted) members.push_back(w);

        int t = out.num_clusters();
        for (int v : members) {
            out.assignment[static_cast<std::size_t>(v)] = t;
            clustered[static_cast<std::size_t>(v)] = 1;
            heap.remove(v);
        }
        out.clusters.push_back(members);
        out.centers.push_back(w);

        for (int v : members) {
            for (const auto& e : o.sparse_row(v)) {
                if (clustered[static_cast<std::size_t>(e.v)]) continue;
                if (le_radius(v, e, params.r1)) {
                    score[static_cast<std::size_t>(e.v)] -= term_value(v, e);
                    heap.update(e.v);
                }
            }
        }
    }
    return out;
}

Clustering round_approx(const DistanceOracle& oracle, const ConstantLadder& ladder) {
    ApproxRoundingConstants c = derive_rounding_constants(ladder.delta1, ladder.delta2);
    return round_dense(oracle, RoundingParams::approx_from(c));
}

}  // namespace mmcc
