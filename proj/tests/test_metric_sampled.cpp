#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mmcc/metric_exact.hpp"
#include "mmcc/metric_sampled.hpp"
#include "mmcc/synth.hpp"
#include "test_support.hpp"

using namespace mmcc;
using namespace testsupport;

TEST_CASE("constant ladder limits and fixed points") {
    // eps -> 0 limits.
    ConstantLadder tiny = constant_ladder(1e-9);
    CHECK(tiny.c3 == doctest::Approx(1.0));
    CHECK(tiny.c4 == doctest::Approx(3.0));
    CHECK(tiny.h4 == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(tiny.d_factor == doctest::Approx(2.0));

    // eps = 0.01: recomputed independently in exact rationals,
    // c3 = 10201/9801 and h3 = 602/9801.
    ConstantLadder mid = constant_ladder(0.01);
    CHECK(mid.c3 == doctest::Approx(10201.0 / 9801.0).epsilon(1e-12));
    CHECK(mid.h3 == doctest::Approx(602.0 / 9801.0).epsilon(1e-12));

    // eps = 0.5: c1 = 1.5/0.5 = 3, h1 = 1/0.5 = 2.
    ConstantLadder half = constant_ladder(0.5);
    CHECK(half.c1 == doctest::Approx(3.0));
    CHECK(half.h1 == doctest::Approx(2.0));
    CHECK(half.c2 == half.c1);
    CHECK(half.h2 == half.h1);

    CHECK_THROWS_AS(constant_ladder(0.0), std::invalid_argument);
    CHECK_THROWS_AS(constant_ladder(1.0), std::invalid_argument);
    CHECK(SampleConfig{0.029, 0}.in_theory_range());
    CHECK(!SampleConfig{0.2, 0}.in_theory_range());

    // Positive for the whole range, thresholds consistent.
    for (double e : {0.001, 0.01, 0.2, 0.5, 0.9}) {
        ConstantLadder l = constant_ladder(e);
        CHECK(l.c3 > 0);
        CHECK(l.h3 > 0);
        CHECK(l.c4 > 0);
        CHECK(l.h4 > 0);
        CHECK(l.t_low == 2 * l.h3);
        CHECK(l.t_high == doctest::Approx(1.0 / (2 * l.c3 + 1)));
        CHECK(l.delta1 == 3 + l.h4);
        CHECK(l.delta2 == l.h4);
    }
}

TEST_CASE("sample size follows ceil((32/eps^2) ln n)") {
    SampleConfig cfg{0.2, 0};
    CHECK(cfg.sample_size(200) ==
          static_cast<int>(std::ceil(800.0 * std::log(200.0))));
    CHECK(cfg.sample_size(1) == 1);
    SampleConfig bad{0.0, 0};
    CHECK_THROWS_AS(bad.sample_size(10), std::invalid_argument);
}

TEST_CASE("samples: exact flag and determinism") {
    SignedGraph g = random_signed_gnp(40, 0.3, 11);
    SampleConfig cfg{0.2, 99};
    NeighborhoodSamples s = draw_samples(g, cfg);
    // m(40) far exceeds every degree here, so every sample is the full
    // neighborhood.
    for (int u = 0; u < g.n; ++u) {
        CHECK(s.exact[static_cast<std::size_t>(u)]);
        CHECK(s.sample[static_cast<std::size_t>(u)] == positive_neighborhood_with_self(g, u));
    }
    NeighborhoodSamples again = draw_samples(g, cfg);
    CHECK(again.sample == s.sample);
}

TEST_CASE("isolated vertex samples only itself") {
    SignedGraph g = build_from_edges(5, {{1, 2}});
    NeighborhoodSamples s = draw_samples(g, SampleConfig{0.5, 3});
    CHECK(s.sample[0] == std::vector<int>{0});
    CHECK(s.exact[0]);
}

TEST_CASE("genuinely sub-sampled vertices draw m distinct neighbors") {
    // A hub of degree 399 against eps = 0.9 gives m(400) < 400.
    int n = 400;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    SignedGraph g = build_from_edges(n, edges);
    SampleConfig cfg{0.9, 17};
    int m = cfg.sample_size(n);
    REQUIRE(m < g.deg_plus(0));
    NeighborhoodSamples s = draw_samples(g, cfg);
    CHECK(!s.exact[0]);
    CHECK(static_cast<int>(s.sample[0].size()) == m);
    // Distinct, sorted, and drawn from the neighborhood.
    for (std::size_t i = 1; i < s.sample[0].size(); ++i)
        CHECK(s.sample[0][i - 1] < s.sample[0][i]);
    NeighborhoodSamples again = draw_samples(g, cfg);
    CHECK(again.sample[0] == s.sample[0]);

    // W + Y = deg_plus exactly, W scaled from the hit count.
    PairEstimate e = estimate_w_y(g, s, 0, 5);
    CHECK(e.w + e.y == doctest::Approx(static_cast<double>(g.deg_plus(0))));
    CHECK(e.w >= 0);
    CHECK(e.y >= 0);
}

TEST_CASE("exact-flag estimates equal true intersection counts") {
    SignedGraph g = path3();
    NeighborhoodSamples s = draw_samples(g, SampleConfig{0.2, 1});
    PairEstimate e = estimate_w_y(g, s, 0, 1);
    CHECK(e.w == 2.0);
    CHECK(e.y == 0.0);
    // Ordered estimate from the other side uses v's sample.
    PairEstimate f = estimate_w_y(g, s, 1, 0);
    CHECK(f.w == 2.0);
    CHECK(f.y == 1.0);
}

TEST_CASE("zero sample hits give W = 0, Y = deg_plus") {
    SignedGraph g = build_from_edges(4, {{0, 1}, {2, 3}});
    NeighborhoodSamples s = draw_samples(g, SampleConfig{0.3, 5});
    PairEstimate e = estimate_w_y(g, s, 0, 2);
    CHECK(e.w == 0.0);
    CHECK(e.y == doctest::Approx(2.0));
}

TEST_CASE("initial estimates stay in [0,1] and match exact distances on exact flags") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        SignedGraph g = random_signed_gnp(30, 0.4, seed);
        NeighborhoodSamples s = draw_samples(g, SampleConfig{0.2, seed});
        DistanceOracle exact = build_dense_oracle(g);
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                double dbar = initial_estimate(g, s, u, v);
                CHECK(dbar >= 0.0);
                CHECK(dbar <= 1.0);
                CHECK(dbar == initial_estimate(g, s, v, u));
                CHECK(dbar ==
                      doctest::Approx(exact.distance_value(u, v)).epsilon(1e-12));
            }
    }
}

TEST_CASE("post-processing thresholds, boundaries included") {
    SignedGraph g = build_from_edges(3, {{0, 1}});  // (0,1) positive, rest negative
    ConstantLadder ladder = constant_ladder(0.01);
    std::vector<double> dbar(3, 0.0);
    auto idx = [&](int u, int v) {
        return static_cast<std::size_t>(u) * (2 * 3 - u - 1) / 2 + static_cast<std::size_t>(v - u - 1);
    };
    dbar[idx(0, 1)] = ladder.t_low;           // positive edge at the boundary -> 0
    dbar[idx(0, 2)] = ladder.t_high;          // negative pair at the boundary -> 1
    dbar[idx(1, 2)] = ladder.t_high - 1e-6;   // below threshold -> unchanged
    DistanceOracle o = post_process(g, dbar, ladder);
    CHECK(o.distance_value(0, 1) == 0.0);
    CHECK(o.distance_value(0, 2) == 1.0);
    CHECK(o.distance_value(1, 2) == doctest::Approx(ladder.t_high - 1e-6));

    // Positive edge just above the threshold stays put.
    dbar[idx(0, 1)] = ladder.t_low + 1e-6;
    DistanceOracle o2 = post_process(g, dbar, ladder);
    CHECK(o2.distance_value(0, 1) == doctest::Approx(ladder.t_low + 1e-6));
}

TEST_CASE("full sampled pipeline is deterministic per seed") {
    SignedGraph g = random_signed_gnp(25, 0.5, 4);
    std::vector<double> a, b;
    build_sampled_oracle(g, SampleConfig{0.2, 42}, &a);
    build_sampled_oracle(g, SampleConfig{0.2, 42}, &b);
    CHECK(a == b);
}

TEST_CASE("sampled oracle has no exact distances") {
    SignedGraph g = path3();
    DistanceOracle o = build_sampled_oracle(g, SampleConfig{0.2, 1});
    CHECK_THROWS_AS(o.distance(0, 1), std::logic_error);
    CHECK(o.distance_value(0, 1) >= 0.0);
}

TEST_CASE("estimators match an independent recomputation from the sample lists") {
    // Mixed graph: a hub that genuinely subsamples plus low-degree vertices.
    int n = 300;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int v = 1; v + 1 < n; v += 2) edges.emplace_back(v, v + 1);
    SignedGraph g = build_from_edges(n, edges);
    SampleConfig cfg{0.9, 31};
    NeighborhoodSamples s = draw_samples(g, cfg);
    REQUIRE(!s.exact[0]);

    auto recompute = [&](int u, int v) {
        // Hit count straight from the stored sample list and adjacency.
        int hits = 0;
        for (int w : s.sample[static_cast<std::size_t>(u)])
            if (w == v || g.positive_edge(w, v)) ++hits;
        double w_est = s.exact[static_cast<std::size_t>(u)]
                           ? static_cast<double>(hits)
                           : static_cast<double>(g.deg_plus(u)) / s.m * hits;
        return w_est;
    };
    for (int v : {1, 2, 77, 150, 299}) {
        PairEstimate e = estimate_w_y(g, s, 0, v);
        CHECK(e.w == recompute(0, v));
        PairEstimate f = estimate_w_y(g, s, v, 0);
        CHECK(f.w == recompute(v, 0));
    }
}

TEST_CASE("initial estimate composes the ordered estimates after relabeling") {
    int n = 300;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int v = 1; v + 1 < n; v += 2) edges.emplace_back(v, v + 1);
    SignedGraph g = build_from_edges(n, edges);
    NeighborhoodSamples s = draw_samples(g, SampleConfig{0.9, 31});
    REQUIRE(!s.exact[0]);

    for (auto [u, v] : {std::pair{0, 5}, {5, 0}, {3, 4}, {0, 299}}) {
        int a = u, b = v;
        if (g.deg_plus(b) < g.deg_plus(a) || (g.deg_plus(b) == g.deg_plus(a) && b < a))
            std::swap(a, b);
        PairEstimate ab = estimate_w_y(g, s, a, b);
        PairEstimate ba = estimate_w_y(g, s, b, a);
        double expect = (ab.y + ba.y) / (g.deg_plus(a) + ba.y);
        CHECK(initial_estimate(g, s, u, v) == expect);
    }
}
