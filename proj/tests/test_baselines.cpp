#include <doctest.h>

#include <array>
#include <stdexcept>

#include "mmcc/baselines.hpp"
#include "mmcc/objective.hpp"
#include "mmcc/synth.hpp"
#include "test_support.hpp"

using namespace mmcc;
using namespace testsupport;

TEST_CASE("pivot on an all-negative graph yields singletons") {
    SignedGraph g = build_from_edges(5, {});
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Clustering c = pivot(g, seed);
        CHECK(c.num_clusters() == 5);
    }
    CHECK(pivot_mean_objective(g, 50, 1) == 0.0);
}

TEST_CASE("pivot on a single positive clique yields one cluster") {
    SignedGraph g = planted_cliques(1, 6).graph;
    for (std::uint64_t seed = 0; seed < 4; ++seed)
        CHECK(pivot(g, seed).num_clusters() == 1);
    CHECK(pivot_mean_objective(g, 50, 2) == 0.0);
}

TEST_CASE("pivot hand-simulated orders on the path graph") {
    SignedGraph g = path3();
    std::array<int, 3> order1{1, 0, 2};
    Clustering a = pivot_with_order(g, order1);
    CHECK(a.num_clusters() == 1);
    CHECK(a.clusters[0] == std::vector<int>{0, 1, 2});

    std::array<int, 3> order2{0, 1, 2};
    Clustering b = pivot_with_order(g, order2);
    CHECK(b.num_clusters() == 2);
    CHECK(b.clusters[0] == std::vector<int>{0, 1});
    CHECK(b.clusters[1] == std::vector<int>{2});
}

TEST_CASE("pivot clusters are each a pivot plus positive neighbors") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        SignedGraph g = random_signed_gnp(20, 0.3, seed);
        Clustering c = pivot(g, seed * 31 + 7);
        REQUIRE(static_cast<int>(c.centers.size()) == c.num_clusters());
        std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
        for (int t = 0; t < c.num_clusters(); ++t) {
            int p = c.centers[static_cast<std::size_t>(t)];
            for (int v : c.clusters[static_cast<std::size_t>(t)]) {
                CHECK(!seen[static_cast<std::size_t>(v)]);
                seen[static_cast<std::size_t>(v)] = 1;
                if (v != p) CHECK(g.positive_edge(p, v));
            }
        }
        for (char s : seen) CHECK(s == 1);
    }
}

TEST_CASE("pivot is deterministic per seed") {
    SignedGraph g = random_signed_gnp(30, 0.4, 5);
    CHECK(pivot(g, 42).assignment == pivot(g, 42).assignment);
}

TEST_CASE("path graph: every pivot order has objective 1, mean is exactly 1") {
    SignedGraph g = path3();
    std::vector<int> order{0, 1, 2};
    double total = 0;
    int count = 0;
    do {
        auto y = disagreement_vector(g, pivot_with_order(g, order));
        total += y.max_value();
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(count == 6);
    double exact_expectation = total / count;
    CHECK(exact_expectation == 1.0);
    CHECK(pivot_mean_objective(g, 10000, 9) == doctest::Approx(exact_expectation).epsilon(0.02));
}

TEST_CASE("brute force on the path graph") {
    OracleResult r = brute_force_opt(path3());
    CHECK(r.opt_value == 1);
    CHECK(r.partitions_scanned == 5);
    CHECK(disagreement_vector(path3(), r.witness).max_value() == 1);
}

TEST_CASE("brute force trivial optima") {
    SignedGraph two_cliques = build_from_edges(4, {{0, 1}, {2, 3}});
    CHECK(brute_force_opt(two_cliques).opt_value == 0);
    CHECK(brute_force_opt(k3()).opt_value == 0);
    CHECK(brute_force_opt(k3()).witness.num_clusters() == 1);
}

TEST_CASE("brute force capacity guard") {
    SignedGraph g = build_from_edges(13, {});
    CHECK_THROWS_AS(brute_force_opt(g), std::length_error);
}

TEST_CASE("brute force agrees with an unpruned enumeration") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SignedGraph g = random_signed_gnp(6, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
        OracleResult r = brute_force_opt(g);
        CHECK(r.opt_value == naive_opt(g));
        CHECK(disagreement_vector(g, r.witness).max_value() == r.opt_value);
        CHECK(r.partitions_scanned == 203);  // Bell(6)
    }
}

TEST_CASE("brute force opt is zero exactly on perfectly clusterable graphs") {
    for (const auto& g : all_signed_graphs(4)) {
        OracleResult r = brute_force_opt(g);
        bool perfect = disagreement_vector(g, r.witness).max_value() == 0;
        CHECK((r.opt_value == 0) == perfect);
    }
}
