#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "mmcc/io.hpp"
#include "mmcc/metric_exact.hpp"
#include "mmcc/report.hpp"
#include "mmcc/synth.hpp"
#include "test_support.hpp"

using namespace mmcc;
using namespace testsupport;

TEST_CASE("edge-list parsing remaps ids in first-appearance order") {
    std::istringstream in("0 1\n1 2\n");
    EdgeListData data = parse_edge_list(in);
    CHECK(data.n == 3);
    CHECK(data.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("edge-list parsing handles comments and directed duplicates") {
    std::istringstream in("# comment\n5 7\n7 5\n");
    EdgeListData data = parse_edge_list(in);
    CHECK(data.n == 2);
    CHECK(data.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(data.external_ids == std::vector<long long>{5, 7});
}

TEST_CASE("edge-list parse errors carry line numbers") {
    std::istringstream bad("a b\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(bad), doctest::Contains("line 1"), std::runtime_error);
    std::istringstream trailing("1 2\n3 4 5\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(trailing), doctest::Contains("line 2"),
                         std::runtime_error);
}

TEST_CASE("write/parse round trip reproduces the graph") {
    SignedGraph g = random_signed_gnp(17, 0.3, 21);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    EdgeListData data = parse_edge_list(in);
    // Vertices with no positive edges do not appear in an edge list.
    SignedGraph h = data.build();
    std::vector<std::vector<int>> mapped(static_cast<std::size_t>(g.n));
    for (int u = 0; u < h.n; ++u) {
        long long ext = data.external_ids[static_cast<std::size_t>(u)];
        for (int v : h.pos_adj[static_cast<std::size_t>(u)])
            mapped[static_cast<std::size_t>(ext)].push_back(
                static_cast<int>(data.external_ids[static_cast<std::size_t>(v)]));
    }
    for (auto& row : mapped) std::sort(row.begin(), row.end());
    for (int u = 0; u < g.n; ++u) CHECK(mapped[static_cast<std::size_t>(u)] == g.pos_adj[u]);
}

TEST_CASE("circles parsing") {
    std::istringstream edges("10 11\n11 12\n");
    EdgeListData data = parse_edge_list(edges);

    std::istringstream one("circle0 10 12\n");
    CircleSet set = parse_circles(one, data);
    REQUIRE(set.circles.size() == 1);
    CHECK(set.circles[0].label == "circle0");
    CHECK(set.circles[0].members == std::vector<int>{0, 2});
    CHECK(set.dropped_members == 0);

    std::istringstream empty("");
    CHECK(parse_circles(empty, data).circles.empty());

    std::istringstream missing("c0 10 99\n");
    CircleSet dropped = parse_circles(missing, data);
    CHECK(dropped.dropped_members == 1);
    CHECK(dropped.circles[0].members == std::vector<int>{0});

    std::istringstream bad("c0 10 x\n");
    CHECK_THROWS_WITH_AS(parse_circles(bad, data), doctest::Contains("line 1"),
                         std::runtime_error);
}

TEST_CASE("metric dump formats") {
    SignedGraph g = path3();
    std::ostringstream dense;
    dump_metric_csv(dense, build_dense_oracle(g));
    CHECK(dense.str() == "0,1,1,3\n0,2,2,3\n1,2,1,3\n");
    std::ostringstream sparse;
    dump_metric_csv(sparse, build_sparse_oracle(g));
    CHECK(sparse.str() == dense.str());
}

TEST_CASE("containment report fractions") {
    // Clusters: {0..3} and {4}, min size 2 keeps only the first.
    Clustering c = Clustering::from_assignment({0, 0, 0, 0, 1}, 2);
    CircleSet circles;
    circles.circles.push_back({"b", {0, 1, 2}});
    circles.circles.push_back({"a", {0, 1, 2}});  // tie on intersection, label "a" wins
    auto rows = circle_containment_report(c, circles, 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].size == 4);
    CHECK(rows[0].best_label == "a");
    CHECK(rows[0].fraction == doctest::Approx(0.75));

    CircleSet full;
    full.circles.push_back({"all", {0, 1, 2, 3}});
    CHECK(circle_containment_report(c, full, 2)[0].fraction == 1.0);

    CircleSet disjoint;
    disjoint.circles.push_back({"z", {4}});
    disjoint.circles.push_back({"y", {4}});
    auto none = circle_containment_report(c, disjoint, 2);
    CHECK(none[0].fraction == 0.0);
    CHECK(none[0].best_label == "y");
}

TEST_CASE("radius sweep emits one ordered row per grid point") {
    SignedGraph g = planted_cliques(3, 4).graph;
    DistanceOracle oracle = build_dense_oracle(g);

    std::vector<std::pair<Rational, Rational>> single{{make_rational(7, 10), make_rational(7, 10)}};
    CHECK(radius_sweep(g, oracle, single, 0).size() == 1);

    std::vector<std::pair<Rational, Rational>> common;
    for (int i = 1; i <= 19; ++i)
        common.push_back({make_rational(i, 20), make_rational(i, 20)});
    auto rows = radius_sweep(g, oracle, common, 0);
    CHECK(rows.size() == 19);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].r1 < rows[i].r1);

    std::vector<std::pair<Rational, Rational>> grid;
    for (int i = 1; i <= 19; ++i)
        for (int j = 1; j <= 19; ++j)
            grid.push_back({make_rational(i, 20), make_rational(j, 20)});
    CHECK(radius_sweep(g, oracle, grid, 0).size() == 361);

    CHECK_THROWS_AS(radius_sweep(g, oracle, {}, 0), std::invalid_argument);
}

TEST_CASE("reports serialize with schema tag and stable key order") {
    RunReport r;
    r.algorithm = "cluster-exact";
    r.params = "r1=1/5,r2=2/5";
    r.objective_linf = 1;
    r.objective_l1 = 2;
    r.fractional_cost_max = 0.5;
    r.num_clusters = 3;
    r.runtime_ms = 1.5;
    r.seed = 7;
    auto j = report_to_json(r);
    CHECK(j["schema"] == 1);
    std::string text = j.dump();
    CHECK(text.find("\"schema\"") < text.find("\"algorithm\""));
    CHECK(text.find("\"algorithm\"") < text.find("\"objective_linf\""));
    CHECK(text.find("\"objective_linf\"") < text.find("\"seed\""));

    CHECK(report_csv_header().substr(0, 9) == "algorithm");
    CHECK(report_csv_row(r).find("cluster-exact") == 0);
}
