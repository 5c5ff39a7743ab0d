#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sharpmax/errors.hpp"
#include "sharpmax/graph.hpp"
#include "support/oracles.hpp"

using namespace sharpmax;

TEST_CASE("named families") {
    Graph k4 = build_named(Family::complete, 4);
    CHECK(k4.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(k4.dist[u][v] == (u == v ? 0 : 1));

    Graph s4 = build_named(Family::star, 4);
    CHECK(s4.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(s4.dist[1][2] == 2);

    Graph q3 = build_named(Family::hypercube, 3);
    CHECK(q3.n == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(geometry(q3).diameter == 3);

    Graph c4 = build_named(Family::cycle, 4);
    CHECK(geometry(c4).diameter == 2);

    CHECK_THROWS_AS(build_named(Family::complete, 1), validation_error);
    CHECK_THROWS_AS(build_named(Family::cycle, 2), validation_error);
    CHECK_THROWS_AS(build_named(Family::hypercube, 0), validation_error);
}

TEST_CASE("from_edge_list validation") {
    Graph p3 = from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.dist[0][2] == 2);

    CHECK_THROWS_WITH_AS(from_edge_list(3, {{0, 1}}), doctest::Contains("disconnected"),
                         validation_error);
    CHECK_THROWS_WITH_AS(from_edge_list(3, {{0, 0}, {0, 1}, {1, 2}}), doctest::Contains("self-loop"),
                         validation_error);
    CHECK_THROWS_WITH_AS(from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}}), doctest::Contains("duplicate"),
                         validation_error);
    CHECK_THROWS_AS(from_edge_list(3, {{0, 5}}), validation_error);
}

TEST_CASE("balls") {
    Graph s4 = build_named(Family::star, 4);
    CHECK(ball(s4, 0, 1).count() == 4);
    VertexSet leaf_ball = ball(s4, 1, 1);
    CHECK(leaf_ball.count() == 2);
    CHECK(leaf_ball.contains(0));
    CHECK(leaf_ball.contains(1));

    Graph c5 = build_named(Family::cycle, 5);
    for (int v = 0; v < 5; ++v) CHECK(ball(c5, v, 2).count() == 5);

    CHECK_THROWS_AS(ball(s4, 9, 1), validation_error);
}

TEST_CASE("geometry") {
    Graph k5 = build_named(Family::complete, 5);
    Geometry g5 = geometry(k5);
    CHECK(g5.diameter == 1);
    CHECK(g5.omega.count() == 5);

    Graph s6 = build_named(Family::star, 6);
    Geometry gs = geometry(s6);
    CHECK(gs.diameter == 2);
    CHECK(gs.omega.count() == 5);
    CHECK_FALSE(gs.omega.contains(0));

    Graph p4 = build_named(Family::path, 4);
    Geometry gp = geometry(p4);
    CHECK(gp.diameter == 3);
    CHECK(gp.omega.indices() == std::vector<int>{0, 3});
}

TEST_CASE("min_degree_vertex") {
    Graph s5 = build_named(Family::star, 5);
    Geometry geo = geometry(s5);
    int a = min_degree_vertex(s5, geo.omega);
    CHECK(a == 1);
    CHECK(s5.degree(a) == 1);

    Graph k4 = build_named(Family::complete, 4);
    VertexSet all(4);
    for (int v = 0; v < 4; ++v) all.add(v);
    CHECK(min_degree_vertex(k4, all) == 0);

    Graph p3 = build_named(Family::path, 3);
    VertexSet all3(3);
    for (int v = 0; v < 3; ++v) all3.add(v);
    CHECK(p3.degree(min_degree_vertex(p3, all3)) == 1);

    CHECK_THROWS_AS(min_degree_vertex(k4, VertexSet(4)), validation_error);
}

TEST_CASE("distances match the boolean-matrix oracle") {
    std::vector<Graph> graphs = {build_named(Family::complete, 4), build_named(Family::star, 5),
                                 build_named(Family::path, 6), build_named(Family::cycle, 7),
                                 build_named(Family::hypercube, 3)};
    for (int seed = 0; seed < 10; ++seed) graphs.push_back(oracle::random_connected_graph(6, 100 + seed));
    for (const Graph& g : graphs) {
        auto expect = oracle::bool_matrix_distances(g.n, g.edges);
        CHECK(g.dist == expect);
    }
}

TEST_CASE("ball chain stabilizes at the eccentricity") {
    Graph g = oracle::random_connected_graph(7, 7);
    Geometry geo = geometry(g);
    for (int v = 0; v < g.n; ++v) {
        int prev = 0;
        for (int r = 0; r <= geo.eccentricity[v]; ++r) {
            int c = ball(g, v, r).count();
            CHECK(c >= prev);
            prev = c;
        }
        CHECK(prev == g.n);
        CHECK(ball(g, v, geo.eccentricity[v] + 3).count() == g.n);
        CHECK(ball(g, v, 1).count() == g.degree(v) + 1);
    }
    for (int v : geo.omega.indices()) CHECK(geo.eccentricity[v] == geo.diameter);
}

TEST_CASE("edge list text round trip") {
    Graph g = oracle::random_connected_graph(6, 42);
    std::stringstream ss;
    write_edge_list_text(ss, g);
    Graph back = read_edge_list_text(ss);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);

    std::stringstream bad("3 1\n0 1\n");
    CHECK_THROWS_AS(read_edge_list_text(bad), validation_error);
}
