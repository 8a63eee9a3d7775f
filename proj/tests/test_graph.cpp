#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "planardist/distance.hpp"
#include "planardist/families.hpp"
#include "planardist/graph.hpp"
#include "planardist/graph6.hpp"

using namespace planardist;

TEST(Graph, FromEdgesNormalizes) {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(p3.edge_count(), 2);
    EXPECT_FALSE(p3.collapsed_duplicates());
    EXPECT_EQ(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}).edge_count(), 6);
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_EQ(c4.edge_count(), 4);
    EXPECT_TRUE(c4.collapsed_duplicates());
    EXPECT_EQ(c4, Graph::cycle(4));
    const Graph rev = Graph::from_edges(3, {{2, 1}, {1, 0}});
    EXPECT_EQ(rev, p3);
    ASSERT_EQ(rev.neighbors(1).size(), 2u);
    EXPECT_EQ(rev.neighbors(1)[0], 0);
}

TEST(Graph, FromEdgesRejectsLoopsAndRange) {
    try {
        Graph::from_edges(3, {{1, 1}});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    }
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edges(3, {{-1, 0}}), std::invalid_argument);
}

TEST(Graph, DerivedGraphs) {
    const Graph k4 = Graph::complete(4);
    EXPECT_EQ(k4.without_edge(0, 1).edge_count(), 5);
    EXPECT_EQ(k4.without_edge(0, 1).with_edge(0, 1), k4);
    const Vertex drop[] = {0};
    EXPECT_EQ(k4.without_vertices(drop), Graph::complete(3));
    EXPECT_EQ(Graph::cycle(4).with_apex().edge_count(), 8);
    const int perm[] = {3, 2, 1, 0};
    EXPECT_EQ(Graph::path(4).relabeled(perm), Graph::path(4));
    EXPECT_TRUE(is_bipartite(Graph::cycle(6)));
    EXPECT_FALSE(is_bipartite(Graph::cycle(5)));
    EXPECT_FALSE(is_connected(Graph::empty(2)));
    EXPECT_EQ(min_degree(Graph::path(5)), 1);
}

TEST(Graph6, KnownStrings) {
    EXPECT_EQ(to_graph6(Graph::complete(4)), "C~");
    EXPECT_EQ(to_graph6(Graph::path(3)), "Bg");
    EXPECT_EQ(to_graph6(Graph::empty(0)), "?");
    EXPECT_EQ(from_graph6("C~"), Graph::complete(4));
    EXPECT_EQ(from_graph6(">>graph6<<C~\n"), Graph::complete(4));
}

TEST(Graph6, RoundTripRandomAndLarge) {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 5, 30, 62, 63, 64, 100, 300}) {
        const Graph g = oracle::random_graph(rng, n, 0.3);
        EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
    }
}

TEST(Graph6, RejectsMalformed) {
    EXPECT_THROW(from_graph6(""), std::invalid_argument);
    EXPECT_THROW(from_graph6("C"), std::invalid_argument);
    EXPECT_THROW(from_graph6("C~~"), std::invalid_argument);
    EXPECT_THROW(from_graph6("C\x01"), std::invalid_argument);
}

TEST(Graph6, Stream) {
    std::istringstream in("C~\n\nBg\n");
    const auto gs = read_graph6_stream(in);
    ASSERT_EQ(gs.size(), 2u);
    EXPECT_EQ(gs[1], Graph::path(3));
}

TEST(Distance, Examples) {
    EXPECT_EQ(distance_matrix(Graph::path(3)).at(0, 2), 2);
    const auto k4 = distance_matrix(Graph::complete(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) EXPECT_EQ(k4.at(u, v), u == v ? 0 : 1);
    EXPECT_EQ(distance_matrix(Graph::cycle(6)).at(0, 3), 3);
    const auto split = distance_matrix(Graph::empty(3));
    EXPECT_FALSE(split.connected);
    EXPECT_EQ(split.at(0, 1), kUnreachable);
}

TEST(Distance, ParamSummaryExamples) {
    for (int n = 2; n <= 7; ++n) {
        const auto p = param_summary(Graph::complete(n));
        EXPECT_EQ(p.proximity, Rational(1));
        EXPECT_EQ(p.remoteness, Rational(1));
        EXPECT_EQ(p.radius, 1);
        EXPECT_EQ(p.diameter, 1);
    }
    const auto p5 = param_summary(Graph::path(5));
    EXPECT_EQ(p5.proximity, Rational(3, 2));
    EXPECT_EQ(p5.remoteness, Rational(5, 2));
    const auto c6 = param_summary(Graph::cycle(6));
    EXPECT_EQ(c6.proximity, Rational(9, 5));
    EXPECT_EQ(c6.remoteness, Rational(9, 5));
    EXPECT_EQ(c6.median_vertices.size(), 6u);
    EXPECT_THROW(param_summary(Graph::empty(3)), std::invalid_argument);
    EXPECT_THROW(param_summary(Graph::empty(1)), std::invalid_argument);
}

TEST(Distance, StatusExamples) {
    EXPECT_EQ(status(Graph::path(4), 0), 6);
    EXPECT_EQ(status(Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 0), 4);
    const auto t11 = generate(FamilySpec{FamilyName::T, 11, std::nullopt, std::nullopt});
    EXPECT_EQ(status(t11.graph, t11.vertex("b0")), 22);
    EXPECT_THROW(status(Graph::path(4), 4), std::invalid_argument);

    EXPECT_EQ(status_restricted(Graph::path(4), 0, {}), 0);
    const Vertex x3[] = {3};
    EXPECT_EQ(status_restricted(Graph::path(4), 0, x3), 3);
    const Vertex x123[] = {1, 2, 3};
    EXPECT_EQ(status_restricted(Graph::cycle(6), 0, x123), 6);
    const Vertex bad[] = {9};
    EXPECT_THROW(status_restricted(Graph::path(4), 0, bad), std::invalid_argument);
}

TEST(Distance, LevelSets) {
    const auto k4 = level_sets(Graph::complete(4), 0);
    ASSERT_EQ(k4.levels.size(), 2u);
    EXPECT_EQ(k4.levels[1], (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(level_sets(Graph::path(5), 2).counts(), (std::vector<int>{1, 2, 2}));
    const auto q8 = generate(FamilySpec{FamilyName::Q, 8, std::nullopt, std::nullopt});
    EXPECT_EQ(level_sets(q8.graph, q8.vertex("b0")).counts(), (std::vector<int>{1, 2, 2, 2, 1}));
    EXPECT_THROW(level_sets(Graph::path(3), 5), std::invalid_argument);
}

// BFS-based invariants against Floyd-Warshall on random connected graphs.
TEST(Distance, MatchesFloydWarshall) {
    std::mt19937_64 rng(2024);
    int tested = 0;
    while (tested < 1000) {
        const int n = 2 + static_cast<int>(rng() % 14);
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.6 * (rng() % 100) / 100.0);
        const auto fw = oracle::floyd_warshall(g);
        const auto dm = distance_matrix(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                ASSERT_EQ(dm.at(u, v), fw[u][v] >= oracle::kInf ? kUnreachable : fw[u][v]);
        if (!is_connected(g)) continue;
        const auto p = param_summary(g);
        const auto o = oracle::params(g);
        ASSERT_EQ(p.proximity, o.pi);
        ASSERT_EQ(p.remoteness, o.rho);
        ASSERT_EQ(p.radius, o.rad);
        ASSERT_EQ(p.diameter, o.diam);
        ASSERT_LE(p.diameter, 2 * p.radius);
        ASSERT_LE(p.proximity, p.remoteness);
        ASSERT_GE(p.proximity, Rational(1));
        ++tested;
    }
}
