#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planardist/connectivity.hpp"
#include "planardist/enumerate.hpp"
#include "planardist/families.hpp"

using namespace planardist;

namespace {
Graph octahedron() {
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) e.emplace_back(u, v);
    return Graph::from_edges(6, e);
}
}  // namespace

TEST(Connectivity, Examples) {
    for (int n = 3; n <= 9; ++n) EXPECT_EQ(vertex_connectivity(Graph::cycle(n)).kappa, 2);
    const auto k5 = vertex_connectivity(Graph::complete(5));
    EXPECT_EQ(k5.kappa, 4);
    EXPECT_FALSE(k5.witness_cut.has_value());
    const auto t11 = generate(FamilySpec{FamilyName::T, 11, std::nullopt, std::nullopt});
    EXPECT_EQ(vertex_connectivity(t11.graph).kappa, 3);
    EXPECT_EQ(oracle::kappa(t11.graph), 3);
    const auto split = vertex_connectivity(Graph::empty(3));
    EXPECT_EQ(split.kappa, 0);
    ASSERT_TRUE(split.witness_cut.has_value());
    EXPECT_TRUE(split.witness_cut->empty());
}

TEST(Connectivity, IsKConnected) {
    EXPECT_TRUE(is_k_connected(octahedron(), 4));
    EXPECT_FALSE(is_k_connected(Graph::path(4), 2));
    const auto q8 = generate(FamilySpec{FamilyName::Q, 8, std::nullopt, std::nullopt});
    EXPECT_TRUE(is_k_connected(q8.graph, 2));
    EXPECT_FALSE(is_k_connected(q8.graph, 3));
    EXPECT_THROW(is_k_connected(Graph::complete(4), 4), std::invalid_argument);
}

TEST(Connectivity, FamiliesHaveStatedConnectivity) {
    auto kappa = [](FamilySpec s) { return connectivity_number(generate(s).graph); };
    EXPECT_EQ(kappa({FamilyName::T, 17, std::nullopt, std::nullopt}), 3);
    EXPECT_EQ(kappa({FamilyName::Q, 12, std::nullopt, std::nullopt}), 2);
    EXPECT_EQ(kappa({FamilyName::MOP, 12, std::nullopt, std::nullopt}), 2);
    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(kappa({FamilyName::Gnk, 3 * k + 2, k, std::nullopt}), k);
        EXPECT_EQ(kappa({FamilyName::GnkBar, 3 * k + 2, k, std::nullopt}), k);
    }
}

// Flow result, witness validity and lexicographic minimality against
// separator enumeration on random graphs.
TEST(Connectivity, MatchesBruteForce) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 400; ++i) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.3 + 0.6 * (rng() % 100) / 100.0);
        const auto flow = vertex_connectivity(g);
        const auto brute = vertex_connectivity_brute(g);
        ASSERT_EQ(flow.kappa, oracle::kappa(g));
        ASSERT_EQ(flow.kappa, brute.kappa);
        ASSERT_EQ(flow.witness_cut.has_value(), brute.witness_cut.has_value());
        if (flow.witness_cut && !flow.witness_cut->empty()) {
            ASSERT_TRUE(separates(g, *flow.witness_cut));
            ASSERT_EQ(*flow.witness_cut, *brute.witness_cut);
        }
    }
}

TEST(Connectivity, CatalogMembersMatchBruteForce) {
    for (int n = 4; n <= 8; ++n)
        for (const auto& g : enumerate_triangulations(n)) ASSERT_EQ(connectivity_number(g), oracle::kappa(g));
    for (int n = 4; n <= 8; ++n)
        for (const auto& g : enumerate_quadrangulations(n)) ASSERT_EQ(connectivity_number(g), oracle::kappa(g));
}
