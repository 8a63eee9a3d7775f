#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planardist/classify.hpp"
#include "planardist/families.hpp"

using namespace planardist;

namespace {
FamilySpec spec(FamilyName f, int n, std::optional<int> k = std::nullopt, std::optional<int> d = std::nullopt) {
    return FamilySpec{f, n, k, d};
}
Rational r(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
}  // namespace

TEST(SequentialSum, Examples) {
    const Graph k1 = Graph::complete(1);
    const Graph k2bar = Graph::empty(2);
    const Graph k2 = Graph::complete(2);
    const Graph a[] = {k1, k1};
    EXPECT_EQ(sequential_sum(a), Graph::complete(2));
    const Graph b[] = {k1, k2bar, k1};
    const Graph c4 = sequential_sum(b);
    EXPECT_TRUE(oracle::isomorphic(c4, Graph::cycle(4)));
    const Graph c[] = {k1, k2, k2, k1};
    EXPECT_EQ(sequential_sum(c).edge_count(), 10);
    EXPECT_THROW(sequential_sum(std::span<const Graph>{}), std::invalid_argument);
}

TEST(Families, GeneratedShapes) {
    const auto t11 = generate(spec(FamilyName::T, 11)).graph;
    EXPECT_EQ(t11.order(), 11);
    EXPECT_EQ(t11.edge_count(), 27);
    EXPECT_TRUE(classify(t11).maximal_planar);
    EXPECT_EQ(oracle::kappa(t11), 3);

    const auto mop8 = generate(spec(FamilyName::MOP, 8));
    EXPECT_EQ(mop8.graph.edge_count(), 13);
    EXPECT_TRUE(classify(mop8.graph).maximal_outerplanar);
    const auto d = oracle::floyd_warshall(mop8.graph);
    auto sigma = [&](Vertex v) {
        int s = 0;
        for (int x : d[v]) s += x;
        return s;
    };
    EXPECT_EQ(sigma(mop8.vertex("b2")), 9);
    EXPECT_EQ(sigma(mop8.vertex("b0")), 16);

    const auto q8 = generate(spec(FamilyName::Q, 8)).graph;
    EXPECT_EQ(q8.order(), 8);
    EXPECT_TRUE(classify(q8).quadrangulation);

    const auto de = generate(spec(FamilyName::DiamExtremal, 14, 2, 4));
    EXPECT_EQ(de.graph.order(), 14);
    EXPECT_EQ(oracle::params(de.graph).diam, 4);
    const auto mid = std::count_if(de.labels.begin(), de.labels.end(),
                                   [](const std::string& l) { return l.rfind("v2_", 0) == 0; });
    EXPECT_EQ(mid, 8);
    for (Vertex u = 0; u < 14; ++u)
        for (Vertex v = u + 1; v < 14; ++v)
            if (de.labels[u].rfind("v2_", 0) == 0 && de.labels[v].rfind("v2_", 0) == 0)
                EXPECT_TRUE(de.graph.adjacent(u, v));
}

TEST(Families, Admissibility) {
    auto rejects = [](FamilySpec s, const std::string& field) {
        try {
            generate(s);
            return false;
        } catch (const std::invalid_argument& e) {
            return std::string(e.what()).find(field) != std::string::npos;
        }
    };
    EXPECT_TRUE(rejects(spec(FamilyName::T, 12), "n"));
    EXPECT_TRUE(rejects(spec(FamilyName::MOP, 10), "n"));
    EXPECT_TRUE(rejects(spec(FamilyName::Q, 4), "n"));
    EXPECT_TRUE(rejects(spec(FamilyName::Gnk, 12), "kappa"));
    EXPECT_TRUE(rejects(spec(FamilyName::Gnk, 11, 2), "n"));
    EXPECT_TRUE(rejects(spec(FamilyName::DiamExtremal, 14, 2), "d"));
    EXPECT_TRUE(rejects(spec(FamilyName::DiamExtremal, 6, 2, 5), "d"));
    EXPECT_TRUE(admissible(spec(FamilyName::T, 5)));
    EXPECT_TRUE(admissible(spec(FamilyName::MOP, 4)));
    EXPECT_FALSE(admissible(spec(FamilyName::GnkBar, 5, 3)));
    EXPECT_THROW(parse_family_name("X"), std::invalid_argument);
}

// Printed closed forms, written out here from the constructions' stated
// values, against Floyd-Warshall on the generated graphs.
TEST(Families, StatedValuesMatchOracle) {
    for (int n : {5, 11, 17, 23, 29}) {
        const auto p = oracle::params(generate(spec(FamilyName::T, n)).graph);
        EXPECT_EQ(Rational(p.rad), r(n + 1, 6)) << n;
        EXPECT_EQ(Rational(p.diam), r(n + 1, 3)) << n;
        EXPECT_EQ(p.pi, r(n + 1, 12) + r(2, n - 1)) << n;
        EXPECT_EQ(p.rho, r(n + 2, 6) + r(1, 3 * (n - 1))) << n;
    }
    for (int n : {4, 8, 12, 16, 20}) {
        const auto p = oracle::params(generate(spec(FamilyName::MOP, n)).graph);
        EXPECT_EQ(Rational(p.rad), r(n, 4)) << n;
        EXPECT_EQ(Rational(p.diam), r(n, 2)) << n;
        EXPECT_EQ(p.pi, r(n + 1, 8) + r(9, 8 * (n - 1))) << n;
        EXPECT_EQ(p.rho, r(n + 1, 4) + r(1, 4 * (n - 1))) << n;
    }
    for (int n : {8, 12, 16}) {
        const auto p = oracle::params(generate(spec(FamilyName::Q, n)).graph);
        EXPECT_EQ(Rational(p.rad), r(n, 4)) << n;
        EXPECT_EQ(Rational(p.diam), r(n, 2)) << n;
        EXPECT_EQ(p.rho, r(n + 1, 4) + r(1, 4 * (n - 1))) << n;
    }
}

TEST(Families, ClosedFormsReportThemselves) {
    const auto t = closed_forms(spec(FamilyName::T, 11));
    ASSERT_TRUE(t.rad && t.diam && t.pi && t.rho);
    EXPECT_EQ(t.rad->value, r(2));
    EXPECT_EQ(t.diam->value, r(4));
    EXPECT_EQ(t.pi->value, r(6, 5));
    EXPECT_EQ(t.rho->value, r(11, 5));

    const auto g = closed_forms(spec(FamilyName::Gnk, 12, 2));
    ASSERT_TRUE(g.rho && g.pi);
    EXPECT_EQ(g.rho->value - g.pi->value, r(17, 11));

    const auto q = closed_forms(spec(FamilyName::Q, 8));
    ASSERT_TRUE(q.rad && q.pi);
    EXPECT_EQ(q.rad->value, r(2));
    EXPECT_EQ(q.pi->provenance, Provenance::known_discrepancy);
    ASSERT_TRUE(q.pi->oracle.has_value());
    EXPECT_EQ(*q.pi->oracle, r(10, 7));
    EXPECT_NE(q.pi->value, *q.pi->oracle);
}

TEST(Families, MedianAndRemoteLabels) {
    for (auto s : {spec(FamilyName::T, 17), spec(FamilyName::MOP, 12), spec(FamilyName::Q, 12)}) {
        const auto g = generate(s);
        const auto f = closed_forms(s);
        const auto d = oracle::floyd_warshall(g.graph);
        auto sigma = [&](Vertex v) {
            int total = 0;
            for (int x : d[v]) total += x;
            return total;
        };
        int lo = 1 << 20, hi = 0;
        for (Vertex v = 0; v < g.graph.order(); ++v) {
            lo = std::min(lo, sigma(v));
            hi = std::max(hi, sigma(v));
        }
        EXPECT_EQ(sigma(g.vertex(f.median_label)), lo) << describe(s);
        EXPECT_EQ(sigma(g.vertex(f.remote_label)), hi) << describe(s);
    }
    EXPECT_THROW(generate(spec(FamilyName::T, 11)).vertex("zz"), std::out_of_range);
}
