#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planardist/canonical.hpp"
#include "planardist/classify.hpp"
#include "planardist/enumerate.hpp"
#include "planardist/families.hpp"
#include "planardist/graph6.hpp"

using namespace planardist;

namespace {
std::vector<std::size_t> counts(std::vector<Graph> (*f)(int), int lo, int hi) {
    std::vector<std::size_t> out;
    for (int n = lo; n <= hi; ++n) out.push_back(f(n).size());
    return out;
}

bool in_catalog(const std::vector<Graph>& catalog, const Graph& g) {
    const std::string code = canonical_code(g);
    for (const auto& h : catalog)
        if (to_graph6(h) == code) return true;
    return false;
}
}  // namespace

TEST(Enumerate, SpecExamples) {
    EXPECT_EQ(enumerate_maximal_outerplanar(4).size(), 1u);
    EXPECT_EQ(enumerate_maximal_outerplanar(5).size(), 1u);
    EXPECT_EQ(enumerate_maximal_outerplanar(6).size(), 3u);
    EXPECT_EQ(enumerate_triangulations(4).size(), 1u);
    EXPECT_EQ(enumerate_triangulations(5).size(), 1u);
    EXPECT_EQ(enumerate_triangulations(6).size(), 2u);
    EXPECT_EQ(enumerate_quadrangulations(4).size(), 1u);
    EXPECT_EQ(enumerate_quadrangulations(5).size(), 1u);
    EXPECT_EQ(canonical_code(enumerate_quadrangulations(4).front()), canonical_code(Graph::cycle(4)));
}

// Published sequences: triangulations of the sphere, outerplanar
// triangulations (unlabeled polygon dissections), simple quadrangulations.
TEST(Enumerate, KnownCounts) {
    EXPECT_EQ(counts(enumerate_triangulations, 4, 9), (std::vector<std::size_t>{1, 1, 2, 5, 14, 50}));
    EXPECT_EQ(counts(enumerate_maximal_outerplanar, 3, 12),
              (std::vector<std::size_t>{1, 1, 1, 3, 4, 12, 27, 82, 228, 733}));
    EXPECT_EQ(counts(enumerate_quadrangulations, 4, 9), (std::vector<std::size_t>{1, 1, 2, 3, 9, 18}));
}

TEST(Enumerate, SecondMethodsAgree) {
    for (int n = 4; n <= 7; ++n) {
        std::vector<std::string> mine;
        for (const auto& g : enumerate_triangulations(n)) mine.push_back(to_graph6(g));
        EXPECT_EQ(mine, triangulations_by_filter(n)) << n;
    }
    for (int n = 3; n <= 11; ++n) {
        std::vector<std::string> mine;
        for (const auto& g : enumerate_maximal_outerplanar(n)) mine.push_back(to_graph6(g));
        EXPECT_EQ(mine, maximal_outerplanar_by_ears(n)) << n;
    }
    for (int n = 4; n <= 8; ++n) {
        std::vector<std::string> mine;
        for (const auto& g : enumerate_quadrangulations(n)) mine.push_back(to_graph6(g));
        EXPECT_EQ(mine, quadrangulations_by_maximality(n)) << n;
    }
}

TEST(Enumerate, MembersPassClassPredicates) {
    for (int n = 4; n <= 9; ++n)
        for (const auto& g : enumerate_triangulations(n)) {
            ASSERT_TRUE(classify(g).maximal_planar);
            ASSERT_TRUE(oracle::boost_planar(g));
        }
    for (int n = 3; n <= 10; ++n)
        for (const auto& g : enumerate_maximal_outerplanar(n)) ASSERT_TRUE(classify(g).maximal_outerplanar);
    for (int n = 4; n <= 9; ++n)
        for (const auto& g : enumerate_quadrangulations(n)) ASSERT_TRUE(classify(g).quadrangulation);
}

TEST(Enumerate, CatalogsArePairwiseNonIsomorphic) {
    for (int n = 4; n <= 8; ++n)
        for (auto* f : {enumerate_triangulations, enumerate_maximal_outerplanar, enumerate_quadrangulations}) {
            const auto cat = f(n);
            for (std::size_t i = 0; i < cat.size(); ++i)
                for (std::size_t j = i + 1; j < cat.size(); ++j) ASSERT_FALSE(oracle::isomorphic(cat[i], cat[j]));
        }
}

TEST(Enumerate, FamilyMembersAppear) {
    const auto t5 = generate(FamilySpec{FamilyName::T, 5, std::nullopt, std::nullopt}).graph;
    EXPECT_TRUE(in_catalog(enumerate_triangulations(5), t5));
    for (int n : {4, 8, 12}) {
        const auto mop = generate(FamilySpec{FamilyName::MOP, n, std::nullopt, std::nullopt}).graph;
        EXPECT_TRUE(in_catalog(enumerate_maximal_outerplanar(n), mop)) << n;
    }
    const auto quads = enumerate_quadrangulations(8);
    EXPECT_TRUE(in_catalog(quads, generate(FamilySpec{FamilyName::Q, 8, std::nullopt, std::nullopt}).graph));
    std::vector<Edge> cube;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) cube.emplace_back(v, v ^ (1 << b));
    EXPECT_TRUE(in_catalog(quads, Graph::from_edges(8, cube)));
}

TEST(Enumerate, RangesAreEnforced) {
    EXPECT_THROW(enumerate_maximal_outerplanar(2), std::invalid_argument);
    EXPECT_THROW(enumerate_maximal_outerplanar(15), std::invalid_argument);
    EXPECT_THROW(enumerate_triangulations(11), std::invalid_argument);
    EXPECT_THROW(enumerate_quadrangulations(10), std::invalid_argument);
    EXPECT_THROW(enumerate_class(GraphClass::random_connected, 5), std::invalid_argument);
    EXPECT_THROW(parse_graph_class("planar"), std::invalid_argument);
}

TEST(Enumerate, FlipClosureResumes) {
    FlipClosure s = flip_closure_start(8);
    std::size_t steps = 0;
    while (!s.done()) {
        FlipClosure copy = s;
        s = std::move(copy);
        flip_closure_step(s, 1);
        ++steps;
    }
    EXPECT_EQ(s.seen.size(), 14u);
    EXPECT_EQ(steps, 14u);
}

TEST(Random, ConnectedAndDeterministic) {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_connected_graph(a, 16);
        ASSERT_EQ(g, random_connected_graph(b, 16));
        ASSERT_TRUE(is_connected(g));
        ASSERT_GE(g.order(), 2);
        ASSERT_LE(g.order(), 16);
        ASSERT_GE(g.edge_count(), g.order() - 1);
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) ASSERT_LT(uniform_below(rng, 7), 7u);
    EXPECT_THROW(uniform_below(rng, 0), std::invalid_argument);
    EXPECT_THROW(random_connected_graph(rng, 1), std::invalid_argument);
}
