#include <gtest/gtest.h>

#include <filesystem>
#include <tuple>

#include "oracles.hpp"
#include "planardist/canonical.hpp"
#include "planardist/enumerate.hpp"
#include "planardist/families.hpp"
#include "planardist/graph6.hpp"
#include "planardist/report_json.hpp"
#include "planardist/sweep.hpp"

using namespace planardist;

namespace {
const BoundAggregate* bound(const LevelReport& l, const std::string& id) {
    for (const auto& b : l.bounds)
        if (b.id == id) return &b;
    return nullptr;
}

std::string temp_path(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("planardist_test_" + name);
    std::filesystem::remove(p);
    return p.string();
}
}  // namespace

TEST(Sweep, MaximalOuterplanarExample) {
    const auto r = sweep(GraphClass::maximal_outerplanar, 8);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.violations(), 0u);
    const LevelReport* l8 = r.level(8);
    ASSERT_NE(l8, nullptr);
    ASSERT_NE(bound(*l8, "THM4.6"), nullptr);
    EXPECT_EQ(bound(*l8, "THM4.6")->violations, 0u);
    EXPECT_EQ(bound(*l8, "THM4.6")->checked, 12u);
    EXPECT_EQ(l8->rho_minus_pi.value, Rational(1));
    // Attainers and the least certificate from Floyd-Warshall over the catalog.
    std::size_t attainers = 0;
    std::string least;
    for (const auto& g : enumerate_maximal_outerplanar(8)) {
        const auto p = oracle::params(g);
        if (p.rho - p.pi != Rational(1)) continue;
        ++attainers;
        const std::string code = canonical_code(g);
        if (least.empty() || code < least) least = code;
    }
    EXPECT_EQ(l8->rho_minus_pi.attained_by, attainers);
    EXPECT_EQ(l8->rho_minus_pi.certificate, least);
    const auto mop8 = generate(FamilySpec{FamilyName::MOP, 8, std::nullopt, std::nullopt}).graph;
    EXPECT_EQ(oracle::params(mop8).rho - oracle::params(mop8).pi, Rational(1));
}

TEST(Sweep, TriangulationAndQuadrangulationExamples) {
    const auto t = sweep(GraphClass::maximal_planar, 6);
    EXPECT_EQ(t.level(6)->count, 2u);
    EXPECT_EQ(bound(*t.level(6), "THM4.1")->violations, 0u);
    const auto q = sweep(GraphClass::quadrangulation, 8);
    EXPECT_EQ(bound(*q.level(8), "THM4.4a")->violations, 0u);
    EXPECT_EQ(bound(*q.level(8), "COR5.6a")->violations, 0u);
    EXPECT_TRUE(q.recounts_agree());
    EXPECT_EQ(q.lemma_failures(), 0u);
}

TEST(Sweep, CertificatesReverify) {
    const auto r = sweep(GraphClass::maximal_planar, 8);
    for (const auto& l : r.levels) {
        const Graph g = from_graph6(l.rad_minus_pi.certificate);
        const auto p = param_summary(g);
        EXPECT_EQ(Rational(p.radius) - p.proximity, l.rad_minus_pi.value);
        for (const auto& b : l.bounds) {
            const auto rep = check_bounds(from_graph6(b.min_slack_certificate));
            ASSERT_NE(rep.find(b.id), nullptr);
            EXPECT_EQ(rep.find(b.id)->slack, b.min_slack);
        }
    }
}

TEST(Sweep, Deterministic) {
    SweepOptions o;
    o.random_count = 300;
    o.seed = 9;
    const auto a = sweep_json(sweep(GraphClass::random_connected, 12, o)).dump();
    const auto b = sweep_json(sweep(GraphClass::random_connected, 12, o)).dump();
    EXPECT_EQ(a, b);
    o.seed = 10;
    EXPECT_NE(a, sweep_json(sweep(GraphClass::random_connected, 12, o)).dump());
}

TEST(Sweep, ResumeMatchesUninterruptedRun) {
    // MOP levels are committed whole, so a smaller budget forces several rounds.
    const std::vector<std::tuple<GraphClass, int, std::size_t>> runs = {
        {GraphClass::maximal_planar, 9, 23}, {GraphClass::random_connected, 10, 23},
        {GraphClass::maximal_outerplanar, 9, 5}};
    for (auto [cls, n_max, budget] : runs) {
        SweepOptions o;
        o.random_count = 700;
        const std::string expected = sweep_json(sweep(cls, n_max, o)).dump();

        o.checkpoint = temp_path(to_string(cls));
        o.stop_after = budget;
        int rounds = 0;
        SweepReport r;
        do {
            r = sweep(cls, n_max, o);
            ++rounds;
        } while (!r.complete && rounds < 1000);
        EXPECT_GT(rounds, 2) << to_string(cls);
        EXPECT_EQ(sweep_json(r).dump(), expected) << to_string(cls);
        std::filesystem::remove(o.checkpoint);
    }
}

TEST(Sweep, CheckpointMismatchIsRejected) {
    SweepOptions o;
    o.checkpoint = temp_path("mismatch");
    sweep(GraphClass::maximal_outerplanar, 6, o);
    EXPECT_THROW(sweep(GraphClass::maximal_outerplanar, 7, o), std::invalid_argument);
    EXPECT_THROW(sweep(GraphClass::quadrangulation, 6, o), std::invalid_argument);
    std::filesystem::remove(o.checkpoint);
}

TEST(Sweep, RangeChecks) {
    EXPECT_THROW(sweep(GraphClass::maximal_planar, 11), std::invalid_argument);
    EXPECT_THROW(sweep(GraphClass::quadrangulation, 3), std::invalid_argument);
}

TEST(Sweep, LevelJsonRoundTrip) {
    const auto r = sweep(GraphClass::quadrangulation, 7);
    for (const auto& l : r.levels) EXPECT_EQ(level_json(level_from_json(level_json(l))).dump(), level_json(l).dump());
}
