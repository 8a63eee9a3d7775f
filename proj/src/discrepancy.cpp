#include "planardist/discrepancy.hpp"

#include <algorithm>

#include "planardist/bounds.hpp"
#include "planardist/classify.hpp"
#include "planardist/connectivity.hpp"
#include "planardist/distance.hpp"
#include "planardist/families.hpp"

namespace planardist {

namespace {

Rational r(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

DiscrepancyEvidence evidence(int n, const Rational& printed, const Rational& reference) {
    return {n, to_string(printed), to_string(reference), printed != reference};
}

bool all_differ(const DiscrepancyItem& item) {
    return !item.evidence.empty() &&
           std::all_of(item.evidence.begin(), item.evidence.end(), [](const auto& e) { return e.differs; });
}

DiscrepancyItem q_order() {
    DiscrepancyItem item;
    item.id = "Q.k";
    item.summary = "Q_n: the printed k gives order 2k+2 different from n; generator uses k=(n-2)/2";
    item.printed_formula = "k = (n-2)/4, order 2k+2";
    item.reference_formula = "n";
    bool generated_ok = true;
    for (int n : {8, 12, 16}) {
        const Rational k = r(n - 2, 4);
        item.evidence.push_back(evidence(n, k * 2 + 2, r(n)));
        const auto g = generate(FamilySpec{FamilyName::Q, n, std::nullopt, std::nullopt});
        generated_ok = generated_ok && g.graph.order() == n && classify(g.graph).quadrangulation;
    }
    item.reproduced = all_differ(item) && generated_ok;
    return item;
}

DiscrepancyItem q_proximity() {
    DiscrepancyItem item;
    item.id = "Q.pi";
    item.summary = "Q_n: printed proximity disagrees with the value computed on the generated graph";
    item.printed_formula = "(n+17)/8 + 17/(8(n-1))";
    item.reference_formula = "computed pi(Q_n)";
    bool anchor = false;
    for (int n : {8, 12, 16}) {
        const Rational printed = r(n + 17, 8) + r(17, 8 * (n - 1));
        const Rational computed =
            param_summary(generate(FamilySpec{FamilyName::Q, n, std::nullopt, std::nullopt}).graph).proximity;
        item.evidence.push_back(evidence(n, printed, computed));
        if (n == 8) anchor = computed == r(10, 7);
    }
    item.reproduced = all_differ(item) && anchor;
    return item;
}

// A quarantined corollary against its parent theorem. When `attained_by_mop`
// is set, MOP_n must attain the derived value exactly.
DiscrepancyItem corollary(const std::string& id, bool attained_by_mop) {
    const QuarantineSpec* qs = find_quarantined(id);
    DiscrepancyItem item;
    item.id = id;
    if (!qs) {
        item.summary = "missing from the quarantine list";
        return item;
    }
    item.summary = "printed constant disagrees with " + qs->derived_from;
    item.printed_formula = qs->printed_formula;
    item.reference_formula = qs->derived_formula;
    bool attained = true;
    for (int n : {8, 12, 16, 20}) {
        const BoundArgs a{n, 0, 0};
        item.evidence.push_back(evidence(n, qs->printed(a), qs->derived(a)));
        if (attained_by_mop && n <= 16) {
            const auto p =
                param_summary(generate(FamilySpec{FamilyName::MOP, n, std::nullopt, std::nullopt}).graph);
            attained = attained && computed_value(qs->quantity, p) == qs->derived(a);
        }
    }
    if (attained_by_mop)
        item.summary += attained ? "; MOP_n attains the derived value" : "; MOP_n does not attain the derived value";
    item.reproduced = all_differ(item) && attained;
    return item;
}

Graph icosahedron() {
    std::vector<Edge> e;
    for (int i = 1; i <= 5; ++i) {
        const int next = i % 5 + 1;
        e.emplace_back(0, i);
        e.emplace_back(i, next);
        e.emplace_back(i, i + 5);
        e.emplace_back(i, next + 5);
        e.emplace_back(i + 5, next + 5);
        e.emplace_back(i + 5, 11);
    }
    return Graph::from_edges(12, e);
}

Graph octahedron() {
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) e.emplace_back(u, v);
    return Graph::from_edges(6, e);
}

}  // namespace

std::vector<DiscrepancyItem> discrepancy_report() {
    return {q_order(),
            q_proximity(),
            corollary("COR5.5b", false),
            corollary("COR5.5c", false),
            corollary("COR5.5d", true),
            corollary("COR6.3f", false)};
}

std::string quarantine_breach() {
    const auto& quarantine = quarantine_registry();
    auto quarantined = [&](const std::string& id) {
        return std::any_of(quarantine.begin(), quarantine.end(), [&](const auto& q) { return q.id == id; });
    };
    for (const auto& b : bound_registry())
        if (quarantined(b.id)) return b.id + " is a registry entry";
    for (unsigned mask = 0; mask < 128; ++mask) {
        ClassFlags f;
        f.connected = mask & 1;
        f.planar = mask & 2;
        f.outerplanar = mask & 4;
        f.bipartite = mask & 8;
        f.maximal_planar = mask & 16;
        f.quadrangulation = mask & 32;
        f.maximal_outerplanar = mask & 64;
        for (int kappa = 0; kappa <= 6; ++kappa)
            for (const auto& id : applicable_bounds(close_flags(f), kappa))
                if (quarantined(id)) return id + " returned by applicable_bounds";
    }
    const Graph samples[] = {
        generate(FamilySpec{FamilyName::MOP, 8, std::nullopt, std::nullopt}).graph,
        octahedron(),
        icosahedron(),
    };
    for (const Graph& g : samples) {
        const BoundReport rep = check_bounds(g);
        for (const auto& c : rep.applicable)
            if (quarantined(c.id)) return c.id + " carries a verdict in a bound report";
        if (rep.quarantine.empty()) return "quarantined entries not evaluated on " + rep.canonical;
    }
    return {};
}

}  // namespace planardist
