// bounds.hpp - registry of exact bound formulas and the verdict engine.
//
// Ids such as THM4.1 or COR5.5a are stable external identifiers. Entries whose
// printed constant disagrees with the theorem they specialize live in a
// separate quarantine list; they are evaluated and reported but never decide
// a verdict.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planardist/classify.hpp"
#include "planardist/distance.hpp"
#include "planardist/graph.hpp"
#include "planardist/rational.hpp"

namespace planardist {

enum class Quantity {
    pi_max,
    rho_max,
    rad_minus_pi_max,
    rho_minus_pi_max,
    diam_minus_pi_max,
    pi_min_given_d,
    diam_max,
    rad_max,
};

std::string to_string(Quantity q);
bool is_lower_bound(Quantity q);

struct ClassGuard {
    bool planar = false;
    bool outerplanar = false;
    bool bipartite = false;
    bool maximal_planar = false;
    bool quadrangulation = false;
    bool maximal_outerplanar = false;
    int min_kappa = 0;

    bool admits(const ClassFlags& closed_flags, int kappa) const;
    std::string describe() const;
};

struct BoundArgs {
    std::int64_t n = 0;
    std::int64_t kappa = 0;
    std::int64_t d = 0;
};

using BoundFormula = Rational (*)(const BoundArgs&);
// Returns an empty string when (n, kappa, d) lies in the formula's domain.
using BoundDomain = std::string (*)(const BoundArgs&);

struct BoundSpec {
    std::string id;
    Quantity quantity = Quantity::pi_max;
    ClassGuard guard;
    int min_n = 2;
    bool uses_kappa = false;
    bool uses_d = false;
    std::string formula;  // readable form
    BoundFormula eval = nullptr;
    BoundDomain domain = nullptr;
};

struct QuarantineSpec {
    std::string id;
    Quantity quantity = Quantity::rho_minus_pi_max;
    ClassGuard guard;
    int min_n = 4;
    std::string printed_formula;
    std::string derived_formula;
    std::string derived_from;  // e.g. "THM5.1 at kappa=4"
    BoundFormula printed = nullptr;
    BoundFormula derived = nullptr;
};

const std::vector<BoundSpec>& bound_registry();
const std::vector<QuarantineSpec>& quarantine_registry();

// nullptr when the id is unknown or quarantined.
const BoundSpec* find_bound(const std::string& id);
const QuarantineSpec* find_quarantined(const std::string& id);

// Throws std::invalid_argument for unknown ids, missing kappa/d, or
// parameters outside the bound's domain (the message names the guard).
Rational bound_value(const std::string& id, int n, std::optional<int> kappa = std::nullopt,
                     std::optional<int> d = std::nullopt);

// The lower bound on proximity for order n, connectivity kappa and diameter d.
Rational diameter_pi_lower_bound(int n, int kappa, int d);

// Adds implied flags (maximal planar => planar, and so on).
ClassFlags close_flags(ClassFlags f);

// Ids of registry entries whose class guard holds; numeric domains are
// checked later by check_bounds.
std::vector<std::string> applicable_bounds(const ClassFlags& flags, int kappa);

enum class Verdict { equality, slack, violation };
std::string to_string(Verdict v);

// Upper bounds: slack = bound - computed. Lower bounds: computed - bound.
Rational slack_of(Quantity q, const Rational& bound, const Rational& computed);
Verdict judge(Quantity q, const Rational& bound, const Rational& computed);
Rational computed_value(Quantity q, const ParamSummary& p);

struct BoundCheck {
    std::string id;
    Quantity quantity = Quantity::pi_max;
    Rational bound;
    Rational computed;
    Verdict verdict = Verdict::slack;
    Rational slack;
};

struct SkippedBound {
    std::string id;
    std::string reason;
};

struct QuarantineCheck {
    std::string id;
    std::string derived_from;
    Quantity quantity = Quantity::rho_minus_pi_max;
    Rational printed_bound;
    Rational derived_bound;
    Rational computed;
    Verdict printed_verdict = Verdict::slack;
    Verdict derived_verdict = Verdict::slack;
};

struct BoundReport {
    std::string graph6;     // the graph as given
    std::string canonical;  // canonical graph6, the graph id
    int n = 0;
    int m = 0;
    int kappa = 0;
    ClassFlags flags;
    ParamSummary params;
    std::vector<BoundCheck> applicable;
    std::vector<SkippedBound> skipped;
    std::vector<QuarantineCheck> quarantine;
    std::vector<std::string> discrepancy_notes;

    bool has_violation() const;
    const BoundCheck* find(const std::string& id) const;
};

// Requires a connected graph with n >= 2 (std::invalid_argument otherwise).
BoundReport check_bounds(const Graph& g);
// Reuses already computed flags and connectivity.
BoundReport check_bounds(const Graph& g, const ClassFlags& flags, int kappa);

}  // namespace planardist
