// sweep.hpp - run every catalog member (or a seeded random sample) through
// check_bounds and the class's lemma checks, aggregated per order.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planardist/enumerate.hpp"
#include "planardist/lemmas.hpp"
#include "planardist/rational.hpp"

namespace planardist {

struct SweepOptions {
    std::uint64_t seed = 1;
    std::size_t random_count = 10000;  // random_connected only
    // Recount catalogs with the independent method up to this order (capped
    // by independent_limit).
    int recount_max = 8;
    bool check_lemmas = true;
    // Checkpoint file; loaded when present and rewritten as the sweep advances.
    std::string checkpoint;
    // Stop once this many work units (checked graphs or flip-closure
    // expansions) were done in this call; nullopt runs to completion. Catalog
    // levels are committed whole, so a stop inside a level redoes its checks.
    std::optional<std::size_t> stop_after;
};

// Largest value of a difference such as rad - pi, with the least canonical
// code attaining it.
struct Extreme {
    bool set = false;
    Rational value;
    std::string certificate;
    std::size_t attained_by = 0;
};

struct BoundAggregate {
    std::string id;
    std::size_t checked = 0;
    std::size_t equalities = 0;
    std::size_t violations = 0;
    Rational min_slack;
    std::string min_slack_certificate;
    std::string equality_witness;              // least code with equality
    std::vector<std::string> violation_witnesses;  // all of them, sorted
};

struct LemmaAggregate {
    LemmaId lemma = LemmaId::L3_1a;
    std::size_t graphs = 0;
    std::size_t checks = 0;  // (root, level) pairs
    std::size_t failures = 0;
    std::vector<std::string> failure_witnesses;
};

struct LevelReport {
    int n = 0;
    std::size_t count = 0;
    std::optional<std::size_t> recount;  // independent method, when run
    bool recount_codes_match = true;     // same canonical codes, not only the count
    std::map<int, std::size_t> kappa_histogram;
    Extreme rad_minus_pi;
    Extreme rho_minus_pi;
    Extreme diam_minus_pi;
    std::vector<BoundAggregate> bounds;       // sorted by id
    std::vector<BoundAggregate> quarantined;  // derived-variant verdicts, never gating
    std::vector<LemmaAggregate> lemmas;

    std::size_t violations() const;
    std::size_t lemma_failures() const;
    bool recount_agrees() const { return !recount || (*recount == count && recount_codes_match); }
};

struct SweepReport {
    GraphClass cls = GraphClass::maximal_outerplanar;
    int n_max = 0;
    std::uint64_t seed = 0;          // random_connected only
    std::size_t random_count = 0;    // random_connected only
    std::vector<LevelReport> levels;  // increasing n
    bool complete = false;           // false when stopped early
    double seconds = 0;              // wall time of this call, not serialized by default

    std::size_t violations() const;
    std::size_t lemma_failures() const;
    bool recounts_agree() const;
    const LevelReport* level(int n) const;
};

// Lemmas checked on every member of the class (κ-dependent parts only on
// members with enough connectivity).
std::vector<LemmaId> class_lemmas(GraphClass c, int kappa);

// Throws std::invalid_argument when n_max lies outside the class's range or a
// checkpoint belongs to a different sweep.
SweepReport sweep(GraphClass cls, int n_max, const SweepOptions& opts = {});

}  // namespace planardist
