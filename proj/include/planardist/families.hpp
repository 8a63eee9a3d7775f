// families.hpp - the extremal constructions and their stated invariants.
//
// Every family is a sequential sum or a layered variant of one, built with
// labels b_0, a_i, b_i, c_i, ..., b_{k+1} so reports can name the stated
// median and remote vertices.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planardist/graph.hpp"
#include "planardist/rational.hpp"

namespace planardist {

enum class FamilyName { T, Q, MOP, Gnk, GnkBar, DiamExtremal };

std::string to_string(FamilyName f);
FamilyName parse_family_name(const std::string& text);

struct FamilySpec {
    FamilyName name = FamilyName::T;
    int n = 0;
    std::optional<int> kappa;  // Gnk, GnkBar, DiamExtremal
    std::optional<int> d;      // DiamExtremal
};

std::string describe(const FamilySpec& spec);

// Empty string when admissible, otherwise the violated condition.
std::string admissibility_error(const FamilySpec& spec);
bool admissible(const FamilySpec& spec);

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // labels[v]

    // Throws std::out_of_range for unknown labels.
    Vertex vertex(const std::string& label) const;
};

// Disjoint union with a complete join between consecutive parts.
// Throws std::invalid_argument for an empty list.
Graph sequential_sum(std::span<const Graph> parts);
LabeledGraph sequential_sum(std::span<const LabeledGraph> parts);

// Throws std::invalid_argument naming the violated condition.
LabeledGraph generate(const FamilySpec& spec);

enum class Provenance { paper_stated, derived, known_discrepancy };
std::string to_string(Provenance p);

struct ClosedField {
    Rational value;  // the stated value (for known_discrepancy: as printed)
    Provenance provenance = Provenance::paper_stated;
    std::optional<Rational> oracle;  // computed on the generated graph when flagged
    std::string note;
};

struct ClosedForms {
    FamilySpec family;
    std::optional<ClosedField> rad;
    std::optional<ClosedField> diam;
    std::optional<ClosedField> pi;
    std::optional<ClosedField> rho;
    std::string median_label;  // stated median vertex, when named
    std::string remote_label;  // stated remote vertex, when named
};

// Stated values; fields flagged known_discrepancy also carry the value
// computed on the generated graph.
ClosedForms closed_forms(const FamilySpec& spec);

}  // namespace planardist
