// canonical.hpp - canonical labeling by individualization and refinement.
#pragma once

#include <string>
#include <vector>

#include "planardist/graph.hpp"

namespace planardist {

struct CanonicalForm {
    std::string code;           // graph6 of the canonically relabeled graph
    std::vector<int> labeling;  // labeling[v] = canonical position of v
};

// Lexicographically least graph6 string over the leaves of the search tree.
// Equal for two graphs exactly when they are isomorphic.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_code(const Graph& g);

// Least graph6 over all n! relabelings. Only for small n (test oracle).
std::string brute_force_code(const Graph& g);

}  // namespace planardist
