// classify.hpp - planar class predicates.
#pragma once

#include "planardist/graph.hpp"

namespace planardist {

struct ClassFlags {
    bool connected = false;
    bool planar = false;
    bool outerplanar = false;
    bool bipartite = false;
    bool maximal_planar = false;
    bool quadrangulation = false;
    bool maximal_outerplanar = false;
};

// Edge-count characterizations. For n <= kLiteralCheckOrder the maximality
// flags are also re-derived by adding every non-edge, and a disagreement
// throws std::logic_error.
ClassFlags classify(const Graph& g);

inline constexpr int kLiteralCheckOrder = 9;

// Literal definitions: no non-edge can be added while keeping the property.
bool literally_maximal_planar(const Graph& g);
bool literally_maximal_outerplanar(const Graph& g);
// Planar, bipartite, no edge can be added keeping both, and 2-connected
// (stars K_{1,r} are maximal in the literal sense but have cut vertices).
bool literally_quadrangulation(const Graph& g);

}  // namespace planardist
