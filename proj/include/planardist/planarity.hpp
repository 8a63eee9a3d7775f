// planarity.hpp - left-right planarity test and Kuratowski witnesses.
//
// The test orients the graph by DFS, checks the left/right partition of back
// edges with a stack of conflict pairs, and (when requested) builds a
// rotation system from the resolved sides and nesting depths.
#pragma once

#include <optional>
#include <vector>

#include "planardist/graph.hpp"

namespace planardist {

// rotation[v] lists v's neighbors in clockwise cyclic order.
using RotationSystem = std::vector<std::vector<Vertex>>;

bool is_planar(const Graph& g);

// A rotation system of a planar embedding, or nullopt if g is not planar.
std::optional<RotationSystem> lr_planar_embedding(const Graph& g);

enum class KuratowskiKind { K5, K33 };

struct KuratowskiWitness {
    KuratowskiKind kind = KuratowskiKind::K5;
    std::vector<Vertex> branch_vertices;    // 5 for K5, 6 for K3,3 (sorted)
    std::vector<std::vector<Vertex>> paths; // branch-to-branch, internal vertices of degree 2
    std::vector<Edge> edges;                // the subdivision's edge set
};

// Throws std::invalid_argument if g is planar.
KuratowskiWitness kuratowski_witness(const Graph& g);

// Structural check that `w` is a K5 / K3,3 subdivision contained in g.
bool verify_kuratowski_witness(const Graph& g, const KuratowskiWitness& w);

}  // namespace planardist
