// connectivity.hpp - exact vertex connectivity with separating-set witnesses.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planardist/graph.hpp"

namespace planardist {

enum class ConnectivityMethod { flow, brute };

struct ConnectivityResult {
    int kappa = 0;
    // Lexicographically smallest minimum separator; absent for complete graphs.
    std::optional<std::vector<Vertex>> witness_cut;
    ConnectivityMethod method = ConnectivityMethod::flow;
};

// Maximum number of internally vertex-disjoint s-t paths; s, t non-adjacent.
// Stops early once `limit` paths are found.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit = -1);

// kappa only (n-1 for complete graphs, 0 when disconnected).
int connectivity_number(const Graph& g);

ConnectivityResult vertex_connectivity(const Graph& g);

// Subset enumeration in increasing size and lexicographic order. Exponential;
// intended as an oracle for small graphs.
ConnectivityResult vertex_connectivity_brute(const Graph& g);

// Throws std::invalid_argument when k >= n.
bool is_k_connected(const Graph& g, int k);

// True when deleting `cut` leaves a disconnected graph.
bool separates(const Graph& g, std::span<const Vertex> cut);

}  // namespace planardist
