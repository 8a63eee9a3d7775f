// distance.hpp - hop distances, status, eccentricities, proximity and remoteness.
//
// Status sigma(v) is the sum of distances from v to every vertex. Proximity and
// remoteness are min and max of sigma(v)/(n-1) over all v, kept as exact
// rationals so that sharpness checks can compare for literal equality.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "planardist/graph.hpp"
#include "planardist/rational.hpp"

namespace planardist {

inline constexpr int kUnreachable = -1;

struct DistanceMatrix {
    int n = 0;
    std::vector<int> dist;  // row-major n*n; kUnreachable across components
    bool connected = true;

    int at(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
    std::span<const int> row(Vertex u) const {
        return {dist.data() + static_cast<std::size_t>(u) * n, static_cast<std::size_t>(n)};
    }
};

struct ParamSummary {
    int n = 0;
    std::vector<std::int64_t> status;
    std::vector<int> ecc;
    Rational proximity;
    Rational remoteness;
    int radius = 0;
    int diameter = 0;
    std::vector<Vertex> median_vertices;  // attain proximity
    std::vector<Vertex> remote_vertices;  // attain remoteness
};

struct LevelStructure {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> levels;  // levels[i] = N_i(root), sorted

    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
    std::vector<int> counts() const;
};

// Single-source BFS; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix distance_matrix(const Graph& g);

// Throws std::invalid_argument if g is disconnected or has fewer than 2 vertices.
ParamSummary param_summary(const Graph& g);
ParamSummary param_summary(const Graph& g, const DistanceMatrix& d);

std::int64_t status(const Graph& g, Vertex v);
std::int64_t status_restricted(const Graph& g, Vertex v, std::span<const Vertex> subset);
LevelStructure level_sets(const Graph& g, Vertex v);

}  // namespace planardist
