// enumerate.hpp - complete isomorphism-free catalogs of small graphs in the
// planar classes, each with an independent second method for recounting.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planardist/graph.hpp"

namespace planardist {

enum class GraphClass { maximal_outerplanar, maximal_planar, quadrangulation, random_connected };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& text);

struct OrderRange {
    int lo = 0;
    int hi = 0;
};
OrderRange enumeration_range(GraphClass c);

// Catalogs are sorted by canonical code; each graph is in canonical labeling.
// Orders outside enumeration_range throw std::invalid_argument.
std::vector<Graph> enumerate_maximal_outerplanar(int n);
std::vector<Graph> enumerate_triangulations(int n);
std::vector<Graph> enumerate_quadrangulations(int n);
std::vector<Graph> enumerate_class(GraphClass c, int n);

// Diagonal-flip closure from the stacked triangulation, resumable.
struct FlipClosure {
    int n = 0;
    std::vector<std::string> frontier;  // canonical codes still to expand
    std::set<std::string> seen;

    bool done() const { return frontier.empty(); }
};
FlipClosure flip_closure_start(int n);
// Expands up to `budget` frontier graphs (oldest first); returns how many.
std::size_t flip_closure_step(FlipClosure& state, std::size_t budget);

// Second methods; return sorted canonical codes.
// All graphs with 3n-6 edges filtered for planarity (n <= 7).
std::vector<std::string> triangulations_by_filter(int n);
// Ear additions on the outer cycle, starting from a triangle.
std::vector<std::string> maximal_outerplanar_by_ears(int n);
// Every bipartite graph tested for literal maximality (n <= 9).
std::vector<std::string> quadrangulations_by_maximality(int n);

// Largest n the second method supports for the class, or nullopt.
std::optional<int> independent_limit(GraphClass c);
std::vector<std::string> independent_catalog(GraphClass c, int n);

// Uniform integer in [0, bound) by rejection sampling, so draws do not depend
// on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// n uniform in [2, n_max], m uniform in [n-1, n(n-1)/2], edge set a uniform
// m-subset of the pairs, redrawn until connected.
Graph random_connected_graph(std::mt19937_64& rng, int n_max);

}  // namespace planardist
