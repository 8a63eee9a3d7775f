// graph.hpp - immutable simple undirected graph with sorted adjacency lists.
#pragma once

#include <span>
#include <utility>
#include <vector>

namespace planardist {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
public:
    Graph() = default;

    // Normalizes the edge list: each pair is stored once, neighbor lists are
    // sorted. Repeated pairs are collapsed and flagged. Throws
    // std::invalid_argument for loops or out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    static Graph complete(int n);
    static Graph empty(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool collapsed_duplicates() const noexcept { return collapsed_duplicates_; }

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;
    // Vertices are renumbered in increasing order of their old index.
    Graph without_vertices(std::span<const Vertex> removed) const;
    // new_label[v] is the image of v; must be a permutation of 0..n-1.
    Graph relabeled(std::span<const int> new_label) const;
    // Appends one vertex adjacent to every existing vertex.
    Graph with_apex() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
    bool collapsed_duplicates_ = false;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
int min_degree(const Graph& g);

}  // namespace planardist
