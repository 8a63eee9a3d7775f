#include "planardist/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace planardist {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("vertex index out of range in edge " + pair_text(u, v) +
                                        " for n=" + std::to_string(n));
        }
        if (u == v) throw std::invalid_argument("loop edge " + pair_text(u, v));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        auto last = std::unique(nb.begin(), nb.end());
        if (last != nb.end()) g.collapsed_duplicates_ = true;
        nb.erase(last, nb.end());
        total += nb.size();
    }
    g.m_ = static_cast<int>(total / 2);
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_edges(n, e);
}

Graph Graph::empty(int n) { return from_edges(n, std::span<const Edge>{}); }

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return from_edges(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return from_edges(n, e);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    auto e = edges();
    e.emplace_back(u, v);
    return from_edges(order(), e);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    auto e = edges();
    if (u > v) std::swap(u, v);
    std::erase(e, Edge{u, v});
    return from_edges(order(), e);
}

Graph Graph::without_vertices(std::span<const Vertex> removed) const {
    std::vector<int> index(order(), 0);
    for (Vertex r : removed) index.at(r) = -1;
    int next = 0;
    for (auto& x : index)
        if (x == 0) x = next++;
        else x = -1;
    std::vector<Edge> e;
    for (const auto& [u, v] : edges())
        if (index[u] >= 0 && index[v] >= 0) e.emplace_back(index[u], index[v]);
    return from_edges(next, e);
}

Graph Graph::relabeled(std::span<const int> new_label) const {
    if (static_cast<int>(new_label.size()) != order())
        throw std::invalid_argument("relabeling has wrong length");
    std::vector<Edge> e;
    e.reserve(m_);
    for (const auto& [u, v] : edges()) e.emplace_back(new_label[u], new_label[v]);
    return from_edges(order(), e);
}

Graph Graph::with_apex() const {
    auto e = edges();
    const int apex = order();
    for (Vertex v = 0; v < apex; ++v) e.emplace_back(v, apex);
    return from_edges(apex + 1, e);
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int min_degree(const Graph& g) {
    int best = g.order() == 0 ? 0 : g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

}  // namespace planardist
