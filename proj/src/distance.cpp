#include "planardist/distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace planardist {

namespace {

void require_vertex(const Graph& g, Vertex v) {
    if (!g.valid_vertex(v))
        throw std::invalid_argument("invalid vertex " + std::to_string(v) + " for n=" +
                                    std::to_string(g.order()));
}

std::vector<int> connected_distances(const Graph& g, Vertex v) {
    require_vertex(g, v);
    auto d = bfs_distances(g, v);
    if (std::find(d.begin(), d.end(), kUnreachable) != d.end())
        throw std::invalid_argument("graph is disconnected");
    return d;
}

}  // namespace

std::vector<int> LevelStructure::counts() const {
    std::vector<int> c;
    c.reserve(levels.size());
    for (const auto& l : levels) c.push_back(static_cast<int>(l.size()));
    return c;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> d(g.order(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    d[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.neighbors(v))
            if (d[w] == kUnreachable) {
                d[w] = d[v] + 1;
                queue.push_back(w);
            }
    }
    return d;
}

DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix m;
    m.n = g.order();
    m.dist.resize(static_cast<std::size_t>(m.n) * m.n);
    for (Vertex v = 0; v < m.n; ++v) {
        auto row = bfs_distances(g, v);
        if (std::find(row.begin(), row.end(), kUnreachable) != row.end()) m.connected = false;
        std::copy(row.begin(), row.end(), m.dist.begin() + static_cast<std::ptrdiff_t>(v) * m.n);
    }
    return m;
}

ParamSummary param_summary(const Graph& g) { return param_summary(g, distance_matrix(g)); }

ParamSummary param_summary(const Graph& g, const DistanceMatrix& d) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("param_summary needs n >= 2 (got n=" + std::to_string(n) + ")");
    if (!d.connected) throw std::invalid_argument("param_summary needs a connected graph");

    ParamSummary s;
    s.n = n;
    s.status.resize(n);
    s.ecc.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto row = d.row(v);
        std::int64_t total = 0;
        int far = 0;
        for (int x : row) {
            total += x;
            far = std::max(far, x);
        }
        s.status[v] = total;
        s.ecc[v] = far;
    }
    auto [lo, hi] = std::minmax_element(s.status.begin(), s.status.end());
    s.proximity = Rational(*lo, n - 1);
    s.remoteness = Rational(*hi, n - 1);
    s.radius = *std::min_element(s.ecc.begin(), s.ecc.end());
    s.diameter = *std::max_element(s.ecc.begin(), s.ecc.end());
    for (Vertex v = 0; v < n; ++v) {
        if (s.status[v] == *lo) s.median_vertices.push_back(v);
        if (s.status[v] == *hi) s.remote_vertices.push_back(v);
    }
    return s;
}

std::int64_t status(const Graph& g, Vertex v) {
    auto d = connected_distances(g, v);
    std::int64_t total = 0;
    for (int x : d) total += x;
    return total;
}

std::int64_t status_restricted(const Graph& g, Vertex v, std::span<const Vertex> subset) {
    for (Vertex x : subset) require_vertex(g, x);
    auto d = connected_distances(g, v);
    std::int64_t total = 0;
    for (Vertex x : subset) total += d[x];
    return total;
}

LevelStructure level_sets(const Graph& g, Vertex v) {
    auto d = connected_distances(g, v);
    LevelStructure ls;
    ls.root = v;
    int ecc = *std::max_element(d.begin(), d.end());
    ls.levels.assign(ecc + 1, {});
    for (Vertex w = 0; w < g.order(); ++w) ls.levels[d[w]].push_back(w);
    return ls;
}

}  // namespace planardist
