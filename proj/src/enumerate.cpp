#include "planardist/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "planardist/canonical.hpp"
#include "planardist/embedding.hpp"
#include "planardist/graph6.hpp"
#include "planardist/planarity.hpp"

namespace planardist {

namespace {

void require_range(GraphClass c, int n) {
    const OrderRange r = enumeration_range(c);
    if (n < r.lo || n > r.hi)
        throw std::invalid_argument(to_string(c) + " enumeration supports " + std::to_string(r.lo) +
                                    " <= n <= " + std::to_string(r.hi) + ", got n=" + std::to_string(n));
}

std::vector<Graph> decode(const std::set<std::string>& codes) {
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(from_graph6(c));
    return out;
}

std::vector<std::string> sorted(const std::set<std::string>& codes) { return {codes.begin(), codes.end()}; }

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Graph stacked_triangulation(int n) {
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int k = 3; k < n; ++k) {
        edges.emplace_back(0, k);
        edges.emplace_back(1, k);
        edges.emplace_back(k - 1, k);
    }
    return Graph::from_edges(n, edges);
}

// Emits the diagonal set of every triangulation of the convex polygon 0..n-1.
template <typename Emit>
void polygon_triangulations(std::vector<std::pair<int, int>>& pending, std::vector<Edge>& diagonals, Emit& emit) {
    if (pending.empty()) {
        emit(diagonals);
        return;
    }
    const auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) {
        polygon_triangulations(pending, diagonals, emit);
    } else {
        for (int k = i + 1; k < j; ++k) {
            const std::size_t mark = diagonals.size();
            if (k > i + 1) diagonals.emplace_back(i, k);
            if (j > k + 1) diagonals.emplace_back(k, j);
            pending.emplace_back(i, k);
            pending.emplace_back(k, j);
            polygon_triangulations(pending, diagonals, emit);
            pending.pop_back();
            pending.pop_back();
            diagonals.resize(mark);
        }
    }
    pending.emplace_back(i, j);
}

bool all_faces_quadrilateral(const Graph& g) {
    auto rot = lr_planar_embedding(g);
    if (!rot) return false;
    for (const auto& f : trace_faces(*rot))
        if (f.size() != 4) return false;
    return true;
}

}  // namespace

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::maximal_outerplanar: return "maximal_outerplanar";
        case GraphClass::maximal_planar: return "maximal_planar";
        case GraphClass::quadrangulation: return "quadrangulation";
        case GraphClass::random_connected: return "random_connected";
    }
    return "?";
}

GraphClass parse_graph_class(const std::string& text) {
    for (GraphClass c : {GraphClass::maximal_outerplanar, GraphClass::maximal_planar, GraphClass::quadrangulation,
                         GraphClass::random_connected})
        if (to_string(c) == text) return c;
    throw std::invalid_argument("unknown class '" + text +
                                "' (expected maximal_outerplanar, maximal_planar, quadrangulation, random_connected)");
}

OrderRange enumeration_range(GraphClass c) {
    switch (c) {
        case GraphClass::maximal_outerplanar: return {3, 14};
        case GraphClass::maximal_planar: return {4, 10};
        case GraphClass::quadrangulation: return {4, 9};
        case GraphClass::random_connected: return {2, 64};
    }
    return {};
}

std::vector<Graph> enumerate_maximal_outerplanar(int n) {
    require_range(GraphClass::maximal_outerplanar, n);
    std::set<std::string> codes;
    std::vector<Edge> boundary;
    for (int i = 0; i < n; ++i) boundary.emplace_back(i, (i + 1) % n);
    std::vector<std::pair<int, int>> pending{{0, n - 1}};
    std::vector<Edge> diagonals;
    auto emit = [&](const std::vector<Edge>& diags) {
        std::vector<Edge> edges = boundary;
        edges.insert(edges.end(), diags.begin(), diags.end());
        codes.insert(canonical_code(Graph::from_edges(n, edges)));
    };
    polygon_triangulations(pending, diagonals, emit);
    return decode(codes);
}

FlipClosure flip_closure_start(int n) {
    require_range(GraphClass::maximal_planar, n);
    FlipClosure s;
    s.n = n;
    const std::string start = canonical_code(stacked_triangulation(n));
    s.seen.insert(start);
    s.frontier.push_back(start);
    return s;
}

std::size_t flip_closure_step(FlipClosure& s, std::size_t budget) {
    std::size_t used = 0;
    std::size_t head = 0;
    for (; head < s.frontier.size() && used < budget; ++head, ++used) {
        const Graph g = from_graph6(s.frontier[head]);
        auto rot = lr_planar_embedding(g);
        if (!rot) throw std::logic_error("flip closure reached a non-planar graph");
        for (Vertex u = 0; u < g.order(); ++u) {
            const auto& r = (*rot)[u];
            const int d = static_cast<int>(r.size());
            for (int p = 0; p < d; ++p) {
                const Vertex v = r[p];
                if (v < u) continue;
                // The two triangles on uv have apexes next to v around u.
                const Vertex x = r[(p + 1) % d];
                const Vertex y = r[(p + d - 1) % d];
                if (x == y || g.adjacent(x, y)) continue;
                const std::string code = canonical_code(g.without_edge(u, v).with_edge(x, y));
                if (s.seen.insert(code).second) s.frontier.push_back(code);
            }
        }
    }
    s.frontier.erase(s.frontier.begin(), s.frontier.begin() + static_cast<std::ptrdiff_t>(head));
    return head;
}

std::vector<Graph> enumerate_triangulations(int n) {
    FlipClosure s = flip_closure_start(n);
    while (!s.done()) flip_closure_step(s, 64);
    return decode(s.seen);
}

std::vector<Graph> enumerate_quadrangulations(int n) {
    require_range(GraphClass::quadrangulation, n);
    const int m = 2 * n - 4;
    std::set<std::string> codes;
    for (int p = 2; p <= n / 2; ++p) {
        const int qsize = n - p;
        std::vector<Edge> pairs;
        for (int i = 0; i < p; ++i)
            for (int j = p; j < n; ++j) pairs.emplace_back(i, j);
        const int total = static_cast<int>(pairs.size());
        if (total < m) continue;
        (void)qsize;
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<int> degree(n);
        do {
            std::fill(degree.begin(), degree.end(), 0);
            for (int e : idx) {
                ++degree[pairs[e].first];
                ++degree[pairs[e].second];
            }
            if (*std::min_element(degree.begin(), degree.end()) < 2) continue;
            std::vector<Edge> edges;
            for (int e : idx) edges.push_back(pairs[e]);
            const Graph g = Graph::from_edges(n, edges);
            if (!is_connected(g) || !all_faces_quadrilateral(g)) continue;
            codes.insert(canonical_code(g));
        } while (next_combination(idx, total));
    }
    return decode(codes);
}

std::vector<Graph> enumerate_class(GraphClass c, int n) {
    switch (c) {
        case GraphClass::maximal_outerplanar: return enumerate_maximal_outerplanar(n);
        case GraphClass::maximal_planar: return enumerate_triangulations(n);
        case GraphClass::quadrangulation: return enumerate_quadrangulations(n);
        case GraphClass::random_connected: break;
    }
    throw std::invalid_argument("random_connected has no catalog");
}

std::vector<std::string> triangulations_by_filter(int n) {
    if (n < 4 || n > 7) throw std::invalid_argument("triangulations_by_filter supports 4 <= n <= 7");
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int total = static_cast<int>(pairs.size());
    std::vector<int> idx(3 * n - 6);
    std::iota(idx.begin(), idx.end(), 0);
    std::set<std::string> codes;
    do {
        std::vector<Edge> edges;
        for (int e : idx) edges.push_back(pairs[e]);
        const Graph g = Graph::from_edges(n, edges);
        if (is_planar(g)) codes.insert(canonical_code(g));
    } while (next_combination(idx, total));
    return sorted(codes);
}

std::vector<std::string> maximal_outerplanar_by_ears(int n) {
    if (n < 3 || n > 14) throw std::invalid_argument("maximal_outerplanar_by_ears supports 3 <= n <= 14");
    struct Rep {
        Graph g;
        std::vector<Vertex> cycle;
    };
    std::map<std::string, Rep> level;
    const Graph k3 = Graph::complete(3);
    level.emplace(canonical_code(k3), Rep{k3, {0, 1, 2}});
    for (int size = 3; size < n; ++size) {
        std::map<std::string, Rep> next;
        for (const auto& [code, rep] : level) {
            for (int i = 0; i < size; ++i) {
                const Vertex a = rep.cycle[i];
                const Vertex b = rep.cycle[(i + 1) % size];
                std::vector<Edge> edges = rep.g.edges();
                edges.emplace_back(a, size);
                edges.emplace_back(b, size);
                Graph h = Graph::from_edges(size + 1, edges);
                std::vector<Vertex> cycle = rep.cycle;
                cycle.insert(cycle.begin() + i + 1, size);
                std::string key = canonical_code(h);
                next.emplace(std::move(key), Rep{std::move(h), std::move(cycle)});
            }
        }
        level = std::move(next);
    }
    std::vector<std::string> out;
    for (const auto& [code, rep] : level) out.push_back(code);
    return out;
}

std::vector<std::string> quadrangulations_by_maximality(int n) {
    if (n < 4 || n > 9) throw std::invalid_argument("quadrangulations_by_maximality supports 4 <= n <= 9");
    std::set<std::string> codes;
    for (int p = 2; p <= n / 2; ++p) {
        std::vector<Edge> pairs;
        for (int i = 0; i < p; ++i)
            for (int j = p; j < n; ++j) pairs.emplace_back(i, j);
        const int total = static_cast<int>(pairs.size());
        std::vector<int> degree(n);
        for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
            std::fill(degree.begin(), degree.end(), 0);
            for (int e = 0; e < total; ++e)
                if (mask >> e & 1u) {
                    ++degree[pairs[e].first];
                    ++degree[pairs[e].second];
                }
            if (*std::min_element(degree.begin(), degree.end()) < 2) continue;
            std::vector<Edge> edges;
            for (int e = 0; e < total; ++e)
                if (mask >> e & 1u) edges.push_back(pairs[e]);
            const Graph g = Graph::from_edges(n, edges);
            if (!is_connected(g) || !is_planar(g)) continue;
            // Connected, so any same-side edge breaks bipartiteness; only
            // cross edges can be added.
            bool maximal = true;
            for (int e = 0; e < total && maximal; ++e)
                if (!(mask >> e & 1u) && is_planar(g.with_edge(pairs[e].first, pairs[e].second))) maximal = false;
            if (!maximal) continue;
            // Literal maximality admits stars; quadrangulations are 2-connected.
            bool two_connected = true;
            for (Vertex v = 0; v < n && two_connected; ++v) {
                const Vertex drop[] = {v};
                two_connected = is_connected(g.without_vertices(drop));
            }
            if (two_connected) codes.insert(canonical_code(g));
        }
    }
    return sorted(codes);
}

std::optional<int> independent_limit(GraphClass c) {
    switch (c) {
        case GraphClass::maximal_outerplanar: return 14;
        case GraphClass::maximal_planar: return 7;
        case GraphClass::quadrangulation: return 8;
        case GraphClass::random_connected: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> independent_catalog(GraphClass c, int n) {
    switch (c) {
        case GraphClass::maximal_outerplanar: return maximal_outerplanar_by_ears(n);
        case GraphClass::maximal_planar: return triangulations_by_filter(n);
        case GraphClass::quadrangulation: return quadrangulations_by_maximality(n);
        case GraphClass::random_connected: break;
    }
    throw std::invalid_argument("random_connected has no independent catalog");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

Graph random_connected_graph(std::mt19937_64& rng, int n_max) {
    if (n_max < 2) throw std::invalid_argument("random_connected_graph: n_max must be >= 2");
    const int n = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_max - 1)));
    const int pairs_total = n * (n - 1) / 2;
    const int m = (n - 1) + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(pairs_total - (n - 1) + 1)));
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    while (true) {
        for (int k = 0; k < m; ++k) {
            const int pick = k + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(pairs_total - k)));
            std::swap(pairs[k], pairs[pick]);
        }
        Graph g = Graph::from_edges(n, std::span<const Edge>(pairs.data(), static_cast<std::size_t>(m)));
        if (is_connected(g)) return g;
    }
}

}  // namespace planardist
