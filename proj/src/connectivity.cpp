#include "planardist/connectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace planardist {

namespace {

// Residual network for the vertex-split digraph: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, Vertex s, Vertex t) : head_(2 * g.order(), -1) {
        const int big = g.order() + 1;
        for (Vertex v = 0; v < g.order(); ++v)
            add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
        for (const auto& [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, big);
            add_arc(2 * v + 1, 2 * u, big);
        }
        source_ = 2 * s + 1;
        sink_ = 2 * t;
    }

    // Edmonds-Karp; every augmenting path carries one unit.
    int max_flow(int limit) {
        int flow = 0;
        std::vector<int> via(head_.size());
        std::vector<int> queue;
        while (limit < 0 || flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            queue.assign(1, source_);
            via[source_] = -2;
            for (std::size_t h = 0; h < queue.size() && via[sink_] == -1; ++h) {
                int x = queue[h];
                for (int a = head_[x]; a >= 0; a = next_[a]) {
                    if (cap_[a] > 0 && via[to_[a]] == -1) {
                        via[to_[a]] = a;
                        queue.push_back(to_[a]);
                    }
                }
            }
            if (via[sink_] == -1) break;
            for (int x = sink_; x != source_;) {
                int a = via[x];
                --cap_[a];
                ++cap_[a ^ 1];
                x = to_[a ^ 1];
            }
            ++flow;
        }
        return flow;
    }

private:
    void add_arc(int from, int to, int cap) {
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = static_cast<int>(to_.size()) - 1;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = static_cast<int>(to_.size()) - 1;
    }

    std::vector<int> head_, to_, cap_, next_;
    int source_ = 0, sink_ = 0;
};

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

// Advances `idx` to the next k-subset of 0..n-1 in lexicographic order.
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

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
    if (s == t || g.adjacent(s, t))
        throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
    return SplitNetwork(g, s, t).max_flow(limit);
}

int connectivity_number(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    if (is_complete(g)) return n - 1;
    int best = min_degree(g);
    // A minimum separator misses one of the first best+1 vertices; that vertex
    // pairs with some non-adjacent vertex on the far side.
    for (Vertex i = 0; i < n && i <= best; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            best = std::min(best, local_vertex_connectivity(g, i, j, best));
        }
    }
    return best;
}

ConnectivityResult vertex_connectivity(const Graph& g) {
    ConnectivityResult r;
    r.method = ConnectivityMethod::flow;
    if (g.order() <= 1) return r;
    if (!is_connected(g)) {
        r.witness_cut = std::vector<Vertex>{};
        return r;
    }
    r.kappa = connectivity_number(g);
    if (is_complete(g)) return r;

    // Greedy lexicographic choice: the next vertex is the smallest one lying in
    // some minimum separator that extends the current prefix.
    std::vector<Vertex> cut;
    Graph rest = g;
    std::vector<Vertex> original(g.order());
    for (Vertex v = 0; v < g.order(); ++v) original[v] = v;
    for (int need = r.kappa; need > 0; --need) {
        bool chosen = false;
        const Vertex floor_v = cut.empty() ? -1 : cut.back();
        for (Vertex local = 0; local < rest.order() && !chosen; ++local) {
            if (original[local] <= floor_v) continue;
            const Vertex drop[] = {local};
            Graph reduced = rest.without_vertices(drop);
            bool ok = need == 1 ? !is_connected(reduced)
                                : (!is_complete(reduced) && connectivity_number(reduced) == need - 1);
            if (!ok) continue;
            cut.push_back(original[local]);
            original.erase(original.begin() + local);
            rest = std::move(reduced);
            chosen = true;
        }
        if (!chosen) throw std::logic_error("vertex_connectivity: witness extraction failed");
    }
    r.witness_cut = std::move(cut);
    return r;
}

ConnectivityResult vertex_connectivity_brute(const Graph& g) {
    ConnectivityResult r;
    r.method = ConnectivityMethod::brute;
    const int n = g.order();
    if (n <= 1) return r;
    if (!is_connected(g)) {
        r.witness_cut = std::vector<Vertex>{};
        return r;
    }
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        do {
            if (separates(g, idx)) {
                r.kappa = k;
                r.witness_cut = std::vector<Vertex>(idx.begin(), idx.end());
                return r;
            }
        } while (next_combination(idx, n));
    }
    r.kappa = n - 1;
    return r;
}

bool is_k_connected(const Graph& g, int k) {
    if (k >= g.order())
        throw std::invalid_argument("k-connectivity undefined for k=" + std::to_string(k) +
                                    " >= n=" + std::to_string(g.order()));
    return connectivity_number(g) >= k;
}

bool separates(const Graph& g, std::span<const Vertex> cut) {
    if (static_cast<int>(cut.size()) >= g.order() - 1) return false;
    return !is_connected(g.without_vertices(cut));
}

}  // namespace planardist
