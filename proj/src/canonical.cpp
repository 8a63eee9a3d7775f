#include "planardist/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "planardist/graph6.hpp"

namespace planardist {

namespace {

using Cells = std::vector<std::vector<int>>;

class Matrix {
public:
    explicit Matrix(const Graph& g) : n_(g.order()), bits_(static_cast<std::size_t>(n_) * n_, 0) {
        for (const auto& [u, v] : g.edges()) {
            bits_[static_cast<std::size_t>(u) * n_ + v] = 1;
            bits_[static_cast<std::size_t>(v) * n_ + u] = 1;
        }
    }
    bool operator()(int u, int v) const { return bits_[static_cast<std::size_t>(u) * n_ + v] != 0; }

private:
    int n_;
    std::vector<char> bits_;
};

// graph6 of the graph whose vertex at position i is at[i].
std::string leaf_code(const Graph& g, const Matrix& adj, const std::vector<int>& at) {
    const int n = g.order();
    std::string out = graph6_size_field(n);
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj(at[i], at[j]) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

// Splits cells by neighbor counts into each splitter cell until the
// partition is equitable. Depends only on the ordered partition, so it
// commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
    const int n = g.order();
    std::vector<int> count(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            std::fill(count.begin(), count.end(), 0);
            for (int w : cells[s])
                for (Vertex x : g.neighbors(w)) ++count[x];
            Cells next;
            next.reserve(cells.size());
            bool split = false;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::sort(cell.begin(), cell.end(),
                          [&](int a, int b) { return count[a] != count[b] ? count[a] < count[b] : a < b; });
                std::size_t start = 0;
                for (std::size_t k = 1; k <= cell.size(); ++k) {
                    if (k == cell.size() || count[cell[k]] != count[cell[start]]) {
                        if (start != 0 || k != cell.size()) split = true;
                        next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                          cell.begin() + static_cast<std::ptrdiff_t>(k));
                        start = k;
                    }
                }
            }
            cells = std::move(next);
            if (split) changed = true;
        }
    }
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), adj_(g) {}

    void run() {
        Cells cells;
        if (g_.order() > 0) {
            cells.emplace_back(g_.order());
            std::iota(cells[0].begin(), cells[0].end(), 0);
        }
        std::vector<int> prefix;
        dfs(std::move(cells), prefix);
    }

    const std::string& best() const { return best_; }
    const std::vector<int>& best_at() const { return best_at_; }

private:
    bool twins(int u, int w) const {
        const int n = g_.order();
        for (int x = 0; x < n; ++x) {
            if (x == u || x == w) continue;
            if (adj_(u, x) != adj_(w, x)) return false;
        }
        return true;
    }

    // Orbits of the group generated by known automorphisms fixing `prefix`.
    std::vector<int> orbits(const std::vector<int>& prefix) const {
        std::vector<int> parent(g_.order());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < g_.order(); ++v) parent[find(v)] = find(gamma[v]);
        }
        for (int v = 0; v < g_.order(); ++v) parent[v] = find(v);
        return parent;
    }

    void leaf(const Cells& cells) {
        std::vector<int> at(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) at[i] = cells[i][0];
        std::string code = leaf_code(g_, adj_, at);
        if (best_at_.empty() || code < best_) {
            best_ = std::move(code);
            best_at_ = std::move(at);
        } else if (code == best_) {
            std::vector<int> gamma(g_.order());
            for (std::size_t i = 0; i < at.size(); ++i) gamma[at[i]] = best_at_[i];
            autos_.push_back(std::move(gamma));
        }
    }

    void dfs(Cells cells, std::vector<int>& prefix) {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == g_.order()) {
            leaf(cells);
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;

        const std::vector<int> candidates = cells[target];
        std::vector<int> explored;
        for (int w : candidates) {
            bool redundant = false;
            for (int u : explored)
                if (twins(u, w)) redundant = true;
            if (!redundant && !explored.empty()) {
                const auto orb = orbits(prefix);
                for (int u : explored)
                    if (orb[u] == orb[w]) redundant = true;
            }
            if (redundant) continue;
            explored.push_back(w);

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({w});
                std::vector<int> rest;
                for (int x : cells[i])
                    if (x != w) rest.push_back(x);
                child.push_back(std::move(rest));
            }
            prefix.push_back(w);
            dfs(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    Matrix adj_;
    std::string best_;
    std::vector<int> best_at_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm f;
    if (g.order() == 0) {
        f.code = to_graph6(g);
        return f;
    }
    Search s(g);
    s.run();
    f.code = s.best();
    f.labeling.assign(g.order(), 0);
    for (std::size_t i = 0; i < s.best_at().size(); ++i) f.labeling[s.best_at()[i]] = static_cast<int>(i);
    return f;
}

std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

std::string brute_force_code(const Graph& g) {
    const Matrix adj(g);
    std::vector<int> at(g.order());
    std::iota(at.begin(), at.end(), 0);
    std::string best = leaf_code(g, adj, at);
    while (std::next_permutation(at.begin(), at.end())) best = std::min(best, leaf_code(g, adj, at));
    return best;
}

}  // namespace planardist
