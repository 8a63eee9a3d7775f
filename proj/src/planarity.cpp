#include "planardist/planarity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace planardist {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
    Interval left;
    Interval right;
    int id = 0;
    void swap() { std::swap(left, right); }
};

class LeftRight {
public:
    explicit LeftRight(const Graph& g)
        : g_(g), n_(g.order()), m_(g.edge_count()), dart_offset_(n_ + 1, 0) {
        for (Vertex v = 0; v < n_; ++v) dart_offset_[v + 1] = dart_offset_[v] + g.degree(v);
        dart_edge_.assign(dart_offset_[n_], kNone);
        int next = 0;
        for (Vertex v = 0; v < n_; ++v) {
            auto nb = g.neighbors(v);
            for (std::size_t k = 0; k < nb.size(); ++k) {
                Vertex w = nb[k];
                if (v < w) dart_edge_[dart_offset_[v] + static_cast<int>(k)] = next++;
                else dart_edge_[dart_offset_[v] + static_cast<int>(k)] = dart_edge_[dart(w, v)];
            }
        }
        height_.assign(n_, kNone);
        parent_edge_.assign(n_, kNone);
        src_.assign(m_, kNone);
        dst_.assign(m_, kNone);
        oriented_.assign(m_, 0);
        out_.assign(n_, {});
        ordered_.assign(n_, {});
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_depth_.assign(m_, 0);
        ref_.assign(m_, kNone);
        side_.assign(m_, 1);
        lowpt_edge_.assign(m_, kNone);
        stack_bottom_.assign(m_, 0);
    }

    bool test() {
        if (n_ > 2 && m_ > 3 * n_ - 6) return false;
        for (Vertex v = 0; v < n_; ++v) {
            if (height_[v] == kNone) {
                height_[v] = 0;
                roots_.push_back(v);
                orient(v);
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            ordered_[v] = out_[v];
            std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                             [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
        }
        for (Vertex r : roots_)
            if (!check(r)) return false;
        return true;
    }

    // Valid only after test() returned true.
    RotationSystem embed() {
        for (int e = 0; e < m_; ++e) nesting_depth_[e] *= sign(e);
        cw_.assign(dart_offset_[n_], kNone);
        ccw_.assign(dart_offset_[n_], kNone);
        first_.assign(n_, kNone);
        left_ref_.assign(n_, kNone);
        right_ref_.assign(n_, kNone);
        for (Vertex v = 0; v < n_; ++v) {
            ordered_[v] = out_[v];
            std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                             [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
            Vertex previous = kNone;
            for (int ei : ordered_[v]) {
                add_cw(v, dst_[ei], previous);
                previous = dst_[ei];
            }
        }
        for (Vertex r : roots_) place(r);

        RotationSystem rot(n_);
        for (Vertex v = 0; v < n_; ++v) {
            if (first_[v] == kNone) continue;
            Vertex w = first_[v];
            do {
                rot[v].push_back(w);
                w = cw_[dart(v, w)];
            } while (w != first_[v] && static_cast<int>(rot[v].size()) <= g_.degree(v));
            if (static_cast<int>(rot[v].size()) != g_.degree(v))
                throw std::logic_error("left-right embedding produced an incomplete rotation");
        }
        return rot;
    }

private:
    int dart(Vertex v, Vertex w) const {
        auto nb = g_.neighbors(v);
        auto it = std::lower_bound(nb.begin(), nb.end(), w);
        return dart_offset_[v] + static_cast<int>(it - nb.begin());
    }

    void orient(Vertex v) {
        const int e = parent_edge_[v];
        auto nb = g_.neighbors(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const Vertex w = nb[k];
            const int vw = dart_edge_[dart_offset_[v] + static_cast<int>(k)];
            if (oriented_[vw]) continue;
            oriented_[vw] = 1;
            src_[vw] = v;
            dst_[vw] = w;
            out_[v].push_back(vw);
            lowpt_[vw] = height_[v];
            lowpt2_[vw] = height_[v];
            if (height_[w] == kNone) {
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                orient(w);
            } else {
                lowpt_[vw] = height_[w];
            }
            nesting_depth_[vw] = 2 * lowpt_[vw];
            if (lowpt2_[vw] < height_[v]) nesting_depth_[vw] += 1;  // chordal
            if (e != kNone) {
                if (lowpt_[vw] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                    lowpt_[e] = lowpt_[vw];
                } else if (lowpt_[vw] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }
    }

    int top_id() const { return stack_.empty() ? 0 : stack_.back().id; }

    void push(ConflictPair p) {
        if (p.id == 0) p.id = next_pair_id_++;
        stack_.push_back(p);
    }

    ConflictPair pop() {
        ConflictPair p = stack_.back();
        stack_.pop_back();
        return p;
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool check(Vertex v) {
        const int e = parent_edge_[v];
        for (int ei : ordered_[v]) {
            const Vertex w = dst_[ei];
            stack_bottom_[ei] = top_id();
            if (ei == parent_edge_[w]) {
                if (!check(w)) return false;
            } else {
                lowpt_edge_[ei] = ei;
                ConflictPair p;
                p.right = Interval{ei, ei};
                push(p);
            }
            if (lowpt_[ei] < height_[v]) {
                if (ei == ordered_[v].front()) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != kNone) {
            const Vertex u = src_[e];
            trim_back_edges(u);
            if (lowpt_[e] < height_[u]) {
                const int hl = stack_.back().left.high;
                const int hr = stack_.back().right.high;
                ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
            }
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        do {
            ConflictPair Q = pop();
            if (!Q.left.empty()) Q.swap();
            if (!Q.left.empty()) return false;
            if (lowpt_[Q.right.low] > lowpt_[e]) {
                if (P.right.empty()) P.right = Q.right;
                else ref_[P.right.low] = Q.right.high;
                P.right.low = Q.right.low;
            } else {
                ref_[Q.right.low] = lowpt_edge_[e];
            }
        } while (top_id() != stack_bottom_[ei]);

        while (!stack_.empty() &&
               (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair Q = pop();
            if (conflicting(Q.right, ei)) Q.swap();
            if (conflicting(Q.right, ei)) return false;
            if (P.right.low != kNone) ref_[P.right.low] = Q.right.high;
            if (Q.right.low != kNone) P.right.low = Q.right.low;
            if (P.left.empty()) P.left = Q.left;
            else ref_[P.left.low] = Q.left.high;
            P.left.low = Q.left.low;
        }
        if (!(P.left.empty() && P.right.empty())) push(P);
        return true;
    }

    void trim_back_edges(Vertex u) {
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
            ConflictPair P = pop();
            if (P.left.low != kNone) side_[P.left.low] = -1;
        }
        if (stack_.empty()) return;
        ConflictPair P = pop();
        while (P.left.high != kNone && dst_[P.left.high] == u) P.left.high = ref_[P.left.high];
        if (P.left.high == kNone && P.left.low != kNone) {
            ref_[P.left.low] = P.right.low;
            side_[P.left.low] = -1;
            P.left.low = kNone;
        }
        while (P.right.high != kNone && dst_[P.right.high] == u) P.right.high = ref_[P.right.high];
        if (P.right.high == kNone && P.right.low != kNone) {
            ref_[P.right.low] = P.left.low;
            side_[P.right.low] = -1;
            P.right.low = kNone;
        }
        push(P);
    }

    int sign(int e) {
        if (ref_[e] != kNone) {
            side_[e] = side_[e] * sign(ref_[e]);
            ref_[e] = kNone;
        }
        return side_[e];
    }

    // Rotation insertion helpers; cw_/ccw_ are indexed by the dart (v, w).
    void add_cw(Vertex start, Vertex end, Vertex reference) {
        const int d = dart(start, end);
        if (reference == kNone) {
            cw_[d] = end;
            ccw_[d] = end;
            first_[start] = end;
            return;
        }
        const int dr = dart(start, reference);
        const Vertex after = cw_[dr];
        cw_[dr] = end;
        ccw_[d] = reference;
        cw_[d] = after;
        ccw_[dart(start, after)] = end;
    }

    void add_ccw(Vertex start, Vertex end, Vertex reference) {
        if (reference == kNone) {
            add_cw(start, end, kNone);
            return;
        }
        add_cw(start, end, ccw_[dart(start, reference)]);
        if (reference == first_[start]) first_[start] = end;
    }

    void add_first(Vertex start, Vertex end) { add_ccw(start, end, first_[start]); }

    void place(Vertex v) {
        for (int ei : ordered_[v]) {
            const Vertex w = dst_[ei];
            if (ei == parent_edge_[w]) {
                add_first(w, v);
                left_ref_[v] = w;
                right_ref_[v] = w;
                place(w);
            } else if (side_[ei] == 1) {
                add_cw(w, v, right_ref_[w]);
            } else {
                add_ccw(w, v, left_ref_[w]);
                left_ref_[w] = v;
            }
        }
    }

    const Graph& g_;
    int n_;
    int m_;
    std::vector<int> dart_offset_;
    std::vector<int> dart_edge_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<Vertex> roots_;
    std::vector<Vertex> src_;
    std::vector<Vertex> dst_;
    std::vector<char> oriented_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> ordered_;
    std::vector<int> lowpt_;
    std::vector<int> lowpt2_;
    std::vector<int> nesting_depth_;
    std::vector<int> ref_;
    std::vector<int> side_;
    std::vector<int> lowpt_edge_;
    std::vector<int> stack_bottom_;
    std::vector<ConflictPair> stack_;
    int next_pair_id_ = 1;

    std::vector<Vertex> cw_;
    std::vector<Vertex> ccw_;
    std::vector<Vertex> first_;
    std::vector<Vertex> left_ref_;
    std::vector<Vertex> right_ref_;
};

// Follows a chain of degree-2 vertices from branch vertex `b` through `next`.
std::vector<Vertex> trace_chain(const std::vector<std::vector<Vertex>>& adj, const std::vector<char>& branch,
                                Vertex b, Vertex next) {
    std::vector<Vertex> path{b};
    Vertex prev = b;
    Vertex cur = next;
    while (!branch[cur]) {
        path.push_back(cur);
        Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    path.push_back(cur);
    return path;
}

}  // namespace

bool is_planar(const Graph& g) { return LeftRight(g).test(); }

std::optional<RotationSystem> lr_planar_embedding(const Graph& g) {
    LeftRight lr(g);
    if (!lr.test()) return std::nullopt;
    return lr.embed();
}

KuratowskiWitness kuratowski_witness(const Graph& g) {
    if (is_planar(g)) throw std::invalid_argument("kuratowski_witness: graph is planar");

    // Delete every edge whose removal keeps the graph non-planar; what
    // survives is an edge-minimal non-planar subgraph, i.e. a subdivision.
    std::vector<Edge> kept = g.edges();
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<Edge> trial = kept;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!is_planar(Graph::from_edges(g.order(), trial))) kept = std::move(trial);
        else ++i;
    }

    std::vector<std::vector<Vertex>> adj(g.order());
    for (const auto& [u, v] : kept) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    KuratowskiWitness w;
    w.edges = kept;
    std::vector<char> branch(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (adj[v].size() >= 3) {
            branch[v] = 1;
            w.branch_vertices.push_back(v);
        }
    }
    w.kind = w.branch_vertices.size() == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
    for (Vertex b : w.branch_vertices) {
        for (Vertex x : adj[b]) {
            auto path = trace_chain(adj, branch, b, x);
            if (path.front() < path.back() ||
                (path.front() == path.back() && path[1] < path[path.size() - 2]))
                w.paths.push_back(std::move(path));
        }
    }
    std::sort(w.paths.begin(), w.paths.end());
    return w;
}

bool verify_kuratowski_witness(const Graph& g, const KuratowskiWitness& w) {
    for (const auto& [u, v] : w.edges)
        if (!g.valid_vertex(u) || !g.valid_vertex(v) || !g.adjacent(u, v)) return false;
    std::map<Vertex, int> deg;
    for (const auto& [u, v] : w.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<Vertex> branch;
    for (const auto& [v, d] : deg) {
        if (d >= 3) branch.push_back(v);
        else if (d != 2) return false;
    }
    if (branch != w.branch_vertices) return false;
    const bool k5 = w.kind == KuratowskiKind::K5;
    const std::size_t want_branch = k5 ? 5 : 6;
    const int want_degree = k5 ? 4 : 3;
    if (branch.size() != want_branch || w.paths.size() != (k5 ? 10u : 9u)) return false;
    for (Vertex b : branch)
        if (deg[b] != want_degree) return false;

    // Each pair of branch vertices joined at most once; K3,3 needs a bipartition.
    std::map<std::pair<Vertex, Vertex>, int> joined;
    for (const auto& p : w.paths) {
        Vertex a = std::min(p.front(), p.back());
        Vertex b = std::max(p.front(), p.back());
        if (a == b || ++joined[{a, b}] > 1) return false;
    }
    if (k5) return joined.size() == 10;
    std::vector<int> side(g.order(), -1);
    side[branch[0]] = 0;
    for (int round = 0; round < 6; ++round)
        for (const auto& [ab, cnt] : joined) {
            auto [a, b] = ab;
            if (side[a] >= 0 && side[b] < 0) side[b] = 1 - side[a];
            if (side[b] >= 0 && side[a] < 0) side[a] = 1 - side[b];
        }
    for (const auto& [ab, cnt] : joined)
        if (side[ab.first] < 0 || side[ab.first] == side[ab.second]) return false;
    return joined.size() == 9;
}

}  // namespace planardist
