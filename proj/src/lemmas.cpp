#include "planardist/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

#include "planardist/classify.hpp"
#include "planardist/connectivity.hpp"
#include "planardist/distance.hpp"

namespace planardist {

namespace {

std::vector<std::vector<Vertex>> active_by_level(const Graph& g, Vertex root) {
    const LevelStructure ls = level_sets(g, root);
    const std::vector<int> dist = bfs_distances(g, root);
    std::vector<std::vector<Vertex>> out;
    for (int i = 1; i + 1 < static_cast<int>(ls.levels.size()); ++i) {
        std::vector<Vertex> a;
        for (Vertex u : ls.levels[i]) {
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == i + 1) {
                    a.push_back(u);
                    break;
                }
            }
        }
        out.push_back(std::move(a));
    }
    return out;
}

Graph face_sharing_graph(const std::vector<Vertex>& active, const std::vector<FaceWalk>& faces, int skip_face,
                         int order) {
    std::vector<int> local(order, -1);
    for (std::size_t k = 0; k < active.size(); ++k) local[active[k]] = static_cast<int>(k);
    std::vector<Edge> edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<int>(f) == skip_face) continue;
        std::vector<int> on;
        for (Vertex x : faces[f])
            if (local[x] >= 0) on.push_back(local[x]);
        std::sort(on.begin(), on.end());
        on.erase(std::unique(on.begin(), on.end()), on.end());
        for (std::size_t a = 0; a < on.size(); ++a)
            for (std::size_t b = a + 1; b < on.size(); ++b) edges.emplace_back(on[a], on[b]);
    }
    return Graph::from_edges(static_cast<int>(active.size()), edges);
}

Embedding lemma_embedding(const Graph& g, LemmaId id, int& skip_face) {
    skip_face = -1;
    if (id == LemmaId::L3_3) {
        auto emb = outerplane_embedding(g);
        if (!emb) throw std::invalid_argument(to_string(id) + " requires an outerplanar graph");
        skip_face = *emb->outer_face;
        return *emb;
    }
    auto r = embed_planar(g);
    if (!std::holds_alternative<Embedding>(r)) throw std::invalid_argument(to_string(id) + " requires a planar graph");
    return std::get<Embedding>(std::move(r));
}

// Returns the local indices of a violation at this level, or empty.
std::vector<int> find_violation(LemmaId id, const Graph& h) {
    const int k = h.order();
    switch (id) {
        case LemmaId::L3_1a:
            for (int u = 0; u < k; ++u)
                if (h.degree(u) < 2) return {u};
            return {};
        case LemmaId::L3_1b:
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    for (int c = b + 1; c < k; ++c) {
                        bool escapes = false;
                        for (int x : {a, b, c})
                            for (Vertex y : h.neighbors(x))
                                if (y != a && y != b && y != c) escapes = true;
                        if (!escapes) return {a, b, c};
                    }
            return {};
        case LemmaId::L3_1c:
            for (int u = 0; u < k; ++u) {
                auto nb = h.neighbors(u);
                bool found = false;
                for (std::size_t p = 0; p < nb.size() && !found; ++p)
                    for (std::size_t q = p + 1; q < nb.size() && !found; ++q) {
                        bool only_u = true;
                        for (Vertex z : h.neighbors(nb[p]))
                            if (z != u && h.adjacent(z, nb[q])) only_u = false;
                        found = only_u;
                    }
                if (!found) return {u};
            }
            return {};
        case LemmaId::L3_2:
        case LemmaId::L3_3:
            for (int u = 0; u < k; ++u)
                if (h.degree(u) < 1) return {u};
            return {};
    }
    return {};
}

}  // namespace

ActiveStructure active_sets(const Graph& g, Vertex root, const Embedding& emb, int skip_face) {
    ActiveStructure s;
    s.root = root;
    s.active_sets = active_by_level(g, root);
    s.has_face_graphs = true;
    for (const auto& a : s.active_sets) s.face_sharing.push_back(face_sharing_graph(a, emb.faces, skip_face, g.order()));
    return s;
}

ActiveStructure active_sets(const Graph& g, Vertex root) {
    if (!is_connected(g)) throw std::invalid_argument("active_sets: graph is disconnected");
    if (!g.valid_vertex(root)) throw std::invalid_argument("active_sets: invalid root " + std::to_string(root));
    auto r = embed_planar(g);
    if (auto* emb = std::get_if<Embedding>(&r)) return active_sets(g, root, *emb);
    ActiveStructure s;
    s.root = root;
    s.active_sets = active_by_level(g, root);
    return s;
}

std::string to_string(LemmaId id) {
    switch (id) {
        case LemmaId::L3_1a: return "L3.1a";
        case LemmaId::L3_1b: return "L3.1b";
        case LemmaId::L3_1c: return "L3.1c";
        case LemmaId::L3_2: return "L3.2";
        case LemmaId::L3_3: return "L3.3";
    }
    return "?";
}

LemmaId parse_lemma_id(const std::string& text) {
    for (LemmaId id : {LemmaId::L3_1a, LemmaId::L3_1b, LemmaId::L3_1c, LemmaId::L3_2, LemmaId::L3_3})
        if (to_string(id) == text) return id;
    throw std::invalid_argument("unknown lemma id '" + text + "'");
}

void require_lemma_class(const Graph& g, LemmaId id) {
    const std::string name = to_string(id);
    if (!is_connected(g)) throw std::invalid_argument(name + " requires a connected graph");
    auto need_kappa = [&](int k) {
        if (g.order() <= k) throw std::invalid_argument(name + " requires " + std::to_string(k) + "-connected (n too small)");
        const int kappa = connectivity_number(g);
        if (kappa < k)
            throw std::invalid_argument(name + " requires " + std::to_string(k) + "-connected (kappa = " +
                                        std::to_string(kappa) + ")");
    };
    switch (id) {
        case LemmaId::L3_1a:
        case LemmaId::L3_1b:
        case LemmaId::L3_1c:
            if (!is_planar(g)) throw std::invalid_argument(name + " requires planar");
            need_kappa(id == LemmaId::L3_1a ? 3 : id == LemmaId::L3_1b ? 4 : 5);
            break;
        case LemmaId::L3_2:
            if (!classify(g).quadrangulation) throw std::invalid_argument(name + " requires quadrangulation");
            break;
        case LemmaId::L3_3:
            if (!is_outerplanar(g)) throw std::invalid_argument(name + " requires outerplanar");
            need_kappa(2);
            break;
    }
}

std::vector<LemmaReport> check_lemma(const Graph& g, LemmaId id) {
    require_lemma_class(g, id);
    int skip_face = -1;
    const Embedding emb = lemma_embedding(g, id, skip_face);
    std::vector<LemmaReport> out;
    for (Vertex root = 0; root < g.order(); ++root) {
        const ActiveStructure s = active_sets(g, root, emb, skip_face);
        for (int level = 1; level <= s.levels(); ++level) {
            LemmaReport r;
            r.lemma = id;
            r.root = root;
            r.level = level;
            const auto bad = find_violation(id, s.h(level));
            if (!bad.empty()) {
                r.pass = false;
                LemmaCounterexample cx;
                cx.level = level;
                for (int x : bad) cx.vertices.push_back(s.active(level)[x]);
                r.counterexample = std::move(cx);
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

bool verify_counterexample(const Graph& g, LemmaId id, Vertex root, const LemmaCounterexample& cx) {
    if (!g.valid_vertex(root) || cx.vertices.empty()) return false;
    int skip_face = -1;
    const Embedding emb = lemma_embedding(g, id, skip_face);
    const std::vector<int> dist = bfs_distances(g, root);
    const int i = cx.level;
    auto active = [&](Vertex u) {
        if (dist[u] != i) return false;
        for (Vertex w : g.neighbors(u))
            if (dist[w] == i + 1) return true;
        return false;
    };
    auto share = [&](Vertex a, Vertex b) {
        for (std::size_t f = 0; f < emb.faces.size(); ++f) {
            if (static_cast<int>(f) == skip_face) continue;
            const auto& w = emb.faces[f];
            if (std::find(w.begin(), w.end(), a) != w.end() && std::find(w.begin(), w.end(), b) != w.end()) return true;
        }
        return false;
    };
    std::vector<Vertex> a_i;
    for (Vertex u = 0; u < g.order(); ++u)
        if (active(u)) a_i.push_back(u);
    for (Vertex u : cx.vertices)
        if (!active(u)) return false;
    auto h_neighbors = [&](Vertex u) {
        std::vector<Vertex> out;
        for (Vertex x : a_i)
            if (x != u && share(u, x)) out.push_back(x);
        return out;
    };

    const Vertex u = cx.vertices[0];
    switch (id) {
        case LemmaId::L3_1a: return h_neighbors(u).size() < 2;
        case LemmaId::L3_2:
        case LemmaId::L3_3: return h_neighbors(u).empty();
        case LemmaId::L3_1b: {
            if (cx.vertices.size() != 3) return false;
            const auto& t = cx.vertices;
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return false;
            for (Vertex x : t)
                for (Vertex y : h_neighbors(x))
                    if (std::find(t.begin(), t.end(), y) == t.end()) return false;
            return true;
        }
        case LemmaId::L3_1c: {
            const auto nb = h_neighbors(u);
            for (Vertex w : nb)
                for (Vertex x : nb) {
                    if (w == x) continue;
                    bool only_u = true;
                    for (Vertex z : a_i)
                        if (z != u && z != w && z != x && share(w, z) && share(x, z)) only_u = false;
                    if (only_u) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace planardist
