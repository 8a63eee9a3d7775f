#include "planardist/classify.hpp"

#include <stdexcept>
#include <string>

#include "planardist/connectivity.hpp"
#include "planardist/embedding.hpp"
#include "planardist/planarity.hpp"

namespace planardist {

namespace {

bool complete(const Graph& g) {
    const long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

template <typename Keep>
bool no_addable_edge(const Graph& g, Keep keep) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && keep(g.with_edge(u, v))) return false;
    return true;
}

void cross_check(const char* name, bool by_count, bool literal, const Graph& g) {
    if (by_count != literal)
        throw std::logic_error(std::string("classify: ") + name + " edge-count test (" + (by_count ? "yes" : "no") +
                               ") disagrees with literal maximality (" + (literal ? "yes" : "no") +
                               ") at n=" + std::to_string(g.order()));
}

}  // namespace

ClassFlags classify(const Graph& g) {
    ClassFlags f;
    const long long n = g.order();
    const long long m = g.edge_count();
    f.connected = is_connected(g);
    f.planar = is_planar(g);
    f.outerplanar = f.planar && is_outerplanar(g);
    f.bipartite = is_bipartite(g);
    f.maximal_planar = f.planar && (n < 3 ? complete(g) : m == 3 * n - 6);
    f.maximal_outerplanar = f.outerplanar && (n < 3 ? complete(g) : m == 2 * n - 3);
    if (f.connected && f.planar && f.bipartite && n >= 4 && m == 2 * n - 4) {
        auto emb = std::get<Embedding>(embed_planar(g));
        f.quadrangulation = true;
        for (const auto& face : emb.faces)
            if (face.size() != 4) f.quadrangulation = false;
    }
    if (n <= kLiteralCheckOrder) {
        cross_check("maximal_planar", f.maximal_planar, literally_maximal_planar(g), g);
        cross_check("maximal_outerplanar", f.maximal_outerplanar, literally_maximal_outerplanar(g), g);
        cross_check("quadrangulation", f.quadrangulation, literally_quadrangulation(g), g);
    }
    return f;
}

bool literally_maximal_planar(const Graph& g) {
    return is_planar(g) && no_addable_edge(g, [](const Graph& h) { return is_planar(h); });
}

bool literally_maximal_outerplanar(const Graph& g) {
    return is_outerplanar(g) && no_addable_edge(g, [](const Graph& h) { return is_outerplanar(h); });
}

bool literally_quadrangulation(const Graph& g) {
    if (g.order() < 3 || connectivity_number(g) < 2) return false;
    if (!is_planar(g) || !is_bipartite(g)) return false;
    return no_addable_edge(g, [](const Graph& h) { return is_planar(h) && is_bipartite(h); });
}

}  // namespace planardist
