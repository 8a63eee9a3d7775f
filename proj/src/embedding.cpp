#include "planardist/embedding.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planardist {

namespace {

// Position of `w` in each rotation list, so successor lookups are O(log deg).
class DartIndex {
public:
    explicit DartIndex(const RotationSystem& rot) : rot_(rot), offset_(rot.size() + 1, 0) {
        const int n = static_cast<int>(rot.size());
        for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot[v].size());
        sorted_.resize(n);
        for (int v = 0; v < n; ++v) {
            auto& s = sorted_[v];
            for (std::size_t k = 0; k < rot[v].size(); ++k) {
                const Vertex w = rot[v][k];
                if (w < 0 || w >= n || w == v)
                    throw std::invalid_argument("rotation of vertex " + std::to_string(v) +
                                                " lists invalid neighbor " + std::to_string(w));
                s.emplace_back(w, static_cast<int>(k));
            }
            std::sort(s.begin(), s.end());
            for (std::size_t k = 1; k < s.size(); ++k)
                if (s[k].first == s[k - 1].first)
                    throw std::invalid_argument("rotation of vertex " + std::to_string(v) +
                                                " repeats neighbor " + std::to_string(s[k].first));
        }
        for (int v = 0; v < n; ++v)
            for (Vertex w : rot[v])
                if (position(w, v) < 0)
                    throw std::invalid_argument("rotation is not symmetric at edge " + std::to_string(v) +
                                                "-" + std::to_string(w));
    }

    int position(Vertex v, Vertex w) const {
        const auto& s = sorted_[v];
        auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(w, -1));
        return (it != s.end() && it->first == w) ? it->second : -1;
    }
    int id(Vertex v, Vertex w) const { return offset_[v] + position(v, w); }
    int dart_count() const { return offset_.back(); }
    Vertex successor(Vertex v, Vertex u) const {
        const auto& r = rot_[v];
        return r[(position(v, u) + 1) % r.size()];
    }

private:
    const RotationSystem& rot_;
    std::vector<int> offset_;
    std::vector<std::vector<std::pair<Vertex, int>>> sorted_;
};

}  // namespace

std::vector<FaceWalk> trace_faces(const RotationSystem& rotation) {
    DartIndex idx(rotation);
    std::vector<char> used(idx.dart_count(), 0);
    std::vector<FaceWalk> faces;
    for (Vertex u = 0; u < static_cast<Vertex>(rotation.size()); ++u) {
        for (Vertex v : rotation[u]) {
            if (used[idx.id(u, v)]) continue;
            FaceWalk walk;
            Vertex a = u, b = v;
            while (!used[idx.id(a, b)]) {
                used[idx.id(a, b)] = 1;
                walk.push_back(a);
                const Vertex c = idx.successor(b, a);
                a = b;
                b = c;
            }
            if (a != u || b != v) throw std::invalid_argument("rotation yields a non-closed face walk");
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

void validate_rotation(const Graph& g, const RotationSystem& rotation) {
    if (static_cast<int>(rotation.size()) != g.order())
        throw std::invalid_argument("rotation has " + std::to_string(rotation.size()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Vertex> sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        auto nb = g.neighbors(v);
        if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end()))
            throw std::invalid_argument("rotation of vertex " + std::to_string(v) + " does not match its neighbors");
    }
}

Embedding make_embedding(const Graph& g, RotationSystem rotation) {
    validate_rotation(g, rotation);
    Embedding emb;
    emb.rotation = std::move(rotation);
    emb.faces = trace_faces(emb.rotation);
    if (g.order() == 1) emb.faces.push_back({0});
    if (is_connected(g) && g.order() > 0) {
        const long long f = static_cast<long long>(emb.faces.size());
        if (g.order() - g.edge_count() + f != 2)
            throw std::invalid_argument("rotation is not planar: n - m + f = " +
                                        std::to_string(g.order() - g.edge_count() + f));
    }
    return emb;
}

std::variant<Embedding, KuratowskiWitness> embed_planar(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("embed_planar: graph is disconnected");
    auto rot = lr_planar_embedding(g);
    if (!rot) return kuratowski_witness(g);
    try {
        return make_embedding(g, std::move(*rot));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("left-right embedding failed verification: ") + e.what());
    }
}

std::optional<Embedding> outerplane_embedding(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("outerplane_embedding: graph is disconnected");
    const Vertex apex = g.order();
    auto rot = lr_planar_embedding(g.with_apex());
    if (!rot) return std::nullopt;

    // Dropping the apex merges its incident faces into one face through every
    // vertex; that face is the outer one.
    RotationSystem base(g.order());
    Vertex anchor = -1, anchor_next = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& r = (*rot)[v];
        const auto pos = std::find(r.begin(), r.end(), apex) - r.begin();
        for (std::size_t k = 1; k < r.size(); ++k) base[v].push_back(r[(pos + k) % r.size()]);
        if (anchor < 0 && !base[v].empty()) {
            anchor = v;
            anchor_next = base[v].front();
        }
    }
    Embedding emb;
    try {
        emb = make_embedding(g, std::move(base));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("outerplane embedding failed verification: ") + e.what());
    }
    if (anchor < 0) {
        emb.outer_face = emb.faces.empty() ? std::nullopt : std::optional<int>(0);
        return emb;
    }
    const int outer = face_of_dart(emb, anchor, anchor_next);
    std::vector<char> seen(g.order(), 0);
    for (Vertex v : emb.faces.at(outer)) seen[v] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::logic_error("outer face misses a vertex");
    emb.outer_face = outer;
    return emb;
}

bool is_outerplanar(const Graph& g) { return is_planar(g.with_apex()); }

int face_of_dart(const Embedding& emb, Vertex u, Vertex v) {
    for (std::size_t f = 0; f < emb.faces.size(); ++f) {
        const auto& w = emb.faces[f];
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] == u && w[(k + 1) % w.size()] == v && w.size() > 1) return static_cast<int>(f);
    }
    return -1;
}

std::string rotation_text(const RotationSystem& rotation) {
    std::ostringstream out;
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        out << v << ':';
        for (Vertex w : rotation[v]) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

RotationSystem parse_rotation_text(const std::string& text) {
    RotationSystem rot;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("rotation line without ':': " + line);
        const int v = std::stoi(line.substr(0, colon));
        if (v != static_cast<int>(rot.size()))
            throw std::invalid_argument("rotation lines out of order at vertex " + std::to_string(v));
        std::istringstream nb(line.substr(colon + 1));
        std::vector<Vertex> r;
        for (Vertex w; nb >> w;) r.push_back(w);
        rot.push_back(std::move(r));
    }
    trace_faces(rot);
    return rot;
}

}  // namespace planardist
