// embedding.hpp - combinatorial embeddings: rotation systems and face walks.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planardist/graph.hpp"
#include "planardist/planarity.hpp"

namespace planardist {

using FaceWalk = std::vector<Vertex>;

struct Embedding {
    RotationSystem rotation;
    std::vector<FaceWalk> faces;
    std::optional<int> outer_face;  // set for outerplane embeddings
};

// Walks every face of the rotation system. The dart after (u -> v) is
// (v -> w) where w follows u clockwise around v. Faces are discovered by
// scanning darts in vertex order and listed by the tails of their darts.
// Throws std::invalid_argument if the rotation is not a symmetric set of
// simple cyclic neighbor lists.
std::vector<FaceWalk> trace_faces(const RotationSystem& rotation);

// Throws std::invalid_argument unless rotation[v] is a permutation of g's N(v).
void validate_rotation(const Graph& g, const RotationSystem& rotation);

// Builds faces from a rotation and checks Euler's formula for connected g.
Embedding make_embedding(const Graph& g, RotationSystem rotation);

// Planar embedding or Kuratowski subdivision. Requires a connected graph.
std::variant<Embedding, KuratowskiWitness> embed_planar(const Graph& g);

// Embedding with every vertex on the outer face, or nullopt if g is not
// outerplanar. Requires a connected graph.
std::optional<Embedding> outerplane_embedding(const Graph& g);

bool is_outerplanar(const Graph& g);

// Index of the face walk that traverses the dart (u -> v), or -1.
int face_of_dart(const Embedding& emb, Vertex u, Vertex v);

// "v: a b c" per line, neighbors in clockwise order.
std::string rotation_text(const RotationSystem& rotation);
RotationSystem parse_rotation_text(const std::string& text);

}  // namespace planardist
